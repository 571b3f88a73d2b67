#pragma once

// Structural machinery: weak/strong components, block decomposition of the
// underlying graph lifted back to the digraph, directed Gallai forests,
// arc-connectivity via min cuts, the low-cut colour profile, twins/clusters,
// and the bipartite auxiliary graph with its 2-forests.

#include <optional>
#include <string>
#include <vector>

#include "dicritix/colouring.hpp"
#include "dicritix/digraph.hpp"

namespace dicritix {

// Weak components, each reported as a vertex set, ordered by smallest member.
// The empty digraph yields the empty list; predicates that need the "empty
// set is connected" convention apply max(1, .) themselves.
std::vector<VertexSet> components(const Digraph& G);
std::vector<VertexSet> strong_components(const Digraph& G);

inline bool is_connected(const Digraph& G) { return components(G).size() <= 1; }

enum class BlockKind { SingleArc, Cycle, SymmetricOddCycle, SymmetricComplete, Other };

std::string block_kind_name(BlockKind k);

struct Block {
    VertexSet vertices;
    BlockKind kind;
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // ordered by smallest contained vertex
    VertexSet separating_vertices;

    bool is_leaf(size_t i) const {
        return (blocks[i].vertices & separating_vertices).count() <= 1;
    }
};

// Biconnected decomposition of the underlying graph lifted to the digraph.
// Isolated vertices appear as singleton blocks (complete digraphs on one
// vertex), so the decomposition covers every vertex.
BlockDecomposition blocks(const Digraph& G);

BlockKind classify_block(const Digraph& G, const VertexSet& B);

struct GallaiVerdict {
    bool is_gallai_forest;
    std::optional<Block> offending_block;
};

// True iff every block is a single arc, a directed cycle, a symmetric odd
// cycle or a symmetric complete digraph.
GallaiVerdict is_gallai_forest(const Digraph& G);

// Minimum over ordered bipartitions (V0, V1) of |A(V0, V1)|, via unit
// capacity max-flow.  Requires |V| >= 2.
int arc_connectivity(const Digraph& G);

// Lemma-style profile of a partition with a small arc cut.  Given a
// partition (V0, V1) with |A(V0, V1)| <= k-1, checks by exhausting all
// (k-1)-dicolourings of each side whether one side always colours its
// boundary V_i^* with a single colour while the other always uses k-1.
struct LowCutProfile {
    bool holds = false;
    int singleton_side = -1;  // the i with |phi_i(V_i^*)| = 1 always
    std::string detail;       // counterexample description when !holds
};

LowCutProfile low_cut_colour_profile(const Digraph& G, int k, const VertexSet& V0, const VertexSet& V1);

// Twins: identical closed in- and out-neighbourhoods (which forces a digon).
bool twins(const Digraph& G, int u, int v);

// Clusters: the maximal twin classes inside S = {u : d(u) = 2(k-1)},
// returned as a partition of S ordered by smallest member.
std::vector<VertexSet> clusters(const Digraph& G, int k);

// B(G, X, P): left side one vertex per component of G[X], right side one
// vertex per part of P (a partition of the components of G - X into unions
// of components); edge when any arc runs between the two in either
// direction.  Sides are ordered by smallest contained vertex.
struct BipartiteAux {
    std::vector<VertexSet> left;
    std::vector<VertexSet> right;
    std::vector<std::pair<int, int>> edges;  // (left index, right index)
};

BipartiteAux bipartite_aux(const Digraph& G, const VertexSet& X, const std::vector<VertexSet>& P);

// A 2-forest with respect to the left side: a forest on all vertices of B in
// which every left vertex has degree exactly 2.  Exhaustive backtracking.
std::optional<std::vector<std::pair<int, int>>> find_two_forest(const BipartiteAux& B);

// Plain bipartite graph builders used by tests and the verification
// predicates (left size, right size, edges as (l, r) index pairs).
struct BipartiteGraph {
    int left = 0, right = 0;
    std::vector<std::pair<int, int>> edges;
};

std::optional<std::vector<std::pair<int, int>>> find_two_forest(const BipartiteGraph& B);

}  // namespace dicritix
