#pragma once

// Dicriticality testing, dicritical-subdigraph extraction and the per-vertex
// / per-arc sanity predicates every dicritical digraph must satisfy.

#include <optional>
#include <utility>

#include "dicritix/colouring.hpp"
#include "dicritix/digraph.hpp"

namespace dicritix {

struct CriticalityReport {
    int chi = 0;
    bool is_dicritical = false;
    std::optional<std::pair<int, int>> violating_arc;  // deleting it keeps chi >= k
    bool min_degree_ok = false;   // d(v) >= 2(k-1) for all v
    bool dmin_ok = false;         // min(d+, d-) >= k-1 for all v
    bool induced_cycle_ok = false;
    bool simple_neighbour_duality_ok = false;  // N^{s+}(x) empty  <=>  N^{s-}(x) empty
};

struct SanityReport {
    bool min_degree_ok = true;
    bool dmin_ok = true;
    bool induced_cycle_ok = true;
    bool simple_neighbour_duality_ok = true;
    bool all() const { return min_degree_ok && dmin_ok && induced_cycle_ok && simple_neighbour_duality_ok; }
};

// True iff arc (u, v) lies on an induced cycle of G (the induced subdigraph
// on the cycle's vertices is exactly that cycle).  Exhaustive over vertex
// subsets; meant for small n.
bool arc_on_induced_cycle(const Digraph& G, int u, int v);

SanityReport sanity_lemmas(const Digraph& G, int k);

bool has_isolated_vertex(const Digraph& G);

// First arc whose deletion keeps chi >= k, if any.
std::optional<std::pair<int, int>> find_uncritical_arc(const Digraph& G, int k);

// Same verdict as is_k_dicritical().is_dicritical but without the sanity
// predicates; this is the hot path for the enumeration pipeline.
bool is_k_dicritical_fast(const Digraph& G, int k);

// Dicriticality via arc deletions plus an isolated-vertex check: chi(G) = k,
// no isolated vertex (except K_1 for k = 1), and every single-arc deletion
// drops chi below k.
CriticalityReport is_k_dicritical(const Digraph& G, int k);

inline bool is_dicritical(const Digraph& G) {
    int chi = dichromatic_number(G).chi;
    return chi >= 1 && is_k_dicritical(G, chi).is_dicritical;
}

// Greedy extraction of a k-dicritical subdigraph: repeatedly delete, in a
// fixed order (arcs lexicographically, then vertices ascending), anything
// whose removal keeps chi >= k.  Requires chi(G) >= k.
Digraph extract_k_dicritical(const Digraph& G, int k);

}  // namespace dicritix
