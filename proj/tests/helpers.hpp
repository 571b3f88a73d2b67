#pragma once

// Shared test utilities: small builders, random digraphs and the
// brute-force isomorphism oracle (minimum over all vertex permutations),
// kept independent of the library's canonical-form search.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dicritix/digraph.hpp"
#include "dicritix/families.hpp"

namespace testutil {

using dicritix::Digraph;

// The five-vertex digraph with digons x~z, z~y, u~w and simple arcs
// x->y, y->u, y->w, u->x, w->x, on vertices z=0, x=1, y=2, u=3, w=4.
inline Digraph fig3() { return dicritix::gen_d3prime_fig3(1, 1, 1); }

inline Digraph relabel(const Digraph& G, const std::vector<int>& perm) {
    Digraph H(G.order());
    for (auto [u, v] : G.arcs()) H.add_arc(perm[u], perm[v]);
    return H;
}

inline Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
    Digraph G(n);
    std::bernoulli_distribution arc(p);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && arc(rng)) G.add_arc(u, v);
    return G;
}

// Packs the adjacency matrix of a labeled digraph row-major into a vector of
// bits; used by the naive oracle below.
inline std::vector<char> matrix_bits(const Digraph& G) {
    std::vector<char> bits(size_t(G.order()) * G.order(), 0);
    for (auto [u, v] : G.arcs()) bits[size_t(u) * G.order() + v] = 1;
    return bits;
}

// Naive canonical form: minimum matrix over all n! relabelings.  This is the
// independent oracle the fast canonical search is checked against.
inline std::vector<char> oracle_canonical(const Digraph& G) {
    const int n = G.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    do {
        std::vector<char> cur = matrix_bits(relabel(G, perm));
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All labeled digraphs on n vertices, by arc mask.
inline Digraph labeled_digraph(int n, std::uint64_t mask) {
    Digraph G(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u != v) {
                if ((mask >> bit) & 1) G.add_arc(u, v);
                ++bit;
            }
        }
    return G;
}

}  // namespace testutil

#include <functional>

#include "dicritix/structure.hpp"

namespace testutil {

// Exhaustive subset oracle for 2-forests, independent of the library's
// backtracking search.
inline bool oracle_has_two_forest(const dicritix::BipartiteGraph& B) {
    const int E = int(B.edges.size());
    for (std::uint32_t mask = 0; mask < (1u << E); ++mask) {
        std::vector<int> deg(B.left, 0);
        std::vector<int> parent(B.left + B.right);
        for (int i = 0; i < B.left + B.right; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        bool acyclic = true;
        for (int e = 0; e < E && acyclic; ++e) {
            if (!((mask >> e) & 1)) continue;
            ++deg[B.edges[e].first];
            int a = find(B.edges[e].first), b = find(B.left + B.edges[e].second);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        if (!acyclic) continue;
        bool ok = true;
        for (int l = 0; l < B.left; ++l)
            if (deg[l] != 2) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace testutil
