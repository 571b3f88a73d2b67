#pragma once

// Simple digraphs on dense vertices 0..n-1 (no loops, no parallel arcs) and
// the basic operators used everywhere else: neighbourhood profiles, degrees,
// excess, potential, deletion, contraction, substitution and the Dirac join.
//
// Digraph values are treated as immutable once built: every operation here is
// a pure function returning a fresh value, so instances can be shared freely
// between worker threads.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dicritix/rational.hpp"
#include "dicritix/vertex_set.hpp"

namespace dicritix {

class Digraph {
  public:
    Digraph() : n_(0) {}
    explicit Digraph(int n) : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("Digraph: negative order");
    }

    int order() const { return n_; }

    bool arc(int u, int v) const {
        check(u);
        check(v);
        return out_[u].contains(v);
    }
    bool digon(int u, int v) const { return arc(u, v) && arc(v, u); }

    void add_arc(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("Digraph: loop arc");
        out_[u].add(v);
        in_[v].add(u);
    }
    void remove_arc(int u, int v) {
        check(u);
        check(v);
        out_[u].remove(v);
        in_[v].remove(u);
    }

    const VertexSet& out(int v) const {
        check(v);
        return out_[v];
    }
    const VertexSet& in(int v) const {
        check(v);
        return in_[v];
    }

    int arc_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += out_[v].count();
        return m;
    }

    std::vector<std::pair<int, int>> arcs() const {  // lexicographic (source, target)
        std::vector<std::pair<int, int>> a;
        a.reserve(arc_count());
        for (int u = 0; u < n_; ++u)
            out_[u].for_each([&](int v) { a.emplace_back(u, v); });
        return a;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.n_ == b.n_ && a.out_ == b.out_; }
    friend bool operator!=(const Digraph& a, const Digraph& b) { return !(a == b); }

  private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex out of range");
    }

    int n_;
    std::vector<VertexSet> out_, in_;
};

// ---------------------------------------------------------------------------
// Neighbourhood profiles and degrees (the N^+/N^-/N^d/N^s operators).

struct NeighbourhoodProfile {
    VertexSet Nplus, Nminus, Nd, Ns, NsPlus, NsMinus;
};

inline NeighbourhoodProfile neighborhood_profile(const Digraph& G, int v) {
    NeighbourhoodProfile p;
    p.Nplus = G.out(v);
    p.Nminus = G.in(v);
    p.Nd = p.Nplus & p.Nminus;
    p.Ns = (p.Nplus | p.Nminus) - p.Nd;
    p.NsPlus = p.Ns & p.Nplus;
    p.NsMinus = p.Ns & p.Nminus;
    return p;
}

struct DegreeProfile {
    int dPlus = 0, dMinus = 0, d = 0, dMin = 0, dMax = 0;
};

inline DegreeProfile degrees(const Digraph& G, int v) {
    DegreeProfile d;
    d.dPlus = G.out(v).count();
    d.dMinus = G.in(v).count();
    d.d = d.dPlus + d.dMinus;
    d.dMin = std::min(d.dPlus, d.dMinus);
    d.dMax = std::max(d.dPlus, d.dMinus);
    return d;
}

inline int max_degree_any_direction(const Digraph& G) {  // Delta_max
    int m = 0;
    for (int v = 0; v < G.order(); ++v) m = std::max(m, degrees(G, v).dMax);
    return m;
}

// ---------------------------------------------------------------------------
// Excess and potential.

// eps_k(X) = sum over u in X of (d(u) - 2(k-1)); for X = V(G) this equals
// 2|A| - 2(k-1)|V|.
inline long long excess(const Digraph& G, int k, const VertexSet& X) {
    if (k < 2) throw std::invalid_argument("excess: k must be >= 2");
    long long e = 0;
    X.for_each([&](int v) { e += degrees(G, v).d - 2 * (k - 1); });
    return e;
}

inline long long excess(const Digraph& G, int k) { return excess(G, k, VertexSet::universe(G.order())); }

inline Rat default_potential_eps(int k) { return Rat(1, 2) - Rat(1, k - 1); }

// rho(G) = (k-1+eps)|V| - |A|, exact.  Stated in the source material for
// k >= 5 but well defined from k = 4 on; smaller k rejected.
inline Rat potential(const Digraph& G, int k, Rat eps) {
    if (k < 4) throw std::invalid_argument("potential: k must be >= 4");
    if (!(eps > Rat(0)) || eps > default_potential_eps(k))
        throw std::invalid_argument("potential: eps outside (0, 1/2 - 1/(k-1)]");
    return (Rat(k - 1) + eps) * Rat(G.order()) - Rat(G.arc_count());
}

inline Rat potential(const Digraph& G, int k) { return potential(G, k, default_potential_eps(k)); }

// ---------------------------------------------------------------------------
// Subdigraphs and arc surgery.

inline Digraph induced(const Digraph& G, const VertexSet& X) {
    std::vector<int> keep = X.members();
    std::vector<int> idx(G.order(), -1);
    for (size_t i = 0; i < keep.size(); ++i) idx[keep[i]] = int(i);
    Digraph H(int(keep.size()));
    for (int u : keep)
        G.out(u).for_each([&](int v) {
            if (idx[v] >= 0) H.add_arc(idx[u], idx[v]);
        });
    return H;
}

inline Digraph remove_vertex(const Digraph& G, int x) {
    VertexSet X = VertexSet::universe(G.order());
    X.remove(x);
    return induced(G, X);
}

inline Digraph without_arc(const Digraph& G, int u, int v) {
    if (!G.arc(u, v)) throw std::invalid_argument("without_arc: arc absent");
    Digraph H = G;
    H.remove_arc(u, v);
    return H;
}

inline Digraph reversal(const Digraph& G) {
    Digraph H(G.order());
    for (auto [u, v] : G.arcs()) H.add_arc(v, u);
    return H;
}

// ---------------------------------------------------------------------------
// Contraction.  Parts are merged, untouched vertices come first (in original
// order) in the quotient, then one fresh id per part in part order; the
// projection map records where each original vertex went.

struct Contraction {
    Digraph quotient;
    std::vector<int> projection;  // original vertex -> quotient vertex
};

inline Contraction contract(const Digraph& G, const std::vector<VertexSet>& parts) {
    const int n = G.order();
    std::vector<int> part_of(n, -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw std::invalid_argument("contract: empty part");
        parts[p].for_each([&](int v) {
            if (v >= n) throw std::out_of_range("contract: part vertex out of range");
            if (part_of[v] != -1) throw std::invalid_argument("contract: overlapping parts");
            part_of[v] = int(p);
        });
    }
    std::vector<int> proj(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1) proj[v] = next++;
    std::vector<int> part_id(parts.size());
    for (size_t p = 0; p < parts.size(); ++p) part_id[p] = next++;
    for (int v = 0; v < n; ++v)
        if (part_of[v] != -1) proj[v] = part_id[part_of[v]];

    Digraph Q(next);
    for (auto [u, v] : G.arcs())
        if (proj[u] != proj[v] && !Q.arc(proj[u], proj[v])) Q.add_arc(proj[u], proj[v]);
    return {std::move(Q), std::move(proj)};
}

// ---------------------------------------------------------------------------
// Substitution G(G'_1, ..., G'_n): blow every vertex of G up into the given
// digraph; between two blobs joined by an arc of G, all arcs one way.

inline Digraph substitute(const Digraph& G, const std::vector<Digraph>& blobs) {
    if (int(blobs.size()) != G.order()) throw std::invalid_argument("substitute: arity mismatch");
    std::vector<int> base(G.order() + 1, 0);
    for (int v = 0; v < G.order(); ++v) base[v + 1] = base[v] + blobs[v].order();
    Digraph H(base[G.order()]);
    for (int v = 0; v < G.order(); ++v)
        for (auto [a, b] : blobs[v].arcs()) H.add_arc(base[v] + a, base[v] + b);
    for (auto [u, v] : G.arcs())
        for (int a = 0; a < blobs[u].order(); ++a)
            for (int b = 0; b < blobs[v].order(); ++b) H.add_arc(base[u] + a, base[v] + b);
    return H;
}

// Dirac join: disjoint union plus all arcs both ways between the two sides.
inline Digraph dirac_join(const Digraph& G1, const Digraph& G2) {
    const int n1 = G1.order();
    Digraph H(n1 + G2.order());
    for (auto [u, v] : G1.arcs()) H.add_arc(u, v);
    for (auto [u, v] : G2.arcs()) H.add_arc(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < G2.order(); ++v) {
            H.add_arc(u, n1 + v);
            H.add_arc(n1 + v, u);
        }
    return H;
}

inline Digraph disjoint_union(const Digraph& G1, const Digraph& G2) {
    const int n1 = G1.order();
    Digraph H(n1 + G2.order());
    for (auto [u, v] : G1.arcs()) H.add_arc(u, v);
    for (auto [u, v] : G2.arcs()) H.add_arc(n1 + u, n1 + v);
    return H;
}

}  // namespace dicritix
