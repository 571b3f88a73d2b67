#include "dicritix/criticality.hpp"

#include <stdexcept>

namespace dicritix {

namespace {

// G[S] is exactly a directed cycle through the arc (u, v).
bool subset_is_induced_cycle_through(const Digraph& G, const VertexSet& S, int u, int v) {
    Digraph H = induced(G, S);
    std::vector<int> vs = S.members();
    const int m = int(vs.size());
    if (H.arc_count() != m) return false;
    for (int i = 0; i < m; ++i)
        if (H.out(i).count() != 1 || H.in(i).count() != 1) return false;
    // one cycle covering all of S, containing (u, v)
    std::vector<int> idx(G.order(), -1);
    for (int i = 0; i < m; ++i) idx[vs[i]] = i;
    int steps = 0, cur = idx[u];
    do {
        cur = H.out(cur).first();
        ++steps;
    } while (cur != idx[u] && steps <= m);
    return steps == m && H.arc(idx[u], idx[v]);
}

}  // namespace

bool arc_on_induced_cycle(const Digraph& G, int u, int v) {
    if (!G.arc(u, v)) throw std::invalid_argument("arc_on_induced_cycle: arc absent");
    if (G.arc(v, u)) return true;  // a digon is an induced 2-cycle
    const int n = G.order();
    if (n > 20) throw std::invalid_argument("arc_on_induced_cycle: order too large for subset search");
    std::vector<int> others;
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) others.push_back(w);
    const int t = int(others.size());
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        VertexSet S = VertexSet::of(n, {u, v});
        for (int i = 0; i < t; ++i)
            if ((mask >> i) & 1) S.add(others[i]);
        if (subset_is_induced_cycle_through(G, S, u, v)) return true;
    }
    return false;
}

SanityReport sanity_lemmas(const Digraph& G, int k) {
    if (k < 1) throw std::invalid_argument("sanity_lemmas: k must be >= 1");
    SanityReport r;
    for (int v = 0; v < G.order(); ++v) {
        auto d = degrees(G, v);
        if (d.d < 2 * (k - 1)) r.min_degree_ok = false;
        if (d.dMin < k - 1) r.dmin_ok = false;
        auto p = neighborhood_profile(G, v);
        if (p.NsPlus.empty() != p.NsMinus.empty()) r.simple_neighbour_duality_ok = false;
    }
    for (auto [u, v] : G.arcs())
        if (!arc_on_induced_cycle(G, u, v)) {
            r.induced_cycle_ok = false;
            break;
        }
    return r;
}

bool has_isolated_vertex(const Digraph& G) {
    for (int v = 0; v < G.order(); ++v)
        if (degrees(G, v).d == 0) return true;
    return false;
}

std::optional<std::pair<int, int>> find_uncritical_arc(const Digraph& G, int k) {
    for (auto [u, v] : G.arcs()) {
        Digraph H = without_arc(G, u, v);
        if (!k_dicolourable(H, k - 1)) return std::make_pair(u, v);
    }
    return std::nullopt;
}

bool is_k_dicritical_fast(const Digraph& G, int k) {
    if (k < 1) return false;
    if (has_isolated_vertex(G) && !(G.order() == 1 && k == 1)) return false;
    if (k_dicolourable(G, k - 1)) return false;   // chi < k
    if (!k_dicolourable(G, k)) return false;      // chi > k
    return !find_uncritical_arc(G, k).has_value();
}

CriticalityReport is_k_dicritical(const Digraph& G, int k) {
    if (k < 1) throw std::invalid_argument("is_k_dicritical: k must be >= 1");
    CriticalityReport rep;
    rep.chi = dichromatic_number(G).chi;

    SanityReport s = sanity_lemmas(G, k);
    rep.min_degree_ok = s.min_degree_ok;
    rep.dmin_ok = s.dmin_ok;
    rep.induced_cycle_ok = s.induced_cycle_ok;
    rep.simple_neighbour_duality_ok = s.simple_neighbour_duality_ok;

    if (rep.chi != k) return rep;
    if (has_isolated_vertex(G) && !(G.order() == 1 && k == 1)) return rep;

    if (auto bad = find_uncritical_arc(G, k)) {
        rep.violating_arc = bad;
        return rep;
    }
    rep.is_dicritical = true;
    return rep;
}

Digraph extract_k_dicritical(const Digraph& G, int k) {
    if (k < 1) throw std::invalid_argument("extract_k_dicritical: k must be >= 1");
    if (k_dicolourable(G, k - 1)) throw std::invalid_argument("extract_k_dicritical: chi(G) < k");

    Digraph H = G;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : H.arcs()) {
            Digraph T = without_arc(H, u, v);
            if (!k_dicolourable(T, k - 1)) {
                H = T;
                changed = true;
            }
        }
        for (int v = 0; v < H.order(); ++v) {
            Digraph T = remove_vertex(H, v);
            if (!k_dicolourable(T, k - 1)) {
                H = T;
                changed = true;
                break;  // ids shifted, restart the vertex scan
            }
        }
    }
    return H;
}

}  // namespace dicritix
