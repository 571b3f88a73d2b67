#include "dicritix/colouring.hpp"

#include <algorithm>
#include <map>

namespace dicritix {

bool is_acyclic(const Digraph& G, const VertexSet& X) {
    // Kahn: repeatedly strip vertices with no remaining in-arc inside X.
    VertexSet alive = X;
    bool changed = true;
    while (changed && !alive.empty()) {
        changed = false;
        std::vector<int> drop;
        alive.for_each([&](int v) {
            if (!G.in(v).intersects(alive)) drop.push_back(v);
        });
        for (int v : drop) {
            alive.remove(v);
            changed = true;
        }
    }
    return alive.empty();
}

bool valid_colouring(const Digraph& G, const Colouring& phi) {
    if (phi.n() != G.order()) return false;
    for (int c = 1; c <= phi.colours_used(); ++c) {
        VertexSet cls = phi.colour_class(c);
        if (!cls.empty() && !is_acyclic(G, cls)) return false;
    }
    return true;
}

namespace {

// v joins class `cls` (not containing v): the class stays acyclic iff there
// is no directed path from an out-neighbour of v back to an in-neighbour of
// v inside the class.
bool class_stays_acyclic(const Digraph& G, const VertexSet& cls, int v) {
    VertexSet reach = G.out(v) & cls;
    if (reach.empty()) return true;
    const VertexSet back = G.in(v) & cls;
    if (reach.intersects(back)) return false;
    VertexSet frontier = reach;
    while (!frontier.empty()) {
        VertexSet next(G.order());
        frontier.for_each([&](int u) { next |= G.out(u); });
        next &= cls;
        next -= reach;
        if (next.empty()) break;
        if (next.intersects(back)) return false;
        reach |= next;
        frontier = next;
    }
    return true;
}

struct Solver {
    const Digraph& G;
    int k;
    std::vector<VertexSet> classes;
    Colouring phi;

    Solver(const Digraph& g, int kk) : G(g), k(kk), phi(g.order()) {
        classes.assign(k, VertexSet(g.order()));
    }

    bool dfs(int v, int used) {
        if (v == G.order()) return true;
        const int top = std::min(k, used + 1);
        for (int c = 1; c <= top; ++c) {
            if (!class_stays_acyclic(G, classes[c - 1], v)) continue;
            classes[c - 1].add(v);
            phi.colour[v] = c;
            if (dfs(v + 1, std::max(used, c))) return true;
            classes[c - 1].remove(v);
            phi.colour[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Colouring> k_dicolourable(const Digraph& G, int k) {
    if (k < 0) throw std::invalid_argument("k_dicolourable: negative k");
    if (G.order() == 0) return Colouring(0);
    if (k == 0) return std::nullopt;
    Solver s(G, k);
    if (s.dfs(0, 0)) return s.phi;
    return std::nullopt;
}

ChiResult dichromatic_number(const Digraph& G) {
    for (int k = 0;; ++k) {
        auto w = k_dicolourable(G, k);
        if (w) return {k, *w};
    }
}

Colouring greedy_extend(const Digraph& G, const Colouring& phi, const std::vector<int>& order, int k) {
    if (phi.n() != G.order()) throw std::invalid_argument("greedy_extend: colouring size mismatch");
    std::vector<char> queued(G.order(), 0);
    for (int v : order) {
        if (v < 0 || v >= G.order()) throw std::out_of_range("greedy_extend: vertex out of range");
        if (phi.coloured(v)) throw std::invalid_argument("greedy_extend: order overlaps coloured domain");
        if (queued[v]) throw std::invalid_argument("greedy_extend: duplicate vertex in order");
        queued[v] = 1;
    }
    Colouring psi = phi;
    for (int v : order) {
        for (int c = 1; c <= k; ++c) {
            bool in_has = false, out_has = false;
            G.in(v).for_each([&](int u) {
                if (psi.colour[u] == c) in_has = true;
            });
            G.out(v).for_each([&](int u) {
                if (psi.colour[u] == c) out_has = true;
            });
            if (!(in_has && out_has)) {
                psi.colour[v] = c;
                break;
            }
        }
    }
    return psi;
}

namespace {

struct ListSolver {
    const Digraph& G;
    const ListAssignment& L;
    std::map<int, VertexSet> classes;
    Colouring phi;

    ListSolver(const Digraph& g, const ListAssignment& l) : G(g), L(l), phi(g.order()) {}

    bool dfs(int v) {
        if (v == G.order()) return true;
        for (int c : L.lists[v]) {
            auto it = classes.find(c);
            if (it == classes.end()) it = classes.emplace(c, VertexSet(G.order())).first;
            if (!class_stays_acyclic(G, it->second, v)) continue;
            it->second.add(v);
            phi.colour[v] = c;
            if (dfs(v + 1)) return true;
            it->second.remove(v);
            phi.colour[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Colouring> list_dicolourable(const Digraph& G, const ListAssignment& L) {
    if (int(L.lists.size()) != G.order()) throw std::invalid_argument("list_dicolourable: missing list");
    ListSolver s(G, L);
    if (s.dfs(0)) return s.phi;
    return std::nullopt;
}

bool valid_list_colouring_minus(const Digraph& G, const ListAssignment& L, const Colouring& phi, int skip) {
    std::map<int, VertexSet> classes;
    for (int v = 0; v < G.order(); ++v) {
        if (v == skip || !phi.coloured(v)) continue;
        if (!L.allows(v, phi.colour[v])) return false;
        auto it = classes.find(phi.colour[v]);
        if (it == classes.end()) it = classes.emplace(phi.colour[v], VertexSet(G.order())).first;
        it->second.add(v);
    }
    for (auto& [c, cls] : classes)
        if (!is_acyclic(G, cls)) return false;
    return true;
}

Colouring shift(const Digraph& G, const ListAssignment& L, const Colouring& phi, int y) {
    if (y < 0 || y >= G.order()) throw std::out_of_range("shift: vertex out of range");
    int x = -1;
    for (int v = 0; v < G.order(); ++v)
        if (!phi.coloured(v)) {
            if (x != -1) throw std::invalid_argument("shift: more than one uncoloured vertex");
            x = v;
        }
    if (x == -1) throw std::invalid_argument("shift: no uncoloured vertex (x coloured)");
    if (!phi.coloured(y)) throw std::invalid_argument("shift: y uncoloured");
    if (!G.arc(x, y) && !G.arc(y, x)) throw std::invalid_argument("shift: y not adjacent to x");

    Colouring psi = phi;
    psi.colour[x] = phi.colour[y];
    psi.colour[y] = 0;
    if (!valid_list_colouring_minus(G, L, psi, y))
        throw HypothesisViolation("shift: result is not a valid list-dicolouring of G - y");
    return psi;
}

Colouring shift_around_cycle(const Digraph& G, const ListAssignment& L, const Colouring& phi,
                             const WeakCycle& C, ShiftDirection dir, int steps) {
    const auto& cyc = C.vertices;
    const int m = int(cyc.size());
    if (m < 2) throw std::invalid_argument("shift_around_cycle: cycle too short");
    std::vector<char> seen(G.order(), 0);
    for (int i = 0; i < m; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % m];
        if (a < 0 || a >= G.order()) throw std::out_of_range("shift_around_cycle: vertex out of range");
        if (seen[a]) throw std::invalid_argument("shift_around_cycle: repeated vertex");
        seen[a] = 1;
        if (!G.arc(a, b) && !G.arc(b, a))
            throw std::invalid_argument("shift_around_cycle: consecutive vertices not adjacent");
    }
    int hole = -1;
    for (int i = 0; i < m; ++i)
        if (!phi.coloured(cyc[i])) hole = i;
    if (hole == -1) throw std::invalid_argument("shift_around_cycle: uncoloured vertex not on cycle");

    Colouring cur = phi;
    for (int s = 0; s < steps; ++s) {
        int from = dir == ShiftDirection::Clockwise ? (hole + m - 1) % m : (hole + 1) % m;
        cur = shift(G, L, cur, cyc[from]);
        hole = from;
    }
    return cur;
}

Digraph y_construction(const Digraph& G, const VertexSet& R, const Colouring& phi) {
    if (phi.n() != G.order()) throw std::invalid_argument("y_construction: colouring size mismatch");
    for (int v = 0; v < G.order(); ++v) {
        bool inR = R.contains(v);
        if (inR != phi.coloured(v))
            throw std::invalid_argument("y_construction: phi domain must be exactly R");
    }
    {
        Digraph GR = induced(G, R);
        std::vector<int> keep = R.members();
        Colouring sub(int(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i) sub.colour[int(i)] = phi.colour[keep[i]];
        if (!valid_colouring(GR, sub)) throw std::invalid_argument("y_construction: phi invalid on G[R]");
    }
    std::vector<VertexSet> parts;
    for (int c = 1; c <= phi.colours_used(); ++c) {
        VertexSet cls = phi.colour_class(c);
        if (!cls.empty()) parts.push_back(cls);
    }
    if (parts.empty()) return G;
    Contraction ctr = contract(G, parts);
    Digraph Y = ctr.quotient;
    const int untouched = G.order();
    std::vector<int> class_vertices;
    for (const auto& p : parts) class_vertices.push_back(ctr.projection[p.first()]);
    (void)untouched;
    for (size_t i = 0; i < class_vertices.size(); ++i)
        for (size_t j = i + 1; j < class_vertices.size(); ++j) {
            if (!Y.arc(class_vertices[i], class_vertices[j])) Y.add_arc(class_vertices[i], class_vertices[j]);
            if (!Y.arc(class_vertices[j], class_vertices[i])) Y.add_arc(class_vertices[j], class_vertices[i]);
        }
    return Y;
}

}  // namespace dicritix
