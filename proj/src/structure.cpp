#include "dicritix/structure.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>

namespace dicritix {

namespace {

// Weak components of G restricted to X, in original vertex ids, ordered by
// smallest member.
std::vector<VertexSet> components_within(const Digraph& G, const VertexSet& X) {
    const int n = G.order();
    std::vector<VertexSet> out;
    VertexSet todo = X;
    while (!todo.empty()) {
        int s = todo.first();
        VertexSet comp(n);
        std::vector<int> stack{s};
        comp.add(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            VertexSet nb = (G.out(v) | G.in(v)) & X;
            nb -= comp;
            nb.for_each([&](int u) {
                comp.add(u);
                stack.push_back(u);
            });
        }
        out.push_back(comp);
        todo -= comp;
    }
    return out;
}

}  // namespace

std::vector<VertexSet> components(const Digraph& G) {
    return components_within(G, VertexSet::universe(G.order()));
}

std::vector<VertexSet> strong_components(const Digraph& G) {
    const int n = G.order();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stk;
    int next_index = 0, ncomp = 0;

    struct Frame {
        int v;
        std::vector<int> succ;
        size_t i;
    };
    std::vector<Frame> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        index[root] = low[root] = next_index++;
        stk.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, G.out(root).members(), 0});
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.i < f.succ.size()) {
                int w = f.succ[f.i++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, G.out(w).members(), 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = ncomp;
                        if (w == f.v) break;
                    }
                    ++ncomp;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    std::vector<VertexSet> out(ncomp, VertexSet(n));
    for (int v = 0; v < n; ++v) out[comp[v]].add(v);
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return out;
}

std::string block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::SingleArc: return "SingleArc";
        case BlockKind::Cycle: return "Cycle";
        case BlockKind::SymmetricOddCycle: return "SymmetricOddCycle";
        case BlockKind::SymmetricComplete: return "SymmetricComplete";
        case BlockKind::Other: return "Other";
    }
    return "?";
}

BlockKind classify_block(const Digraph& G, const VertexSet& B) {
    const std::vector<int> vs = B.members();
    const int m = int(vs.size());
    if (m == 1) return BlockKind::SymmetricComplete;  // lone vertex = K_1

    // SymmetricComplete is checked first so K_2 / K_3 are not reported as
    // cycles.
    bool complete = true;
    for (int u : vs)
        for (int v : vs)
            if (u != v && !G.arc(u, v)) complete = false;
    if (complete) return BlockKind::SymmetricComplete;

    Digraph H = induced(G, B);
    if (m == 2 && H.arc_count() == 1) return BlockKind::SingleArc;

    bool dir_cycle = H.arc_count() == m;
    for (int v = 0; v < m && dir_cycle; ++v)
        if (H.out(v).count() != 1 || H.in(v).count() != 1) dir_cycle = false;
    if (dir_cycle && strong_components(H).size() == 1) return BlockKind::Cycle;

    bool sym_cycle = H.arc_count() == 2 * m;
    for (int v = 0; v < m && sym_cycle; ++v) {
        auto p = neighborhood_profile(H, v);
        if (!p.Ns.empty() || p.Nd.count() != 2) sym_cycle = false;
    }
    if (sym_cycle && components(H).size() == 1 && m % 2 == 1) return BlockKind::SymmetricOddCycle;

    return BlockKind::Other;
}

BlockDecomposition blocks(const Digraph& G) {
    const int n = G.order();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (int v = 0; v < n; ++v) adj[v] = G.out(v) | G.in(v);

    BlockDecomposition res;
    res.separating_vertices = VertexSet(n);

    std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
    int counter = 0;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> block_sets;

    struct Frame {
        int v;
        std::vector<int> nbrs;
        size_t i;
    };

    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        if (adj[root].empty()) {
            num[root] = counter++;
            block_sets.push_back(VertexSet::single(n, root));
            continue;
        }
        int root_children = 0;
        num[root] = low[root] = counter++;
        std::vector<Frame> call;
        call.push_back({root, adj[root].members(), 0});
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.i < f.nbrs.size()) {
                int w = f.nbrs[f.i++];
                if (num[w] == -1) {
                    parent[w] = f.v;
                    if (f.v == root) ++root_children;
                    edge_stack.push_back({f.v, w});
                    num[w] = low[w] = counter++;
                    call.push_back({w, adj[w].members(), 0});
                } else if (w != parent[f.v] && num[w] < num[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                call.pop_back();
                if (call.empty()) break;
                int u = call.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    VertexSet bs(n);
                    while (!edge_stack.empty()) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        bs.add(e.first);
                        bs.add(e.second);
                        if (e.first == u && e.second == v) break;
                    }
                    block_sets.push_back(bs);
                    if (u != root) res.separating_vertices.add(u);
                }
            }
        }
        if (root_children >= 2) res.separating_vertices.add(root);
    }

    for (auto& bs : block_sets) res.blocks.push_back({bs, classify_block(G, bs)});
    std::sort(res.blocks.begin(), res.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices.first() < b.vertices.first(); });
    return res;
}

GallaiVerdict is_gallai_forest(const Digraph& G) {
    BlockDecomposition bd = blocks(G);
    for (const Block& b : bd.blocks)
        if (b.kind == BlockKind::Other) return {false, b};
    return {true, std::nullopt};
}

namespace {

// Unit-capacity max flow (Edmonds-Karp) on the arc network.
int max_flow(const Digraph& G, int s, int t) {
    const int n = G.order();
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (auto [u, v] : G.arcs()) cap[u][v] = 1;
    int flow = 0;
    while (true) {
        std::vector<int> pred(n, -1);
        std::queue<int> q;
        q.push(s);
        pred[s] = s;
        while (!q.empty() && pred[t] == -1) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n; ++w)
                if (pred[w] == -1 && cap[v][w] > 0) {
                    pred[w] = v;
                    q.push(w);
                }
        }
        if (pred[t] == -1) break;
        for (int w = t; w != s; w = pred[w]) {
            cap[pred[w]][w] -= 1;
            cap[w][pred[w]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int arc_connectivity(const Digraph& G) {
    const int n = G.order();
    if (n < 2) throw std::invalid_argument("arc_connectivity: need at least 2 vertices");
    int best = INT_MAX;
    for (int v = 1; v < n; ++v) {
        best = std::min(best, max_flow(G, 0, v));
        best = std::min(best, max_flow(G, v, 0));
    }
    return best;
}

namespace {

// Enumerates all valid (k-1)-dicolourings of G[side] and reports, for each,
// how many distinct colours the boundary receives.  Returns false when the
// side admits no dicolouring at all.
bool foreach_side_colouring(const Digraph& G, const VertexSet& side, int colours,
                            const VertexSet& boundary, const std::function<void(int)>& visit) {
    std::vector<int> vs = side.members();
    const int m = int(vs.size());
    Digraph H = induced(G, side);
    std::vector<char> is_boundary(m, 0);
    for (int i = 0; i < m; ++i)
        if (boundary.contains(vs[i])) is_boundary[i] = 1;

    bool any = false;
    std::vector<int> col(m, 0);
    std::vector<VertexSet> classes(colours, VertexSet(m));
    std::function<void(int)> rec = [&](int v) {
        if (v == m) {
            any = true;
            std::vector<char> seen(colours + 1, 0);
            int distinct = 0;
            for (int i = 0; i < m; ++i)
                if (is_boundary[i] && !seen[col[i]]) {
                    seen[col[i]] = 1;
                    ++distinct;
                }
            visit(distinct);
            return;
        }
        for (int c = 1; c <= colours; ++c) {
            VertexSet cls = classes[c - 1];
            cls.add(v);
            if (!is_acyclic(H, cls)) continue;
            classes[c - 1].add(v);
            col[v] = c;
            rec(v + 1);
            classes[c - 1].remove(v);
            col[v] = 0;
        }
    };
    rec(0);
    return any;
}

}  // namespace

LowCutProfile low_cut_colour_profile(const Digraph& G, int k, const VertexSet& V0, const VertexSet& V1) {
    const int n = G.order();
    if (k < 2) throw std::invalid_argument("low_cut_colour_profile: k must be >= 2");
    if (V0.empty() || V1.empty() || V0.intersects(V1) || (V0 | V1) != VertexSet::universe(n))
        throw std::invalid_argument("low_cut_colour_profile: (V0, V1) is not a partition");
    int cut = 0;
    V0.for_each([&](int u) { cut += (G.out(u) & V1).count(); });
    if (cut > k - 1) throw std::invalid_argument("low_cut_colour_profile: cut larger than k-1");

    // V0* = N^-(V1) (inside V0), V1* = N^+(V0) (inside V1).
    VertexSet star0(n), star1(n);
    V0.for_each([&](int u) {
        if (G.out(u).intersects(V1)) star0.add(u);
    });
    V1.for_each([&](int v) {
        if (G.in(v).intersects(V0)) star1.add(v);
    });

    const VertexSet* sides[2] = {&V0, &V1};
    const VertexSet* stars[2] = {&star0, &star1};
    bool always_one[2] = {true, true}, always_full[2] = {true, true};
    for (int i = 0; i < 2; ++i) {
        bool any = foreach_side_colouring(G, *sides[i], k - 1, *stars[i], [&](int distinct) {
            if (distinct != 1) always_one[i] = false;
            if (distinct != k - 1) always_full[i] = false;
        });
        if (!any)
            throw std::invalid_argument("low_cut_colour_profile: a side is not (k-1)-dicolourable");
    }
    LowCutProfile r;
    for (int i = 0; i < 2; ++i)
        if (always_one[i] && always_full[1 - i]) {
            r.holds = true;
            r.singleton_side = i;
            return r;
        }
    r.detail = "no side is always-singleton with the other side always using k-1 colours";
    return r;
}

bool twins(const Digraph& G, int u, int v) {
    if (u == v) return false;
    VertexSet ou = G.out(u), ov = G.out(v), iu = G.in(u), iv = G.in(v);
    ou.add(u);
    ov.add(v);
    iu.add(u);
    iv.add(v);
    return ou == ov && iu == iv;
}

std::vector<VertexSet> clusters(const Digraph& G, int k) {
    if (k < 3) throw std::invalid_argument("clusters: k must be >= 3");
    const int n = G.order();
    VertexSet S(n);
    for (int v = 0; v < n; ++v)
        if (degrees(G, v).d == 2 * (k - 1)) S.add(v);
    std::vector<char> done(n, 0);
    std::vector<VertexSet> out;
    S.for_each([&](int u) {
        if (done[u]) return;
        VertexSet c = VertexSet::single(n, u);
        done[u] = 1;
        S.for_each([&](int v) {
            if (!done[v] && twins(G, u, v)) {
                c.add(v);
                done[v] = 1;
            }
        });
        out.push_back(c);
    });
    return out;
}

BipartiteAux bipartite_aux(const Digraph& G, const VertexSet& X, const std::vector<VertexSet>& P) {
    const int n = G.order();
    BipartiteAux B;
    B.left = components_within(G, X);

    VertexSet rest = VertexSet::universe(n) - X;
    std::vector<VertexSet> comps = components_within(G, rest);

    // Each part must be a nonempty union of components of G - X, and the
    // parts must cover all of them exactly once.
    VertexSet covered(n);
    for (const auto& part : P) {
        if (part.empty()) throw std::invalid_argument("bipartite_aux: empty part");
        if (!part.subset_of(rest) || part.intersects(covered))
            throw std::invalid_argument("bipartite_aux: P is not a partition of the components of G - X");
        covered |= part;
    }
    if (covered != rest) throw std::invalid_argument("bipartite_aux: P does not cover G - X");
    for (const auto& comp : comps) {
        bool placed = false;
        for (const auto& part : P)
            if (comp.intersects(part)) {
                if (!comp.subset_of(part))
                    throw std::invalid_argument("bipartite_aux: a part splits a component");
                placed = true;
            }
        if (!placed && !comp.empty())
            throw std::invalid_argument("bipartite_aux: P does not cover G - X");
    }

    B.right = P;
    std::sort(B.right.begin(), B.right.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });

    for (size_t i = 0; i < B.left.size(); ++i) {
        VertexSet touch(n);
        B.left[i].for_each([&](int v) { touch |= G.out(v) | G.in(v); });
        for (size_t j = 0; j < B.right.size(); ++j)
            if (touch.intersects(B.right[j])) B.edges.push_back({int(i), int(j)});
    }
    return B;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

std::optional<std::vector<std::pair<int, int>>> find_two_forest(const BipartiteGraph& B) {
    std::vector<std::vector<int>> inc(B.left);
    for (auto [l, r] : B.edges) {
        if (l < 0 || l >= B.left || r < 0 || r >= B.right)
            throw std::out_of_range("find_two_forest: edge endpoint out of range");
        inc[l].push_back(r);
    }
    for (auto& v : inc) {
        std::sort(v.begin(), v.end());
        if (int(v.size()) < 2) return std::nullopt;
    }

    std::vector<std::pair<int, int>> chosen;
    // Node ids: left l, right B.left + r.
    std::function<bool(int, Dsu&)> rec = [&](int l, Dsu& dsu) -> bool {
        if (l == B.left) return true;
        const auto& cand = inc[l];
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = a + 1; b < cand.size(); ++b) {
                int ra = B.left + cand[a], rb = B.left + cand[b];
                Dsu next = dsu;
                if (next.find(ra) == next.find(rb)) continue;  // would close a cycle
                next.join(l, ra);
                next.join(l, rb);
                chosen.push_back({l, cand[a]});
                chosen.push_back({l, cand[b]});
                if (rec(l + 1, next)) return true;
                chosen.pop_back();
                chosen.pop_back();
            }
        return false;
    };
    Dsu dsu(B.left + B.right);
    if (rec(0, dsu)) return chosen;
    return std::nullopt;
}

std::optional<std::vector<std::pair<int, int>>> find_two_forest(const BipartiteAux& B) {
    BipartiteGraph P;
    P.left = int(B.left.size());
    P.right = int(B.right.size());
    P.edges = B.edges;
    return find_two_forest(P);
}

}  // namespace dicritix
