#include "dicritix/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace dicritix {

Digraph gen_complete(int n) {
    if (n < 0) throw std::invalid_argument("gen_complete: n must be >= 0");
    Digraph G(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) G.add_arc(u, v);
    return G;
}

Digraph gen_dircycle(int n) {
    if (n < 2) throw std::invalid_argument("gen_dircycle: n must be >= 2");
    Digraph G(n);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (!G.arc(i, j)) G.add_arc(i, j);
    }
    return G;
}

Digraph gen_symcycle(int n) {
    if (n < 2) throw std::invalid_argument("gen_symcycle: n must be >= 2");
    Digraph G(n);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        if (!G.arc(i, j)) G.add_arc(i, j);
        if (!G.arc(j, i)) G.add_arc(j, i);
    }
    return G;
}

Digraph gen_dirpath(int n) {
    if (n < 1) throw std::invalid_argument("gen_dirpath: n must be >= 1");
    Digraph G(n);
    for (int i = 0; i + 1 < n; ++i) G.add_arc(i, i + 1);
    return G;
}

Digraph gen_sympath(int n) {
    if (n < 1) throw std::invalid_argument("gen_sympath: n must be >= 1");
    Digraph G(n);
    for (int i = 0; i + 1 < n; ++i) {
        G.add_arc(i, i + 1);
        G.add_arc(i + 1, i);
    }
    return G;
}

Digraph gen_order_construction(int k, int n) {
    if (k < 2) throw std::invalid_argument("gen_order_construction: k must be >= 2");
    if (n < k) throw std::invalid_argument("gen_order_construction: n must be >= k");
    if (n == k) return gen_complete(k);  // the C-part would degenerate at n = k
    return dirac_join(gen_complete(k - 2), gen_dircycle(n + 2 - k));
}

Digraph gen_Dk(int k, int m) {
    if (k < 4) throw std::invalid_argument("gen_Dk: k must be >= 4");
    if (m < 1 || m > k - 2) throw std::invalid_argument("gen_Dk: need 1 <= n <= k-2");
    return substitute(gen_symcycle(5),
                      {gen_complete(k - 2), gen_complete(1), gen_complete(m), gen_complete(k - 1 - m),
                       gen_complete(1)});
}

bool is_in_Dk(const Digraph& G, int k) {
    if (k < 4) throw std::invalid_argument("is_in_Dk: k must be >= 4");
    if (G.order() != 2 * k - 1 || G.order() > 9) return false;
    CanonicalForm c = canonical_form(G);
    for (int m = 1; m <= k - 2; ++m)
        if (canonical_form(gen_Dk(k, m)) == c) return true;
    return false;
}

namespace {

// Appends a symmetric path of `len` digons from `from`, returning the far
// endpoint; interior vertices are taken from `next`.
int lay_sym_path(Digraph& G, int from, int to, int len, int& next) {
    int cur = from;
    for (int i = 1; i < len; ++i) {
        int w = next++;
        G.add_arc(cur, w);
        G.add_arc(w, cur);
        cur = w;
    }
    if (len >= 1) {
        G.add_arc(cur, to);
        G.add_arc(to, cur);
    }
    return to;
}

}  // namespace

Digraph gen_extended_wheel(int la, int lb, int lc, bool reversed) {
    if (la < 0 || lb < 0 || lc < 0) throw std::invalid_argument("gen_extended_wheel: negative length");
    int zeros = (la == 0) + (lb == 0) + (lc == 0);
    if (zeros > 1) throw std::invalid_argument("gen_extended_wheel: at most one path may have length 0");
    if ((la % 2 != lb % 2) || (lb % 2 != lc % 2))
        throw std::invalid_argument("gen_extended_wheel: path lengths must share parity");

    // Vertices: a=0, b=1, c=2, hub x (3 unless a zero-length path merges it
    // with a corner), then path interiors.  Order is la+lb+lc+1 in both the
    // zero and nonzero cases.
    int order = la + lb + lc + 1;
    Digraph G(order);
    int a = 0, b = 1, c = 2;
    if (reversed) std::swap(b, c);
    G.add_arc(a, b);
    G.add_arc(b, c);
    G.add_arc(c, a);
    int next = 3;
    int x;
    if (zeros == 1) {
        x = la == 0 ? a : (lb == 0 ? b : c);
    } else {
        x = next++;
    }
    lay_sym_path(G, x, a, la, next);
    lay_sym_path(G, x, b, lb, next);
    lay_sym_path(G, x, c, lc, next);
    return G;
}

Digraph gen_d3prime_fig3(int lxz, int lzy, int luw) {
    for (int l : {lxz, lzy, luw})
        if (l < 1 || l % 2 == 0)
            throw std::invalid_argument("gen_d3prime_fig3: replacement lengths must be odd and >= 1");
    // Seed on {z, x, y, u, w} = {0, 1, 2, 3, 4}: digons x~z, z~y, u~w and
    // simple arcs x->y, y->u, y->w, u->x, w->x.
    int order = 5 + (lxz - 1) + (lzy - 1) + (luw - 1);
    Digraph G(order);
    int z = 0, x = 1, y = 2, u = 3, w = 4;
    G.add_arc(x, y);
    G.add_arc(y, u);
    G.add_arc(y, w);
    G.add_arc(u, x);
    G.add_arc(w, x);
    int next = 5;
    lay_sym_path(G, x, z, lxz, next);
    lay_sym_path(G, z, y, lzy, next);
    lay_sym_path(G, u, w, luw, next);
    return G;
}

std::vector<CanonicalForm> d3prime_members_of_order(int n) {
    std::set<CanonicalForm> out;
    // Extended wheels: order = la + lb + lc + 1.
    for (int la = 0; la <= n; ++la)
        for (int lb = 0; lb <= n; ++lb)
            for (int lc = 0; lc <= n; ++lc) {
                if (la + lb + lc + 1 != n) continue;
                int zeros = (la == 0) + (lb == 0) + (lc == 0);
                if (zeros > 1) continue;
                if ((la % 2 != lb % 2) || (lb % 2 != lc % 2)) continue;
                for (bool rev : {false, true}) out.insert(canonical_form(gen_extended_wheel(la, lb, lc, rev)));
            }
    // Fig-3 variants: order = 2 + lxz + lzy + luw with odd lengths.
    for (int l1 = 1; l1 <= n; l1 += 2)
        for (int l2 = 1; l2 <= n; l2 += 2)
            for (int l3 = 1; l3 <= n; l3 += 2)
                if (2 + l1 + l2 + l3 == n) out.insert(canonical_form(gen_d3prime_fig3(l1, l2, l3)));
    return {out.begin(), out.end()};
}

bool is_in_D3prime(const Digraph& G) {
    if (G.order() < 4 || G.order() > 9) return false;
    CanonicalForm c = canonical_form(G);
    for (const auto& m : d3prime_members_of_order(G.order()))
        if (m == c) return true;
    return false;
}

Digraph gen_Fk(int k, int a1, int a2, int b1, int b2) {
    if (k < 4) throw std::invalid_argument("gen_Fk: k must be >= 4");
    if (a1 < 1 || a2 < 1 || b1 < 1 || b2 < 1) throw std::invalid_argument("gen_Fk: parts must be >= 1");
    if (a1 + a2 != k - 1 || b1 + b2 != k - 1 || a2 + b2 != k - 1)
        throw std::invalid_argument("gen_Fk: constraints a1+a2 = b1+b2 = a2+b2 = k-1 violated");
    return substitute(gen_symcycle(5),
                      {gen_complete(1), gen_complete(a1), gen_complete(a2), gen_complete(b2),
                       gen_complete(b1)});
}

Digraph hajos_join(const Digraph& G1, std::pair<int, int> a1, const Digraph& G2, std::pair<int, int> a2) {
    auto [u, v] = a1;
    auto [x, y] = a2;
    if (!G1.arc(u, v)) throw std::invalid_argument("hajos_join: a1 not an arc of G1");
    if (!G2.arc(x, y)) throw std::invalid_argument("hajos_join: a2 not an arc of G2");

    const int n1 = G1.order(), n2 = G2.order();
    // G1 keeps its ids; G2's y lands on u, its other vertices get fresh ids.
    std::vector<int> map2(n2);
    int next = n1;
    for (int w = 0; w < n2; ++w) map2[w] = (w == y) ? u : next++;

    Digraph H(n1 + n2 - 1);
    for (auto [p, q] : G1.arcs())
        if (!(p == u && q == v)) H.add_arc(p, q);
    for (auto [p, q] : G2.arcs())
        if (!(p == x && q == y)) {
            if (H.arc(map2[p], map2[q]))
                throw std::invalid_argument("hajos_join: arc count contract violated (duplicate arc)");
            H.add_arc(map2[p], map2[q]);
        }
    if (H.arc(map2[x], v)) throw std::invalid_argument("hajos_join: arc count contract violated (duplicate arc)");
    H.add_arc(map2[x], v);

    if (H.arc_count() != G1.arc_count() + G2.arc_count() - 1)
        throw std::invalid_argument("hajos_join: arc count contract violated");
    return H;
}

// ---------------------------------------------------------------------------
// Family spec parsing.

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument("family spec: expected '" + std::string(1, c) + "' in " + s);
    }
    std::string ident() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
        if (start == i) throw std::invalid_argument("family spec: expected a name in " + s);
        return s.substr(start, i - start);
    }
    int integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("family spec: expected an integer in " + s);
        return std::stoi(s.substr(start, i - start));
    }

    Digraph parse() {
        Digraph G = term();
        skip_ws();
        if (i != s.size()) throw std::invalid_argument("family spec: trailing characters in " + s);
        return G;
    }

    Digraph term() {
        std::string name = ident();
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
        expect('(');

        if (name == "join") {
            Digraph a = term();
            expect(',');
            Digraph b = term();
            expect(')');
            return dirac_join(a, b);
        }
        if (name == "hajos") {
            Digraph a = term();
            expect(',');
            int u = integer();
            expect(',');
            int v = integer();
            expect(',');
            Digraph b = term();
            expect(',');
            int x = integer();
            expect(',');
            int y = integer();
            expect(')');
            return hajos_join(a, {u, v}, b, {x, y});
        }

        // Remaining forms take a list of integers, optionally key=value.
        std::map<std::string, int> kv;
        std::vector<int> positional;
        if (!eat(')')) {
            while (true) {
                skip_ws();
                size_t save = i;
                bool named = false;
                if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
                    std::string key = ident();
                    if (eat('=')) {
                        kv[key] = integer();
                        named = true;
                    } else {
                        i = save;
                    }
                }
                if (!named) positional.push_back(integer());
                if (eat(')')) break;
                expect(',');
            }
        }
        auto pos = [&](size_t idx, const char* what) {
            if (idx >= positional.size())
                throw std::invalid_argument(std::string("family spec: missing argument ") + what);
            return positional[idx];
        };
        auto named = [&](const std::string& key, int fallback_idx) {
            auto it = kv.find(key);
            if (it != kv.end()) return it->second;
            return pos(size_t(fallback_idx), key.c_str());
        };

        if (name == "complete" || name == "k") return gen_complete(pos(0, "n"));
        if (name == "cycle" || name == "c") return gen_dircycle(pos(0, "n"));
        if (name == "symcycle" || name == "sc") return gen_symcycle(pos(0, "n"));
        if (name == "path" || name == "p") return gen_dirpath(pos(0, "n"));
        if (name == "sympath" || name == "sp") return gen_sympath(pos(0, "n"));
        if (name == "order") return gen_order_construction(named("k", 0), named("n", 1));
        if (name == "dk") return gen_Dk(named("k", 0), named("n", 1));
        if (name == "wheel") return gen_extended_wheel(pos(0, "la"), pos(1, "lb"), pos(2, "lc"));
        if (name == "fig3") return gen_d3prime_fig3(pos(0, "l1"), pos(1, "l2"), pos(2, "l3"));
        if (name == "fk")
            return gen_Fk(named("k", 0), named("a1", 1), named("a2", 2), named("b1", 3), named("b2", 4));
        throw std::invalid_argument("family spec: unknown family '" + name + "'");
    }
};

}  // namespace

Digraph gen_from_spec(const std::string& spec) { return Parser(spec).parse(); }

}  // namespace dicritix
