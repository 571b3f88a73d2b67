#pragma once

// Dicolouring machinery: acyclicity, the exact dichromatic-number solver,
// greedy extension, list-dicolouring and the colour-shifting procedure.
//
// A colouring is a partial map vertex -> colour with colours >= 1; colour 0
// means "uncoloured".  A colouring is valid when every colour class induces
// an acyclic subdigraph (a digon counts as a 2-cycle).

#include <optional>
#include <stdexcept>
#include <vector>

#include "dicritix/digraph.hpp"

namespace dicritix {

// Raised when an operation whose postcondition encodes a theorem hypothesis
// detects a violation (the shift probe relies on this being loud).
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Colouring {
    std::vector<int> colour;  // 0 = uncoloured

    Colouring() = default;
    explicit Colouring(int n) : colour(n, 0) {}

    int n() const { return int(colour.size()); }
    bool coloured(int v) const { return colour[v] != 0; }
    bool total() const {
        for (int c : colour)
            if (c == 0) return false;
        return true;
    }
    VertexSet domain() const {
        VertexSet d(n());
        for (int v = 0; v < n(); ++v)
            if (colour[v]) d.add(v);
        return d;
    }
    int colours_used() const {
        int m = 0;
        for (int c : colour) m = std::max(m, c);
        return m;
    }
    VertexSet colour_class(int c) const {
        VertexSet s(n());
        for (int v = 0; v < n(); ++v)
            if (colour[v] == c) s.add(v);
        return s;
    }
};

struct ListAssignment {
    std::vector<std::vector<int>> lists;  // per vertex, sorted ascending

    ListAssignment() = default;
    explicit ListAssignment(int n) : lists(n) {}
    static ListAssignment uniform(int n, std::vector<int> colours) {
        ListAssignment L(n);
        std::sort(colours.begin(), colours.end());
        for (auto& l : L.lists) l = colours;
        return L;
    }
    bool allows(int v, int c) const {
        return std::binary_search(lists[v].begin(), lists[v].end(), c);
    }
};

// True iff G[X] has no directed cycle.
bool is_acyclic(const Digraph& G, const VertexSet& X);
inline bool is_acyclic(const Digraph& G) { return is_acyclic(G, VertexSet::universe(G.order())); }

// True iff every colour class of phi (restricted to its domain) is acyclic.
bool valid_colouring(const Digraph& G, const Colouring& phi);

// Exact solver.  Returns a total valid colouring with at most k colours, or
// nullopt when chi > k.  Depth-first in vertex order 0..n-1 with incremental
// per-class cycle detection; vertex 0 is pinned to colour 1 and a new colour
// may only be opened in order (symmetry breaking).
std::optional<Colouring> k_dicolourable(const Digraph& G, int k);

struct ChiResult {
    int chi = 0;
    Colouring witness;
};
ChiResult dichromatic_number(const Digraph& G);

// Greedy extension: colours the vertices of `order` (which must be disjoint
// from phi's domain and duplicate-free) one by one with the smallest colour
// in [k] that does not appear in both the coloured in- and out-neighbourhood;
// a vertex with no such colour is left uncoloured.
Colouring greedy_extend(const Digraph& G, const Colouring& phi, const std::vector<int>& order, int k);

// Exhaustive list-dicolouring: a total valid colouring with phi(v) in L(v)
// for every v, or nullopt.
std::optional<Colouring> list_dicolourable(const Digraph& G, const ListAssignment& L);

// True iff phi is a valid colouring of G - y (y's colour ignored) with every
// coloured vertex obeying its list.
bool valid_list_colouring_minus(const Digraph& G, const ListAssignment& L, const Colouring& phi, int skip);

// Colour shift: phi must be total on V - {x} for exactly one vertex x, and y
// must be a coloured neighbour of x.  Moves y's colour to x and uncolours y;
// the result is checked to be a valid list-dicolouring of G - y and a
// HypothesisViolation is raised otherwise.
Colouring shift(const Digraph& G, const ListAssignment& L, const Colouring& phi, int y);

// A weak cycle (v_1, ..., v_m, v_1): consecutive vertices adjacent in some
// direction, all distinct, m >= 2.
struct WeakCycle {
    std::vector<int> vertices;
};

enum class ShiftDirection { Clockwise, CounterClockwise };

// Compose `steps` single shifts around C.  Clockwise means the predecessor
// of the hole (in cycle order) shifts into it first, so the hole walks
// backwards around C; counter-clockwise is the inverse.
Colouring shift_around_cycle(const Digraph& G, const ListAssignment& L, const Colouring& phi,
                             const WeakCycle& C, ShiftDirection dir, int steps);

// Y(G, R, phi): contract each colour class of phi (a valid colouring of
// G[R]) to a single vertex and join the class vertices pairwise by digons.
Digraph y_construction(const Digraph& G, const VertexSet& R, const Colouring& phi);

}  // namespace dicritix
