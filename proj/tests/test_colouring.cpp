#include "doctest.h"

#include <random>

#include "dicritix/colouring.hpp"
#include "dicritix/families.hpp"
#include "helpers.hpp"

using namespace dicritix;
using testutil::fig3;

TEST_CASE("acyclicity") {
    CHECK_FALSE(is_acyclic(gen_dircycle(3)));
    CHECK(is_acyclic(gen_dirpath(3)));
    CHECK_FALSE(is_acyclic(gen_complete(2)));  // a digon is a 2-cycle
    Digraph C4 = gen_dircycle(4);
    CHECK(is_acyclic(C4, VertexSet::of(4, {0, 1, 2})));
}

TEST_CASE("dichromatic number") {
    for (int n = 1; n <= 5; ++n) CHECK(dichromatic_number(gen_complete(n)).chi == n);
    for (int n = 2; n <= 6; ++n) CHECK(dichromatic_number(gen_dircycle(n)).chi == 2);
    CHECK(dichromatic_number(gen_symcycle(5)).chi == 3);
    CHECK(dichromatic_number(fig3()).chi == 3);
    CHECK(dichromatic_number(Digraph(0)).chi == 0);
    CHECK(dichromatic_number(Digraph(3)).chi == 1);

    auto r = dichromatic_number(gen_symcycle(7));
    CHECK(r.chi == 3);
    CHECK(valid_colouring(gen_symcycle(7), r.witness));
    CHECK(r.witness.colours_used() <= 3);
}

TEST_CASE("k-dicolourability") {
    CHECK_FALSE(k_dicolourable(gen_complete(3), 2).has_value());
    auto w = k_dicolourable(gen_dircycle(5), 2);
    REQUIRE(w.has_value());
    CHECK(valid_colouring(gen_dircycle(5), *w));
    CHECK_FALSE(k_dicolourable(gen_Dk(4, 1), 3).has_value());

    // agreement with the dichromatic number on random instances
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        Digraph G = testutil::random_digraph(rng, 4 + int(rng() % 3), 0.45);
        int chi = dichromatic_number(G).chi;
        for (int k = 0; k <= G.order(); ++k)
            CHECK(k_dicolourable(G, k).has_value() == (k >= chi));
    }
}

TEST_CASE("greedy extension") {
    {
        Colouring phi = greedy_extend(gen_complete(3), Colouring(3), {0, 1, 2}, 3);
        CHECK(phi.colour == std::vector<int>{1, 2, 3});
    }
    {
        // reverse BFS order from 0 on the symmetric 5-cycle, two colours
        Colouring phi = greedy_extend(gen_symcycle(5), Colouring(5), {3, 2, 4, 1}, 2);
        CHECK(phi.colour[3] == 1);
        CHECK(phi.colour[2] == 2);
        CHECK(phi.colour[4] == 2);
        CHECK(phi.colour[1] == 1);
        CHECK_FALSE(phi.coloured(0));
        // vertex 0 is then inextensible: both colours meet its in- and
        // out-neighbourhood
        Colouring done = greedy_extend(gen_symcycle(5), phi, {0}, 2);
        CHECK_FALSE(done.coloured(0));
    }
    {
        Colouring total(3);
        total.colour = {1, 2, 1};
        Digraph P = gen_dirpath(3);
        CHECK(greedy_extend(P, total, {}, 2).colour == total.colour);
        CHECK_THROWS_AS(greedy_extend(P, total, {1}, 2), std::invalid_argument);
    }
    // validity for arbitrary orders
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        int n = 3 + int(rng() % 4);
        Digraph G = testutil::random_digraph(rng, n, 0.5);
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        int k = 1 + int(rng() % 3);
        Colouring phi = greedy_extend(G, Colouring(n), order, k);
        CHECK(valid_colouring(G, phi));
        CHECK(phi.colours_used() <= k);
    }
}

TEST_CASE("list dicolouring") {
    Digraph C3 = gen_dircycle(3);
    CHECK_FALSE(list_dicolourable(C3, ListAssignment::uniform(3, {1})).has_value());
    {
        ListAssignment L(3);
        L.lists = {{1}, {1}, {2}};
        auto w = list_dicolourable(C3, L);
        REQUIRE(w.has_value());
        CHECK(w->colour == std::vector<int>{1, 1, 2});
    }
    {
        // Brute-force oracle over the 8 assignments: no valid {1,2}-list
        // colouring of K3 exists.
        Digraph K3 = gen_complete(3);
        bool any = false;
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (int c = 1; c <= 2; ++c) {
                    Colouring phi(3);
                    phi.colour = {a, b, c};
                    if (valid_colouring(K3, phi)) any = true;
                }
        CHECK_FALSE(any);
        CHECK_FALSE(list_dicolourable(K3, ListAssignment::uniform(3, {1, 2})).has_value());
    }
    {
        ListAssignment missing(2);
        missing.lists = {{1}};
        missing.lists.resize(1);
        CHECK_THROWS_AS(list_dicolourable(gen_complete(2), missing), std::invalid_argument);
    }
    // uniform lists [m] agree with k_dicolourable(G, m)
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
        Digraph G = testutil::random_digraph(rng, 3 + int(rng() % 4), 0.5);
        int m = 1 + int(rng() % 3);
        std::vector<int> cols;
        for (int c = 1; c <= m; ++c) cols.push_back(c);
        CHECK(list_dicolourable(G, ListAssignment::uniform(G.order(), cols)).has_value() ==
              k_dicolourable(G, m).has_value());
    }
}

namespace {

// The weak five-cycle of the shifting figure: arcs v2->v1, v5->v1, v5->v4,
// v4->v3, v2->v3 with v_i = i-1.  Colours: red=1, blue=2, green=3.
Digraph shift_cycle_digraph() {
    Digraph G(5);
    G.add_arc(1, 0);
    G.add_arc(4, 0);
    G.add_arc(4, 3);
    G.add_arc(3, 2);
    G.add_arc(1, 2);
    return G;
}

}  // namespace

TEST_CASE("single shift") {
    Digraph G = shift_cycle_digraph();
    ListAssignment L = ListAssignment::uniform(5, {1, 2, 3});
    Colouring phi(5);
    phi.colour = {0, 1, 3, 1, 2};  // v1 uncoloured, v2 red, v3 green, v4 red, v5 blue

    Colouring psi = shift(G, L, phi, 4);  // v5 -> v1
    CHECK(psi.colour[0] == 2);            // v1 takes blue
    CHECK_FALSE(psi.coloured(4));
    CHECK(psi.colour[1] == 1);
    CHECK(psi.colour[2] == 3);
    CHECK(psi.colour[3] == 1);

    CHECK_THROWS_AS(shift(G, L, phi, 2), std::invalid_argument);  // v3 not adjacent to v1
    Colouring total(5);
    total.colour = {1, 2, 3, 1, 2};
    CHECK_THROWS_AS(shift(G, L, total, 4), std::invalid_argument);  // nothing uncoloured

    // digon endpoints with distinct list colours: always valid
    Digraph D = gen_complete(2);
    ListAssignment L2(2);
    L2.lists = {{1, 2}, {1, 2}};
    Colouring one(2);
    one.colour = {0, 2};
    Colouring moved = shift(D, L2, one, 1);
    CHECK(moved.colour[0] == 2);
    CHECK_FALSE(moved.coloured(1));
}

TEST_CASE("shift reports violated hypotheses loudly") {
    {
        // moved colour not on the receiving vertex's list
        Digraph D = gen_complete(2);
        ListAssignment L(2);
        L.lists = {{1}, {2}};
        Colouring phi(2);
        phi.colour = {0, 2};
        CHECK_THROWS_AS(shift(D, L, phi, 1), HypothesisViolation);
    }
    {
        // moving the colour closes a monochromatic digon elsewhere
        Digraph G(3);
        G.add_arc(0, 1);
        G.add_arc(1, 0);
        G.add_arc(0, 2);
        G.add_arc(2, 0);
        ListAssignment L = ListAssignment::uniform(3, {1, 2});
        Colouring phi(3);
        phi.colour = {0, 1, 1};
        CHECK_THROWS_AS(shift(G, L, phi, 1), HypothesisViolation);
    }
}

TEST_CASE("shift around the figure cycle reproduces all panels") {
    Digraph G = shift_cycle_digraph();
    ListAssignment L = ListAssignment::uniform(5, {1, 2, 3});
    WeakCycle C{{0, 1, 2, 3, 4}};
    Colouring phi(5);
    phi.colour = {0, 1, 3, 1, 2};

    // panel sequence (1-based panels 2..6): hole walks v1, v5, v4, v3, v2
    const std::vector<std::vector<int>> panels = {
        {2, 1, 3, 1, 0},  // after v5->v1
        {2, 1, 3, 0, 1},  // after v4->v5
        {2, 1, 0, 3, 1},  // after v3->v4
        {2, 0, 1, 3, 1},  // after v2->v3
        {0, 2, 1, 3, 1},  // after v1->v2: uncoloured back at v1, colours rotated
    };
    for (int steps = 1; steps <= 5; ++steps) {
        Colouring cur = shift_around_cycle(G, L, phi, C, ShiftDirection::Clockwise, steps);
        CHECK(cur.colour == panels[steps - 1]);
    }
    // final panel: v2 blue, v3 red, v4 green, v5 red
    Colouring full = shift_around_cycle(G, L, phi, C, ShiftDirection::Clockwise, 5);
    CHECK(full.colour[1] == 2);
    CHECK(full.colour[2] == 1);
    CHECK(full.colour[3] == 3);
    CHECK(full.colour[4] == 1);
    CHECK_FALSE(full.coloured(0));

    // steps = 0 is the identity; one step each way is the identity
    CHECK(shift_around_cycle(G, L, phi, C, ShiftDirection::Clockwise, 0).colour == phi.colour);
    Colouring cw = shift_around_cycle(G, L, phi, C, ShiftDirection::Clockwise, 1);
    CHECK(shift_around_cycle(G, L, cw, C, ShiftDirection::CounterClockwise, 1).colour == phi.colour);
}
