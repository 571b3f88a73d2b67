#include "doctest.h"

#include "dicritix/criticality.hpp"
#include "dicritix/families.hpp"
#include "helpers.hpp"

using namespace dicritix;

TEST_CASE("dicriticality of the basic families") {
    CHECK(is_k_dicritical(gen_complete(3), 3).is_dicritical);
    CHECK(is_k_dicritical(gen_symcycle(5), 3).is_dicritical);

    Digraph K4minus = gen_complete(4);
    K4minus.remove_arc(0, 1);
    auto rep = is_k_dicritical(K4minus, 4);
    CHECK_FALSE(rep.is_dicritical);
    CHECK(rep.chi == 3);

    // dicritical implies the full sanity block holds
    for (const Digraph& G : {gen_complete(4), gen_symcycle(7), gen_dircycle(5)}) {
        int chi = dichromatic_number(G).chi;
        auto r = is_k_dicritical(G, chi);
        CHECK(r.is_dicritical);
        CHECK(r.min_degree_ok);
        CHECK(r.dmin_ok);
        CHECK(r.induced_cycle_ok);
        CHECK(r.simple_neighbour_duality_ok);
    }

    // isolated vertices block dicriticality
    Digraph padded = disjoint_union(gen_dircycle(3), Digraph(1));
    CHECK_FALSE(is_k_dicritical(padded, 2).is_dicritical);
    CHECK(is_k_dicritical(Digraph(1), 1).is_dicritical);

    // a violating arc is reported
    Digraph C3chord = gen_dircycle(4);
    C3chord.add_arc(0, 2);
    auto r = is_k_dicritical(C3chord, 2);
    CHECK_FALSE(r.is_dicritical);
    CHECK(r.violating_arc.has_value());
}

TEST_CASE("fast path agrees with the report") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 60; ++t) {
        Digraph G = testutil::random_digraph(rng, 3 + int(rng() % 3), 0.5);
        for (int k = 2; k <= 4; ++k)
            CHECK(is_k_dicritical_fast(G, k) == is_k_dicritical(G, k).is_dicritical);
    }
}

TEST_CASE("sanity lemmas") {
    auto all = [](const SanityReport& r) { return r.all(); };
    CHECK(all(sanity_lemmas(gen_complete(4), 4)));
    CHECK(all(sanity_lemmas(gen_dircycle(3), 2)));

    // transitive tournament: the arc 0->2 lies on no induced cycle
    Digraph T(3);
    T.add_arc(0, 1);
    T.add_arc(1, 2);
    T.add_arc(0, 2);
    CHECK_FALSE(arc_on_induced_cycle(T, 0, 2));
    CHECK_FALSE(sanity_lemmas(T, 2).induced_cycle_ok);

    CHECK(arc_on_induced_cycle(gen_dircycle(4), 0, 1));
    CHECK(arc_on_induced_cycle(gen_complete(3), 0, 1));  // the digon itself
    Digraph C4chord = gen_dircycle(4);
    C4chord.add_arc(0, 2);
    CHECK(arc_on_induced_cycle(C4chord, 0, 2));   // 0->2->3->0 is induced
    CHECK_FALSE(arc_on_induced_cycle(C4chord, 0, 1));  // 0->1->2->3->0 has the chord
}

TEST_CASE("extraction of a dicritical subdigraph") {
    {
        Digraph G = disjoint_union(gen_complete(3), Digraph(1));
        G.add_arc(1, 3);
        Digraph H = extract_k_dicritical(G, 3);
        CHECK(canonical_form(H) == canonical_form(gen_complete(3)));
    }
    {
        Digraph H = extract_k_dicritical(gen_complete(4), 3);
        CHECK(is_k_dicritical(H, 3).is_dicritical);
        // fixed deletion order means a fixed output
        CHECK(extract_k_dicritical(gen_complete(4), 3) == H);
    }
    {
        Digraph G = gen_symcycle(5);
        CHECK(extract_k_dicritical(G, 3) == G);  // already dicritical
    }
    CHECK_THROWS_AS(extract_k_dicritical(gen_dircycle(4), 3), std::invalid_argument);
}
