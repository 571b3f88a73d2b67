#include "doctest.h"

#include "dicritix/criticality.hpp"
#include "dicritix/families.hpp"
#include "helpers.hpp"

using namespace dicritix;

TEST_CASE("basic generators") {
    CHECK(gen_complete(3).arc_count() == 6);
    CHECK(gen_dircycle(4).arc_count() == 4);
    CHECK(dichromatic_number(gen_dircycle(4)).chi == 2);
    CHECK(gen_symcycle(5).arc_count() == 10);
    CHECK(dichromatic_number(gen_symcycle(5)).chi == 3);
    CHECK(gen_symcycle(2) == gen_complete(2));
    CHECK(gen_dirpath(1).arc_count() == 0);
    CHECK_THROWS_AS(gen_dircycle(1), std::invalid_argument);
}

TEST_CASE("order construction") {
    Digraph a = gen_order_construction(3, 4);
    CHECK(a.arc_count() == 9);
    CHECK(canonical_form(a) == canonical_form(dirac_join(gen_complete(1), gen_dircycle(3))));

    CHECK(gen_order_construction(4, 6).arc_count() == 22);

    Digraph c = gen_order_construction(4, 5);
    CHECK(c.arc_count() == 17);
    CHECK(excess(c, 4) == 4);

    CHECK(gen_order_construction(4, 4) == gen_complete(4));
    CHECK(canonical_form(gen_order_construction(2, 5)) == canonical_form(gen_dircycle(5)));
    CHECK_THROWS_AS(gen_order_construction(4, 3), std::invalid_argument);

    // the construction delivers a k-dicritical digraph of the stated order
    for (int k = 2; k <= 4; ++k)
        for (int n = k; n <= k + 3; ++n) {
            Digraph G = gen_order_construction(k, n);
            CHECK(G.order() == n);
            CHECK(is_k_dicritical_fast(G, k));
        }
}

TEST_CASE("the D_k family") {
    Digraph fig2 = gen_Dk(4, 1);
    CHECK(fig2.order() == 7);
    CHECK(fig2.arc_count() == 22);

    for (int k = 4; k <= 8; ++k)
        for (int m = 1; m <= k - 2; ++m) {
            Digraph G = gen_Dk(k, m);
            CHECK(G.order() == 2 * k - 1);
            CHECK(excess(G, k) == 2 * (k - 3));
            // members are symmetric
            for (auto [u, v] : G.arcs()) CHECK(G.arc(v, u));
        }

    CHECK(is_k_dicritical_fast(gen_Dk(4, 1), 4));
    CHECK(is_k_dicritical_fast(gen_Dk(4, 2), 4));

    CHECK(is_in_Dk(gen_Dk(4, 2), 4));
    CHECK_FALSE(is_in_Dk(gen_complete(7), 4));
    CHECK_FALSE(is_in_Dk(gen_complete(4), 4));
    CHECK_THROWS_AS(gen_Dk(4, 3), std::invalid_argument);
}

TEST_CASE("extended wheels and the fig-3 variants") {
    // lengths (1,1,1): the hub joined to a directed triangle by digons
    Digraph w1 = gen_extended_wheel(1, 1, 1);
    CHECK(w1.order() == 4);
    CHECK(canonical_form(w1) == canonical_form(dirac_join(gen_complete(1), gen_dircycle(3))));

    // one zero length merges the hub with a triangle corner
    Digraph w0 = gen_extended_wheel(0, 2, 2);
    CHECK(w0.order() == 5);
    CHECK(w0.arc_count() == 11);
    CHECK(excess(w0, 3) == 2);
    CHECK(is_k_dicritical_fast(w0, 3));

    Digraph f = gen_d3prime_fig3(1, 1, 1);
    CHECK(f.order() == 5);
    CHECK(f.arc_count() == 11);
    CHECK(excess(f, 3) == 2);
    CHECK(is_k_dicritical_fast(f, 3));
    CHECK_FALSE(canonical_form(f) == canonical_form(w0));  // distinct degree sequences

    CHECK_THROWS_AS(gen_extended_wheel(1, 2, 1), std::invalid_argument);  // mixed parity
    CHECK_THROWS_AS(gen_extended_wheel(0, 0, 2), std::invalid_argument);  // two zero lengths
    CHECK_THROWS_AS(gen_d3prime_fig3(2, 1, 1), std::invalid_argument);    // even replacement

    CHECK(is_in_D3prime(w1));
    CHECK(is_in_D3prime(w0));
    CHECK(is_in_D3prime(f));
    CHECK(is_in_D3prime(gen_extended_wheel(1, 1, 3)));
    CHECK_FALSE(is_in_D3prime(gen_symcycle(5)));
    CHECK_FALSE(is_in_D3prime(gen_complete(4)));

    // D'_3 members of order <= 9 all have excess 2 and are 3-dicritical
    for (int n = 4; n <= 9; ++n)
        for (const auto& cf : d3prime_members_of_order(n)) {
            Digraph G = from_canonical(cf);
            CHECK(excess(G, 3) == 2);
            CHECK(is_k_dicritical_fast(G, 3));
        }
}

TEST_CASE("the F_k family") {
    Digraph f = gen_Fk(4, 1, 2, 2, 1);
    CHECK(f.order() == 7);
    CHECK(f.arc_count() == 22);
    for (auto [u, v] : f.arcs()) CHECK(f.arc(v, u));  // symmetric
    CHECK(excess(f, 4) == 2);
    CHECK(is_k_dicritical_fast(f, 4));
    CHECK_THROWS_AS(gen_Fk(4, 1, 2, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_Fk(4, 3, 0, 0, 3), std::invalid_argument);
}

TEST_CASE("hajos join") {
    {
        Digraph H = hajos_join(gen_complete(3), {0, 1}, gen_complete(3), {0, 1});
        CHECK(H.order() == 5);
        CHECK(H.arc_count() == 11);
        CHECK(is_k_dicritical_fast(H, 3));
    }
    {
        // joining two directed 3-cycles yields the directed 5-cycle; this is
        // the validation that froze the construction's orientation scheme
        Digraph H = hajos_join(gen_dircycle(3), {0, 1}, gen_dircycle(3), {0, 1});
        CHECK(canonical_form(H) == canonical_form(gen_dircycle(5)));
        CHECK(is_k_dicritical_fast(H, 2));
    }
    CHECK_THROWS_AS(hajos_join(gen_dircycle(3), {1, 0}, gen_dircycle(3), {0, 1}),
                    std::invalid_argument);  // (1,0) is not an arc
}

TEST_CASE("family spec parsing") {
    CHECK(gen_from_spec("complete(4)") == gen_complete(4));
    CHECK(gen_from_spec("cycle(5)") == gen_dircycle(5));
    CHECK(gen_from_spec("symcycle(5)") == gen_symcycle(5));
    CHECK(gen_from_spec("Dk(k=4,n=1)") == gen_Dk(4, 1));
    CHECK(gen_from_spec("order(k=4,n=6)") == gen_order_construction(4, 6));
    CHECK(gen_from_spec("wheel(0,2,2)") == gen_extended_wheel(0, 2, 2));
    CHECK(gen_from_spec("fig3(1,1,3)") == gen_d3prime_fig3(1, 1, 3));
    CHECK(gen_from_spec("Fk(k=4,a1=1,a2=2,b1=2,b2=1)") == gen_Fk(4, 1, 2, 2, 1));
    CHECK(gen_from_spec("join(complete(1),cycle(3))") ==
          dirac_join(gen_complete(1), gen_dircycle(3)));
    CHECK(gen_from_spec("hajos(complete(3),0,1,complete(3),0,1)") ==
          hajos_join(gen_complete(3), {0, 1}, gen_complete(3), {0, 1}));
    CHECK_THROWS_AS(gen_from_spec("nosuch(3)"), std::invalid_argument);
    CHECK_THROWS_AS(gen_from_spec("complete(3) junk"), std::invalid_argument);
}
