#include "doctest.h"

#include <climits>
#include <functional>
#include <random>

#include "dicritix/families.hpp"
#include "dicritix/structure.hpp"
#include "helpers.hpp"

using namespace dicritix;
using testutil::fig3;

TEST_CASE("weak components") {
    CHECK(components(disjoint_union(gen_dircycle(3), gen_complete(2))).size() == 2);
    CHECK(components(gen_symcycle(5)).size() == 1);
    CHECK(components(Digraph(3)).size() == 3);
    CHECK(components(Digraph(0)).empty());
}

TEST_CASE("strong components") {
    Digraph P = gen_dirpath(3);
    CHECK(strong_components(P).size() == 3);
    CHECK(strong_components(gen_dircycle(4)).size() == 1);
    Digraph G = disjoint_union(gen_dircycle(3), gen_dircycle(3));
    G.add_arc(0, 3);
    CHECK(strong_components(G).size() == 2);
}

TEST_CASE("blocks") {
    {
        auto bd = blocks(gen_sympath(3));
        REQUIRE(bd.blocks.size() == 2);
        CHECK(bd.blocks[0].vertices == VertexSet::of(3, {0, 1}));
        CHECK(bd.blocks[1].vertices == VertexSet::of(3, {1, 2}));
        CHECK(bd.blocks[0].kind == BlockKind::SymmetricComplete);  // K_2
        CHECK(bd.blocks[1].kind == BlockKind::SymmetricComplete);
        CHECK(bd.separating_vertices == VertexSet::of(3, {1}));
        CHECK(bd.is_leaf(0));
        CHECK(bd.is_leaf(1));
    }
    {
        auto bd = blocks(gen_symcycle(5));
        REQUIRE(bd.blocks.size() == 1);
        CHECK(bd.blocks[0].kind == BlockKind::SymmetricOddCycle);
        CHECK(bd.separating_vertices.empty());
    }
    {
        auto bd = blocks(fig3());
        REQUIRE(bd.blocks.size() == 1);
        CHECK(bd.blocks[0].kind == BlockKind::Other);
    }
    {
        // K_3 is reported complete, not an odd cycle
        auto bd = blocks(gen_complete(3));
        CHECK(bd.blocks[0].kind == BlockKind::SymmetricComplete);
    }
    {
        // single arc block + isolated vertex block
        Digraph G(3);
        G.add_arc(0, 1);
        auto bd = blocks(G);
        REQUIRE(bd.blocks.size() == 2);
        CHECK(bd.blocks[0].kind == BlockKind::SingleArc);
        CHECK(bd.blocks[1].vertices == VertexSet::of(3, {2}));
        CHECK(bd.blocks[1].kind == BlockKind::SymmetricComplete);
    }
    {
        // every non-separating vertex lies in exactly one block; removing a
        // separating vertex increases the component count
        std::mt19937_64 rng(31);
        for (int t = 0; t < 60; ++t) {
            int n = 4 + int(rng() % 4);
            Digraph G = testutil::random_digraph(rng, n, 0.3);
            auto bd = blocks(G);
            for (int v = 0; v < n; ++v) {
                int in_blocks = 0;
                for (auto& b : bd.blocks)
                    if (b.vertices.contains(v)) ++in_blocks;
                if (!bd.separating_vertices.contains(v)) {
                    CHECK(in_blocks == 1);
                } else {
                    CHECK(in_blocks >= 2);
                    CHECK(components(remove_vertex(G, v)).size() >= components(G).size() + 1);
                }
            }
            // two distinct blocks share at most one vertex
            for (size_t i = 0; i < bd.blocks.size(); ++i)
                for (size_t j = i + 1; j < bd.blocks.size(); ++j)
                    CHECK((bd.blocks[i].vertices & bd.blocks[j].vertices).count() <= 1);
        }
    }
}

TEST_CASE("gallai forest recognition") {
    CHECK(is_gallai_forest(gen_dircycle(7)).is_gallai_forest);
    CHECK_FALSE(is_gallai_forest(gen_symcycle(4)).is_gallai_forest);
    CHECK(is_gallai_forest(gen_complete(4)).is_gallai_forest);
    CHECK(is_gallai_forest(Digraph(3)).is_gallai_forest);
    CHECK_FALSE(is_gallai_forest(fig3()).is_gallai_forest);
    CHECK(is_gallai_forest(gen_sympath(4)).is_gallai_forest);

    // invariant under reversing every arc
    std::mt19937_64 rng(37);
    for (int t = 0; t < 50; ++t) {
        Digraph G = testutil::random_digraph(rng, 3 + int(rng() % 4), 0.35);
        CHECK(is_gallai_forest(G).is_gallai_forest == is_gallai_forest(reversal(G)).is_gallai_forest);
    }
}

TEST_CASE("arc connectivity") {
    CHECK(arc_connectivity(gen_complete(4)) == 3);
    for (int n = 2; n <= 6; ++n) CHECK(arc_connectivity(gen_dircycle(n)) == 1);
    CHECK(arc_connectivity(gen_symcycle(5)) == 2);
    CHECK(arc_connectivity(gen_dirpath(2)) == 0);
    CHECK_THROWS_AS(arc_connectivity(gen_complete(1)), std::invalid_argument);

    // bounded by min over v of min(d+, d-)
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        Digraph G = testutil::random_digraph(rng, 3 + int(rng() % 4), 0.5);
        int bound = INT_MAX;
        for (int v = 0; v < G.order(); ++v) bound = std::min(bound, degrees(G, v).dMin);
        CHECK(arc_connectivity(G) <= bound);
    }
}

TEST_CASE("low cut colour profile") {
    Digraph K3 = gen_complete(3);
    auto p = low_cut_colour_profile(K3, 3, VertexSet::of(3, {0}), VertexSet::of(3, {1, 2}));
    CHECK(p.holds);
    CHECK(p.singleton_side == 0);

    CHECK_THROWS_AS(
        low_cut_colour_profile(gen_complete(4), 3, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})),
        std::invalid_argument);  // cut 4 > k-1
    CHECK_THROWS_AS(low_cut_colour_profile(K3, 3, VertexSet::of(3, {0}), VertexSet::of(3, {2})),
                    std::invalid_argument);  // not a partition
}

TEST_CASE("twins and clusters") {
    Digraph K4 = gen_complete(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(twins(K4, u, v));
    Digraph C3 = gen_dircycle(3);
    for (int u = 0; u < 3; ++u)
        for (int v = u + 1; v < 3; ++v) CHECK_FALSE(twins(C3, u, v));

    // Blob vertices of the D_4 digraph are twins; clusters partition the
    // minimum-degree set.
    Digraph fig2 = gen_Dk(4, 1);
    CHECK(twins(fig2, 0, 1));
    CHECK(twins(fig2, 4, 5));
    auto cl = clusters(fig2, 4);
    VertexSet covered(7);
    bool blob0 = false, blob3 = false;
    for (auto& c : cl) {
        CHECK_FALSE(c.intersects(covered));
        covered |= c;
        if (c == VertexSet::of(7, {0, 1})) blob0 = true;
        if (c == VertexSet::of(7, {4, 5})) blob3 = true;
    }
    CHECK(blob0);
    CHECK(blob3);
    CHECK(covered == VertexSet::of(7, {0, 1, 2, 3, 4, 5}));  // vertex 6 has degree 8
}

TEST_CASE("bipartite auxiliary graph") {
    // X a symmetric path's middle, two outside components, singleton parts.
    Digraph G(5);
    G.add_arc(0, 1);
    G.add_arc(1, 0);  // component {0,1} outside
    G.add_arc(2, 3);
    G.add_arc(3, 2);  // X = {2,3}? no: make X = {2}; outside = {0,1}, {3,4}
    G.add_arc(3, 4);
    G.add_arc(4, 3);
    G.add_arc(1, 2);
    G.add_arc(2, 3);  // already present
    VertexSet X = VertexSet::of(5, {2});
    std::vector<VertexSet> P = {VertexSet::of(5, {0, 1}), VertexSet::of(5, {3, 4})};
    auto B = bipartite_aux(G, X, P);
    CHECK(B.left.size() == 1);
    CHECK(B.right.size() == 2);
    CHECK(B.edges.size() == 2);  // a path of length 2 through the X side

    auto B2 = bipartite_aux(G, VertexSet(5), {VertexSet::universe(5)});
    CHECK(B2.left.empty());

    CHECK_THROWS_AS(bipartite_aux(G, X, {VertexSet::of(5, {0, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_aux(G, X, {VertexSet::of(5, {0}), VertexSet::of(5, {1, 3, 4})}),
                    std::invalid_argument);  // splits the {0,1} component
}

using testutil::oracle_has_two_forest;

TEST_CASE("two forests") {
    {
        BipartiteGraph star{1, 2, {{0, 0}, {0, 1}}};
        auto f = find_two_forest(star);
        REQUIRE(f.has_value());
        CHECK(f->size() == 2);
    }
    {
        BipartiteGraph low{1, 2, {{0, 0}}};
        CHECK_FALSE(find_two_forest(low).has_value());
    }

    // Agreement with the exhaustive subset oracle on every bipartite graph
    // with left <= 3, right <= 4 (at most 12 edges), and the
    // |T| = |S|+1 sufficiency: the neighbourhood condition
    // |pi0(B - S')| <= |S'| for proper nonempty S' forces a 2-forest.
    for (int L = 1; L <= 3; ++L)
        for (int R = 1; R <= 4; ++R) {
            const int cells = L * R;
            for (std::uint32_t mask = 0; mask < (1u << cells); ++mask) {
                BipartiteGraph B{L, R, {}};
                for (int l = 0; l < L; ++l)
                    for (int r = 0; r < R; ++r)
                        if ((mask >> (l * R + r)) & 1) B.edges.push_back({l, r});
                bool got = find_two_forest(B).has_value();
                CHECK(got == oracle_has_two_forest(B));
                if (got) {
                    auto f = find_two_forest(B);
                    std::vector<int> deg(L, 0);
                    for (auto [l, r] : *f) ++deg[l];
                    for (int l = 0; l < L; ++l) CHECK(deg[l] == 2);
                }
            }
        }
}
