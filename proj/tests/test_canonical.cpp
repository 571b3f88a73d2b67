#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "dicritix/canonical.hpp"
#include "dicritix/families.hpp"
#include "helpers.hpp"

using namespace dicritix;

TEST_CASE("canonical form is a relabeling invariant") {
    Digraph C3 = gen_dircycle(3);
    CHECK(canonical_form(C3) == canonical_form(testutil::relabel(C3, {2, 0, 1})));
    CHECK(canonical_form(C3) == canonical_form(reversal(C3)));

    std::mt19937_64 rng(47);
    for (const Digraph& G :
         {testutil::fig3(), gen_Dk(4, 1), testutil::random_digraph(rng, 6, 0.4),
          testutil::random_digraph(rng, 6, 0.6), gen_symcycle(6)}) {
        CanonicalForm base = canonical_form(G);
        std::vector<int> perm(G.order());
        for (int v = 0; v < G.order(); ++v) perm[v] = v;
        for (int t = 0; t < 1000; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(testutil::relabel(G, perm)) == base);
        }
        // decoding the canonical bytes gives an isomorphic digraph
        CHECK(canonical_form(from_canonical(base)) == base);
    }
}

TEST_CASE("canonical form agrees with the all-permutations oracle") {
    // The oracle computes the minimal matrix over every relabeling; the
    // library search must land on exactly the same matrix.
    for (int n = 2; n <= 4; ++n) {
        const int bits = n * (n - 1);
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
            Digraph G = testutil::labeled_digraph(n, mask);
            auto oracle = testutil::oracle_canonical(G);
            Digraph decoded = from_canonical(canonical_form(G));
            CHECK(testutil::matrix_bits(decoded) == oracle);
        }
    }
    // spot checks at n = 5, 6
    std::mt19937_64 rng(53);
    for (int t = 0; t < 200; ++t) {
        int n = 5 + int(rng() % 2);
        Digraph G = testutil::random_digraph(rng, n, 0.3 + 0.4 * double(rng() % 2));
        CHECK(testutil::matrix_bits(from_canonical(canonical_form(G))) == testutil::oracle_canonical(G));
    }
}

TEST_CASE("distinct classes on three vertices") {
    std::set<std::vector<std::uint8_t>> forms;
    std::set<std::vector<char>> oracle_forms;
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Digraph G = testutil::labeled_digraph(3, mask);
        forms.insert(canonical_form(G).bytes);
        oracle_forms.insert(testutil::oracle_canonical(G));
    }
    CHECK(forms.size() == 16);
    CHECK(oracle_forms.size() == 16);
}

TEST_CASE("packed keys round trip") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + int(rng() % 7);
        Digraph G = testutil::random_digraph(rng, n, 0.5);
        std::uint64_t key = key_of_digraph(G);
        Digraph D = digraph_from_key(key, n);
        CHECK(canonical_form(D) == canonical_form(G));
        CHECK(key_of_digraph(D) == key);  // canonical keys are fixed points
    }
}
