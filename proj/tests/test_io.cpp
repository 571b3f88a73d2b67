#include "doctest.h"

#include "dicritix/enumeration.hpp"
#include "dicritix/families.hpp"
#include "dicritix/io.hpp"
#include "helpers.hpp"

using namespace dicritix;

TEST_CASE("digraph6 hand-checked encodings") {
    CHECK(write_digraph6(gen_complete(2)) == "&AW");

    Digraph arc(2);
    arc.add_arc(0, 1);
    CHECK(write_digraph6(arc) == "&AO");

    CHECK(parse_digraph6("&AW") == gen_complete(2));
    CHECK(parse_digraph6("&AO") == arc);
    CHECK(write_digraph6(Digraph(0)) == "&?");
    CHECK(parse_digraph6("&?").order() == 0);
}

TEST_CASE("digraph6 round trip over the 4-vertex census") {
    for (auto key : census_keys(4)) {
        Digraph G = digraph_from_key(key, 4);
        CHECK(parse_digraph6(write_digraph6(G)) == G);
    }
}

TEST_CASE("digraph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_digraph6("AW"), FormatError);       // missing '&'
    CHECK_THROWS_AS(parse_digraph6("&"), FormatError);        // missing order
    CHECK_THROWS_AS(parse_digraph6("&A"), FormatError);       // truncated body
    CHECK_THROWS_AS(parse_digraph6("&AWW"), FormatError);     // trailing garbage
    CHECK_THROWS_AS(parse_digraph6("&AV"), FormatError);      // nonzero padding
    CHECK_THROWS_AS(parse_digraph6("&A\x01"), FormatError);   // character below range
    CHECK_THROWS_AS(parse_digraph6(std::string("&") + char(127)), FormatError);
    // a set diagonal bit is a loop: n=2, bits 1000 -> value 100000 = 32 -> '_'
    CHECK_THROWS_AS(parse_digraph6("&A_"), FormatError);
}

TEST_CASE("edge list format") {
    Digraph G = dirac_join(gen_complete(1), gen_dircycle(3));
    std::string text = write_edgelist(G);
    CHECK(parse_edgelist(text) == G);
    CHECK(text.substr(0, 4) == "4 9\n");
    // output sorted lexicographically
    CHECK(text == "4 9\n0 1\n0 2\n0 3\n1 0\n1 2\n2 0\n2 3\n3 0\n3 1\n");

    CHECK_THROWS_AS(parse_edgelist("2 1\n0 0\n"), FormatError);   // loop
    CHECK_THROWS_AS(parse_edgelist("2 2\n0 1\n0 1\n"), FormatError);  // duplicate
    CHECK_THROWS_AS(parse_edgelist("2 1\n0 5\n"), FormatError);   // out of range
    CHECK_THROWS_AS(parse_edgelist("2 2\n0 1\n"), FormatError);   // truncated
    CHECK_THROWS_AS(parse_edgelist("2 1\n0 1\nrest\n"), FormatError);  // trailing garbage
    CHECK_THROWS_AS(parse_edgelist("nonsense"), FormatError);
}

TEST_CASE("format autodetect") {
    Digraph G = gen_symcycle(5);
    CHECK(parse_digraph(write_digraph6(G) + "\n") == G);
    CHECK(parse_digraph(write_edgelist(G)) == G);
}
