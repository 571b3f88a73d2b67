#pragma once

// Interchange formats.
//
// digraph6 (bit-exact): leading '&'; the order as one character of value
// n+63 (n <= 62 only at this scale); then ceil(n^2/6) characters, each
// holding 6 bits most-significant-first with character value bits+63, the
// bits taken row-major over the full n x n adjacency matrix including the
// always-zero diagonal, zero-padded at the end.
//
// Edge list: first line "n m", then m lines "u v" (0-based), sorted
// lexicographically on output.

#include <string>

#include "dicritix/digraph.hpp"

namespace dicritix {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string write_digraph6(const Digraph& G);
Digraph parse_digraph6(const std::string& text);

std::string write_edgelist(const Digraph& G);
Digraph parse_edgelist(const std::string& text);

// Auto-detects the format: digraph6 lines start with '&'.
Digraph parse_digraph(const std::string& text);

}  // namespace dicritix
