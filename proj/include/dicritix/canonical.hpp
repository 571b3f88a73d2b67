#pragma once

// Canonical forms for small digraphs: the lexicographically minimal
// row-major adjacency bit string over all relabelings.  Two digraphs are
// isomorphic iff their canonical forms are equal.

#include <cstdint>
#include <string>
#include <vector>

#include "dicritix/digraph.hpp"

namespace dicritix {

struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> bytes;  // n*n bits row-major, MSB-first per byte

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.bytes == b.bytes;
    }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.bytes < b.bytes;
    }
    std::string hex() const;
};

// Row-major minimal form.  Branch and bound over vertex placements with
// ordered partition refinement of the column order; degree classes fall out
// of the row comparison, so typical instances visit few branches.
CanonicalForm canonical_form(const Digraph& G, int max_n = 9);

Digraph from_canonical(const CanonicalForm& c);

// Internal-friendly variants on raw out-row masks (bit j of row[i] set iff
// arc i -> j), used by the enumeration engine.  n <= 16.
// The canonical matrix is returned in the same packed-row encoding.
void canonical_rows(const std::uint32_t* rows, int n, std::uint32_t* out_rows);

// Packed key for n <= 8: row i occupies bits [8i, 8i+8).
std::uint64_t canonical_key(const std::uint32_t* rows, int n);

std::uint64_t pack_key(const std::uint32_t* rows, int n);
void unpack_key(std::uint64_t key, int n, std::uint32_t* rows);
Digraph digraph_from_key(std::uint64_t key, int n);
std::uint64_t key_of_digraph(const Digraph& G);

}  // namespace dicritix
