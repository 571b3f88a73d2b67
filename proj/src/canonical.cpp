#include "dicritix/canonical.hpp"

#include <cstring>
#include <stdexcept>

namespace dicritix {

namespace {

constexpr int kMaxN = 31;

// Branch-and-bound search for the minimal row-major adjacency string.
//
// A labeling is built one position at a time.  The still-free columns are
// kept as an ordered list of cells; all vertices in one cell are
// interchangeable so far (every placed vertex's out-row is constant on each
// cell), so placing vertex v at position t determines rows 0..t fully once
// each cell is split into non-neighbours-then-neighbours of v.  Row t is
// therefore minimised cell-locally, and only candidates realising the
// minimal row t are branched on.  Rows are packed with column 0 at the high
// bit so integer comparison is string comparison.
struct Canon {
    int n;
    const std::uint32_t* A;  // out-rows, bit j (LSB order) = arc to j
    std::uint32_t best[kMaxN + 1];
    std::uint32_t cur[kMaxN + 1];
    int pos[kMaxN + 1];
    bool have_best = false;

    void run() {
        std::uint32_t cells[kMaxN];
        cells[0] = (1u << n) - 1;
        dfs(0, cells, n == 0 ? 0 : 1);
    }

    void dfs(int t, const std::uint32_t* cells, int ncells) {
        if (t == n) {
            if (!have_best || std::lexicographical_compare(cur, cur + n, best, best + n)) {
                std::memcpy(best, cur, sizeof(std::uint32_t) * n);
                have_best = true;
            }
            return;
        }
        // Minimal row t over the first cell's candidates.
        std::uint32_t min_row = ~0u;
        int cand[kMaxN];
        int ncand = 0;
        for (std::uint32_t bits = cells[0]; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            std::uint32_t row = 0;
            for (int j = 0; j < t; ++j) row |= ((A[v] >> pos[j]) & 1u) << (n - 1 - j);
            int col = t + 1;
            for (int ci = 0; ci < ncells; ++ci) {
                std::uint32_t c = cells[ci] & ~(1u << v);
                if (!c) continue;
                int len = __builtin_popcount(c);
                int q = __builtin_popcount(c & A[v]);
                if (q) row |= ((1u << q) - 1) << (n - (col + len));
                col += len;
            }
            if (row < min_row) {
                min_row = row;
                ncand = 0;
            }
            if (row == min_row) cand[ncand++] = v;
        }
        // Prune against the incumbent: along an active path the prefix is
        // never lexicographically above the incumbent, so equal-prefix plus
        // a larger row t is the only losing case.
        if (have_best) {
            bool equal_prefix = true;
            for (int j = 0; j < t && equal_prefix; ++j)
                if (cur[j] != best[j]) equal_prefix = false;
            if (equal_prefix && min_row > best[t]) return;
        }

        cur[t] = min_row;
        for (int i = 0; i < ncand; ++i) {
            int v = cand[i];
            pos[t] = v;
            std::uint32_t newcells[kMaxN];
            int nn = 0;
            for (int ci = 0; ci < ncells; ++ci) {
                std::uint32_t c = cells[ci] & ~(1u << v);
                std::uint32_t zeros = c & ~A[v], ones = c & A[v];
                if (zeros) newcells[nn++] = zeros;
                if (ones) newcells[nn++] = ones;
            }
            dfs(t + 1, newcells, nn);
        }
    }
};

}  // namespace

void canonical_rows(const std::uint32_t* rows, int n, std::uint32_t* out_rows) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("canonical_rows: unsupported order");
    if (n == 0) return;
    Canon c;
    c.n = n;
    c.A = rows;
    c.run();
    // Convert comparison packing (column j at bit n-1-j) back to LSB packing.
    for (int i = 0; i < n; ++i) {
        std::uint32_t r = 0;
        for (int j = 0; j < n; ++j)
            if ((c.best[i] >> (n - 1 - j)) & 1u) r |= 1u << j;
        out_rows[i] = r;
    }
}

std::uint64_t pack_key(const std::uint32_t* rows, int n) {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i) key |= std::uint64_t(rows[i] & 0xffu) << (8 * i);
    return key;
}

void unpack_key(std::uint64_t key, int n, std::uint32_t* rows) {
    for (int i = 0; i < n; ++i) rows[i] = std::uint32_t((key >> (8 * i)) & 0xffu);
}

std::uint64_t canonical_key(const std::uint32_t* rows, int n) {
    if (n > 8) throw std::invalid_argument("canonical_key: n must be <= 8");
    std::uint32_t out[8];
    canonical_rows(rows, n, out);
    return pack_key(out, n);
}

CanonicalForm canonical_form(const Digraph& G, int max_n) {
    const int n = G.order();
    if (n > max_n || n > kMaxN) throw std::invalid_argument("canonical_form: order exceeds configured maximum");
    std::uint32_t rows[kMaxN] = {0};
    for (int u = 0; u < n; ++u)
        G.out(u).for_each([&](int v) { rows[u] |= 1u << v; });
    std::uint32_t out[kMaxN] = {0};
    canonical_rows(rows, n, out);

    CanonicalForm cf;
    cf.n = n;
    cf.bytes.assign((n * n + 7) / 8, 0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if ((out[i] >> j) & 1u) cf.bytes[bit / 8] |= std::uint8_t(0x80u >> (bit % 8));
            ++bit;
        }
    return cf;
}

Digraph from_canonical(const CanonicalForm& c) {
    Digraph G(c.n);
    int bit = 0;
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (c.bytes[bit / 8] & (0x80u >> (bit % 8))) G.add_arc(i, j);
            ++bit;
        }
    return G;
}

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

Digraph digraph_from_key(std::uint64_t key, int n) {
    std::uint32_t rows[8];
    unpack_key(key, n, rows);
    Digraph G(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((rows[i] >> j) & 1u) G.add_arc(i, j);
    return G;
}

std::uint64_t key_of_digraph(const Digraph& G) {
    const int n = G.order();
    if (n > 8) throw std::invalid_argument("key_of_digraph: n must be <= 8");
    std::uint32_t rows[8] = {0};
    for (int u = 0; u < n; ++u)
        G.out(u).for_each([&](int v) { rows[u] |= 1u << v; });
    return canonical_key(rows, n);
}

}  // namespace dicritix
