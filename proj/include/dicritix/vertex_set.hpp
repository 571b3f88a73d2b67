#pragma once

// Dense vertex subsets over a digraph on vertices 0..n-1.  Backed by 64-bit
// words so set algebra stays cheap in the enumeration and solver loops; the
// interface places no upper bound on n.

#include <cstdint>
#include <vector>
#include <stdexcept>

namespace dicritix {

class VertexSet {
  public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), w_(words_for(n), 0) {}

    static VertexSet universe(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }
    static VertexSet single(int n, int v) {
        VertexSet s(n);
        s.add(v);
        return s;
    }
    static VertexSet of(int n, std::initializer_list<int> vs) {
        VertexSet s(n);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe_size() const { return n_; }
    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
    void add(int v) {
        check(v);
        w_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    void remove(int v) {
        check(v);
        w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Lowest member, -1 when empty.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
        return -1;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                out.push_back(int(i * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(int(i * 64) + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::uint64_t word(size_t i) const { return i < w_.size() ? w_[i] : 0; }
    size_t words() const { return w_.size(); }

  private:
    static size_t words_for(int n) { return n <= 0 ? 1 : size_t((n + 63) / 64); }
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
    }

    int n_;
    std::vector<std::uint64_t> w_;
};

}  // namespace dicritix
