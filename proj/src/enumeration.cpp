#include "dicritix/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "dicritix/criticality.hpp"
#include "dicritix/families.hpp"

namespace dicritix {

namespace {

std::atomic<long long> g_deadline_ns{0};

long long now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void check_deadline() {
    long long d = g_deadline_ns.load(std::memory_order_relaxed);
    if (d != 0 && now_ns() > d) throw BudgetExceeded("search budget exceeded");
}

}  // namespace

void set_search_budget_seconds(long seconds) {
    g_deadline_ns.store(seconds <= 0 ? 0 : now_ns() + seconds * 1'000'000'000LL);
}

int default_worker_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}

namespace {

// ---------------------------------------------------------------------------
// Labeled row-by-row generator over out-row masks; `leaf(rows, cols)` runs on
// every complete matrix meeting the degree filters.

struct RowGen {
    int n;
    int min_out, min_in, min_total;
    std::vector<std::vector<std::uint32_t>> cands;  // per row

    RowGen(int n_, int min_dmin, int min_total_degree) : n(n_) {
        min_out = min_in = min_dmin;
        min_total = min_total_degree;
        cands.resize(n);
        for (int r = 0; r < n; ++r)
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                if ((m >> r) & 1u) continue;
                if (__builtin_popcount(m) < min_out) continue;
                cands[r].push_back(m);
            }
    }

    template <class Leaf>
    void run(size_t first_lo, size_t first_hi, Leaf&& leaf) const {
        std::uint32_t rows[8] = {0}, cols[8] = {0};
        std::uint64_t ticker = 0;
        rec(0, first_lo, first_hi, rows, cols, ticker, leaf);
    }

  private:
    template <class Leaf>
    void rec(int r, size_t lo, size_t hi, std::uint32_t* rows, std::uint32_t* cols, std::uint64_t& ticker,
             Leaf&& leaf) const {
        if (r == n) {
            if ((++ticker & 0xFFFFF) == 0) check_deadline();
            for (int v = 0; v < n; ++v) {
                int din = __builtin_popcount(cols[v]);
                if (din < min_in) return;
                if (din + __builtin_popcount(rows[v]) < min_total) return;
            }
            leaf(rows, cols);
            return;
        }
        const auto& list = cands[r];
        size_t a = (r == 0) ? lo : 0;
        size_t b = (r == 0) ? hi : list.size();
        for (size_t i = a; i < b; ++i) {
            std::uint32_t m = list[i];
            rows[r] = m;
            for (std::uint32_t bits = m; bits; bits &= bits - 1) cols[__builtin_ctz(bits)] |= 1u << r;

            // In-degree feasibility: rows r+1..n-1 can still contribute.
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                int future = (n - 1 - r) - (v > r ? 1 : 0);
                if (__builtin_popcount(cols[v]) + future < min_in) ok = false;
            }
            if (ok && min_total > 0) {
                for (int v = 0; v <= r && ok; ++v) {
                    int future = n - 1 - r;
                    if (__builtin_popcount(rows[v]) + __builtin_popcount(cols[v]) + future < min_total)
                        ok = false;
                }
            }
            if (ok) rec(r + 1, lo, hi, rows, cols, ticker, leaf);

            for (std::uint32_t bits = m; bits; bits &= bits - 1) cols[__builtin_ctz(bits)] &= ~(1u << r);
        }
        rows[r] = 0;
    }
};

bool weakly_connected_rows(const std::uint32_t* rows, const std::uint32_t* cols, int n) {
    if (n == 0) return true;
    std::uint32_t all = (1u << n) - 1, comp = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t bits = frontier; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            next |= rows[v] | cols[v];
        }
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp == all;
}

// Acyclicity of the sub-digraph on `alive`, from column masks alone.
bool acyclic_cols(const std::uint32_t* cols, std::uint32_t alive, std::uint32_t excl_v, std::uint32_t excl_mask) {
    bool changed = true;
    while (alive && changed) {
        changed = false;
        for (std::uint32_t bits = alive; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            std::uint32_t in = cols[v];
            if (std::uint32_t(v) == excl_v) in &= ~excl_mask;
            if ((in & alive) == 0) {
                alive &= ~(1u << v);
                changed = true;
            }
        }
    }
    return alive == 0;
}

// Definitional 2-dicriticality: a cycle exists, no vertex is isolated, and
// deleting any single arc leaves an acyclic digraph.
bool is_2_dicritical_rows(const std::uint32_t* rows, const std::uint32_t* cols, int n) {
    std::uint32_t all = (1u << n) - 1;
    for (int v = 0; v < n; ++v)
        if (rows[v] == 0 && cols[v] == 0) return false;
    if (acyclic_cols(cols, all, ~0u, 0)) return false;
    for (int u = 0; u < n; ++u)
        for (std::uint32_t bits = rows[u]; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            if (!acyclic_cols(cols, all, std::uint32_t(v), 1u << u)) return false;
        }
    return true;
}

struct ShardResult {
    std::unordered_set<std::uint64_t> keys;
};

// Runs `leaf_filter(rows, cols) -> bool` over the whole labeled space (with
// the given degree filters) across workers and returns the sorted canonical
// keys of the classes whose members pass.
std::vector<std::uint64_t> sharded_canonical_scan(int n, const EnumFilters& f, int workers,
                                                  bool (*leaf_filter)(const std::uint32_t*, const std::uint32_t*,
                                                                      int)) {
    if (n == 0) return {0};
    RowGen gen(n, f.min_dmin, f.min_total_degree);
    if (workers <= 0) workers = default_worker_count();
    const size_t nfirst = gen.cands[0].size();
    workers = std::max(1, std::min<int>(workers, int(nfirst)));

    std::vector<ShardResult> results(workers);
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex err_mu;

    auto work = [&](int w) {
        try {
            size_t lo = nfirst * w / workers, hi = nfirst * (w + 1) / workers;
            auto& keys = results[w].keys;
            gen.run(lo, hi, [&](const std::uint32_t* rows, const std::uint32_t* cols) {
                if (f.connected && !weakly_connected_rows(rows, cols, n)) return;
                if (leaf_filter && !leaf_filter(rows, cols, n)) return;
                keys.insert(canonical_key(rows, n));
            });
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(err_mu);
            failed = true;
            error = e.what();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    if (failed) throw BudgetExceeded(error);

    std::unordered_set<std::uint64_t> merged;
    for (auto& r : results) merged.insert(r.keys.begin(), r.keys.end());
    std::vector<std::uint64_t> keys(merged.begin(), merged.end());
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::mutex g_census_mu;
std::map<std::tuple<int, int, int, bool>, std::vector<std::uint64_t>> g_census_cache;

std::mutex g_dicritical_mu;
std::map<std::pair<int, int>, DicriticalCensus> g_dicritical_cache;

}  // namespace

std::vector<std::uint64_t> census_keys_uncached(int n, const EnumFilters& f, int workers) {
    if (n < 0) throw std::invalid_argument("census_keys: negative order");
    if (n > 7) throw std::invalid_argument("census_keys: order above 7 is out of budget");
    if (n == 7 && f.min_dmin < 1)
        throw std::invalid_argument("census_keys: n = 7 requires a degree-pruning filter");
    return sharded_canonical_scan(n, f, workers, nullptr);
}

std::vector<std::uint64_t> census_keys(int n, const EnumFilters& f, int workers) {
    std::tuple<int, int, int, bool> cache_key{n, f.min_dmin, f.min_total_degree, f.connected};
    {
        std::lock_guard<std::mutex> lock(g_census_mu);
        auto it = g_census_cache.find(cache_key);
        if (it != g_census_cache.end()) return it->second;
    }
    auto keys = census_keys_uncached(n, f, workers);
    {
        std::lock_guard<std::mutex> lock(g_census_mu);
        g_census_cache[cache_key] = keys;
    }
    return keys;
}

void enumerate_digraphs(int n, const EnumFilters& f, const std::function<void(const Digraph&)>& sink,
                        int workers) {
    for (auto key : census_keys(n, f, workers)) sink(digraph_from_key(key, n));
}

namespace {

DicriticalCensus compute_k_dicritical(int k, int n, int workers) {
    DicriticalCensus out;
    out.k = k;
    out.n = n;
    if (n < k) return out;  // chi <= n, so nothing to find

    if (k == 1) {  // K_1 is the unique 1-dicritical digraph
        if (n == 1) out.keys.push_back(key_of_digraph(Digraph(1)));
        return out;
    }
    if (n > 6) throw BudgetExceeded("enumerate_k_dicritical: n > 6 is out of budget");
    if (n == 6 && k > 4) throw BudgetExceeded("enumerate_k_dicritical: n = 6 is supported for k <= 4 only");

    if (k == 2) {
        // The dicriticality test is cheap enough to run on every labeled
        // matrix, so no pruning at all is needed.
        out.provenance = Provenance::Exhaustive;
        out.keys = sharded_canonical_scan(n, EnumFilters{}, workers, &is_2_dicritical_rows);
        for (auto key : out.keys)
            if (!is_k_dicritical_fast(digraph_from_key(key, n), 2))
                throw std::logic_error("enumerate_k_dicritical: fast k=2 test disagrees with the solver");
        return out;
    }

    std::vector<std::uint64_t> cand;
    if (n <= 5) {
        out.provenance = Provenance::Exhaustive;
        cand = census_keys(n, EnumFilters{}, workers);
    } else {
        // Necessary conditions for dicriticality: min in/out degree k-1 and
        // weak connectivity.
        out.provenance = Provenance::Pruned;
        EnumFilters f;
        f.min_dmin = k - 1;
        f.min_total_degree = 2 * (k - 1);
        f.connected = true;
        cand = census_keys(n, f, workers);
    }

    if (workers <= 0) workers = default_worker_count();
    workers = std::max(1, std::min<int>(workers, int(cand.size() ? cand.size() : 1)));
    std::vector<char> keep(cand.size(), 0);
    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(64);
            if (i >= cand.size()) break;
            size_t end = std::min(cand.size(), i + 64);
            for (; i < end; ++i)
                if (is_k_dicritical_fast(digraph_from_key(cand[i], n), k)) keep[i] = 1;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < cand.size(); ++i)
        if (keep[i]) out.keys.push_back(cand[i]);
    return out;
}

}  // namespace

DicriticalCensus enumerate_k_dicritical(int k, int n, int workers) {
    if (k < 1) throw std::invalid_argument("enumerate_k_dicritical: k must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_k_dicritical: negative order");
    {
        std::lock_guard<std::mutex> lock(g_dicritical_mu);
        auto it = g_dicritical_cache.find({k, n});
        if (it != g_dicritical_cache.end()) return it->second;
    }
    DicriticalCensus out = compute_k_dicritical(k, n, workers);
    {
        std::lock_guard<std::mutex> lock(g_dicritical_mu);
        g_dicritical_cache[{k, n}] = out;
    }
    return out;
}

MinArcsTable min_arcs_table(int k, int n_max, int workers) {
    if (k < 2) throw std::invalid_argument("min_arcs_table: k must be >= 2");
    MinArcsTable t;
    t.k = k;
    for (int n = k; n <= n_max; ++n) {
        bool in_budget = n <= 5 || (n == 6 && k <= 4);
        if (in_budget) {
            auto cen = enumerate_k_dicritical(k, n, workers);
            int best = INT_MAX;
            for (auto key : cen.keys) best = std::min(best, digraph_from_key(key, n).arc_count());
            if (best == INT_MAX)
                throw std::logic_error("min_arcs_table: no k-dicritical digraph of this order found");
            t.entries.push_back({n, best, true});
        } else {
            int ub = gen_order_construction(k, n).arc_count();
            for (int a = k; a <= n + 1 - k; ++a) {
                int b = n + 1 - a;
                const MinArcsEntry *ea = t.entry(a), *eb = t.entry(b);
                if (ea && eb) ub = std::min(ub, ea->arcs + eb->arcs - 1);
            }
            t.entries.push_back({n, ub, false});
        }
    }
    return t;
}

}  // namespace dicritix
