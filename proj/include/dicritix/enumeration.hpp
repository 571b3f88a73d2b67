#pragma once

// Isomorph-free generation of small digraphs and k-dicritical digraphs, and
// the d_k(n) minimum-arc tables.
//
// Strategy: iterate labeled adjacency matrices row by row with incremental
// degree pruning, deduplicate via canonical keys, then run the expensive
// per-class tests once per isomorphism class.  Work is sharded over the
// first row's candidate patterns; shards are independent and the merged
// output is sorted by canonical key, so results do not depend on the worker
// count.

#include <cstdint>
#include <functional>
#include <vector>

#include "dicritix/canonical.hpp"
#include "dicritix/digraph.hpp"

namespace dicritix {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Soft wall-clock budget for the long-running searches; 0 disables it.
void set_search_budget_seconds(long seconds);

struct EnumFilters {
    int min_dmin = 0;          // min(d+, d-) >= this for every vertex
    int min_total_degree = 0;  // d(v) >= this for every vertex
    bool connected = false;    // weakly connected only
};

// Sorted canonical keys of all isomorphism classes on n vertices passing the
// filters.  n <= 6 unfiltered; n = 7 requires min_dmin >= 1.  Results for
// small n are memoised.
std::vector<std::uint64_t> census_keys(int n, const EnumFilters& f = {}, int workers = 0);

// Uncached variant used to validate that the worker count cannot change
// the merged result.
std::vector<std::uint64_t> census_keys_uncached(int n, const EnumFilters& f = {}, int workers = 0);

// One representative per class, in canonical-key order.
void enumerate_digraphs(int n, const EnumFilters& f, const std::function<void(const Digraph&)>& sink,
                        int workers = 0);

enum class Provenance { Exhaustive, Pruned, Family };

struct DicriticalCensus {
    int k = 0, n = 0;
    Provenance provenance = Provenance::Exhaustive;
    std::vector<std::uint64_t> keys;  // sorted canonical keys

    std::vector<Digraph> digraphs() const {
        std::vector<Digraph> out;
        out.reserve(keys.size());
        for (auto key : keys) out.push_back(digraph_from_key(key, n));
        return out;
    }
};

// All k-dicritical digraphs of order n up to isomorphism.  Budget: any k for
// n <= 5 (fully unpruned search), k in {2,3,4} for n = 6 (k = 2 unpruned
// with the definitional test, k in {3,4} pruned by the min-degree necessary
// conditions plus connectivity); larger n rejected.
DicriticalCensus enumerate_k_dicritical(int k, int n, int workers = 0);

struct MinArcsEntry {
    int n = 0;
    int arcs = 0;
    bool exhaustive = false;  // false = family/join upper bound only
};

struct MinArcsTable {
    int k = 0;
    std::vector<MinArcsEntry> entries;  // n = k .. n_max

    const MinArcsEntry* entry(int n) const {
        for (const auto& e : entries)
            if (e.n == n) return &e;
        return nullptr;
    }
};

// d_k(n) for n = k..n_max: exact minima where enumeration is within budget,
// upper bounds from the order construction and Hajos superadditivity beyond.
MinArcsTable min_arcs_table(int k, int n_max, int workers = 0);

int default_worker_count();

}  // namespace dicritix
