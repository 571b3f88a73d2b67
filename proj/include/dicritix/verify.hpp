#pragma once

// One executable predicate per theorem: each runs over the appropriate
// instance stream (exhaustive census, family generators, or seeded random
// instances) and reports violations with replayable witnesses.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace dicritix {

struct Violation {
    std::string digraph6;
    std::string detail;
};

struct VerificationReport {
    std::string theorem;
    nlohmann::json params;  // includes generator provenance
    long long instances_checked = 0;
    std::vector<Violation> violations;
    std::uint64_t seed = 0;
    long long elapsed_ms = 0;

    bool ok() const { return violations.empty(); }
    nlohmann::json to_json() const;
    std::string text() const;
};

struct VerifyOptions {
    int k = 0;                  // 0 = theorem default
    int nmax = 0;               // 0 = theorem default
    long long samples = 0;      // 0 = theorem default
    std::uint64_t seed = 1;
    int workers = 0;            // 0 = hardware concurrency
};

std::vector<std::string> verify_ids();

// Known ids: brooks, small_dicritical, dirac_bound, refined_dirac,
// k3_characterization, ky_bound, sanity_lemmas, gallai_forest,
// arc_connectivity, stiebitz_components, structural, dirac_join, hajos_join,
// superadditivity, low_cut, list_gallai, stiebitz_strong.
VerificationReport verify_theorem(const std::string& id, const VerifyOptions& opt = {});

}  // namespace dicritix
