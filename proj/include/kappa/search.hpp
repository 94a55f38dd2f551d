#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kappa/spectral.hpp"

namespace kappa {

struct SearchConfig {
    std::vector<double> p_grid;
    std::size_t dim = 2;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    double scale = 1.0;
    bool include_paper_triple = false;
    double perturbation_radius = 0.0;
    std::size_t threads = 1;   // result is independent of this
    double noise_band = 1e-8;  // |margin| below this is "inconclusive", not a violation

    void validate() const;  // throws ConfigError
};

struct ViolationReport {
    double p = 0.0;
    nlohmann::json a, b, c;     // matrix JSON, bit-exact provenance
    double margin = 0.0;        // < 0 for violations
    std::string provenance;     // "paper-triple", "perturbed-paper-triple", or "random"
    std::uint64_t seed = 0;
    std::size_t trial = 0;

    nlohmann::json to_json() const;
};

struct PSummary {
    double p = 0.0;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::size_t inconclusive = 0;  // |margin| <= 1e-8, inside numerical noise
    std::size_t errors = 0;        // trials skipped due to numerical failure
    double min_margin = 0.0;
};

struct ScanResult {
    std::vector<ViolationReport> violations;  // trial order within each p
    std::vector<PSummary> summary;            // p_grid order

    std::string summary_csv() const;   // header: p,trials,violations,min_margin
    std::string violations_jsonl() const;
};

// Deterministic for a fixed config regardless of thread count: trial t's
// triple comes from a counter-based stream keyed (seed, p index, t). With
// include_paper_triple set, the built-in counterexample triple is trial 0.
ScanResult scan(const SearchConfig& config);

}  // namespace kappa
