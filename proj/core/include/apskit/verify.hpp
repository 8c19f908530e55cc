#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apskit/constellation.hpp"
#include "apskit/rng.hpp"

namespace apskit {

/// Outcome of one property suite.
struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;                 ///< one-line summary (counts, extremes)
    std::vector<std::string> failures;  ///< individual violations, capped
    double elapsed_s = 0.0;
};

/// Scales for the property suites. Defaults match the documented acceptance
/// scale; quick mode cuts the Monte Carlo sizes for fast iteration.
struct VerifyOptions {
    long n_samples = 200000;   ///< MI sample count per (design, SNR)
    long n_blocks = 10000;     ///< CRB Monte Carlo block count
    long sweep_samples = 20000;///< MI sample count inside the sweep suite
    std::vector<int> block_lengths = {8, 64, 512};
    std::uint64_t seed = 1;
    int threads = 0;
    bool quick = false;

    /// Effective sample counts after applying quick mode.
    long mi_samples() const { return quick ? 20000 : n_samples; }
    long crb_blocks() const { return quick ? 2000 : n_blocks; }
};

/// Names of all suites, in the order run_all_suites executes them.
std::vector<std::string> suite_names();

/// Runs one suite by name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

/// Machine-readable report of suite outcomes.
std::string report_to_json(const std::vector<SuiteResult>& results);

/// Random valid ring design: m in [2,6], random composition of 2^m points
/// over up to 8 rings, strictly increasing radii, uniform phase offsets.
ApskDesign random_apsk_design(Rng& rng);

/// Random tradeoff parameter tuple that passes validation, m in {4,5,6}.
TradeoffParams random_valid_tradeoff(Rng& rng);

}  // namespace apskit
