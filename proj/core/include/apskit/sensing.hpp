#pragma once

#include <cstdint>
#include <vector>

#include "apskit/constellation.hpp"

namespace apskit {

/// Sensing channel operating point: noise power, transmit power, and the
/// block length over which the gain estimate is formed.
struct SensingSpec {
    double sigma_s2 = 1.0;
    double power = 1.0;
    int block_len = 64;

    void validate() const;
};

/// Estimation error floor for one transmitted block with the given symbol
/// energies: sigma_s^2 / (P * sum(energies)).
double crb_conditional(const std::vector<double>& energies, const SensingSpec& s);

/// Closed-form upper bound on the block-averaged error floor:
/// (sigma_s^2/P) * (1/L + Var(|X|^2) / (L^2 * delta)) with delta the minimum
/// symbol energy of c. Requires delta > 0.
double avg_crb_bound(const Constellation& c, const SensingSpec& s);

struct CrbEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_blocks = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo estimate of the block-averaged error floor: draws n_blocks
/// blocks of L uniform symbols and averages crb_conditional over them.
/// Deterministic given (seed, n_blocks).
CrbEstimate avg_crb_monte_carlo(const Constellation& c, const SensingSpec& s, long n_blocks,
                                std::uint64_t seed);

/// Symbol-energy variance Var(|X|^2), the sensing axis of the tradeoff.
double variance_metric(const Constellation& c);

}  // namespace apskit
