#pragma once

#include <cstdint>
#include <vector>

#include "apskit/constellation.hpp"

namespace apskit {

/// AWGN communication channel operating point. The channel gain and transmit
/// power enter only through the linear SNR; noise power is normalized to 1.
struct ChannelSpec {
    double snr_c = 1.0;     ///< linear SNR
    double snr_c_db = 0.0;  ///< dB mirror of snr_c
    double sigma_c2 = 1.0;  ///< noise power after normalization

    static ChannelSpec from_db(double db);
    static ChannelSpec from_linear(double snr);
};

/// Monte Carlo mutual information estimate in bits per symbol.
struct MiEstimate {
    double value_bits = 0.0;
    double std_error_bits = 0.0;
    long n_samples = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo estimate of I(X;Y) for uniform input over c on the AWGN
/// channel at ch.snr_c. Deterministic given (seed, n_samples).
MiEstimate estimate_mi(const Constellation& c, const ChannelSpec& ch, long n_samples,
                       std::uint64_t seed);

/// Analytic lower bound on the uniform-input mutual information:
/// m - log2(2*pi*e/4) - log2(1 + 16/(pi*snr*d_min^2)).
double mi_lower_bound(const Constellation& c, const ChannelSpec& ch);

/// Analytic upper bound on the gap C(snr) - I(X;Y):
/// log2(2*pi*e/4) + log2((1/2^m)(1 + snr + 16/(pi*d^2*snr) + 16/(pi*d^2))).
double gap_upper_bound(const Constellation& c, const ChannelSpec& ch);

/// Capacity of the complex AWGN channel, log2(1 + snr) bits.
double gaussian_capacity(const ChannelSpec& ch);

/// One SNR point of the constant-gap experiment.
struct GapSample {
    double snr_db = 0.0;
    double snr_linear = 0.0;
    int m = 0;
    int rings = 0;
    double capacity_bits = 0.0;
    MiEstimate mi;
    double gap_bits = 0.0;        ///< capacity_bits - mi.value_bits
    double gap_bound_bits = 0.0;  ///< analytic ceiling for the same design
};

struct ConstantGapReport {
    int alpha = 0;
    std::vector<GapSample> samples;
    double spread_bits = 0.0;  ///< max gap - min gap across samples
};

/// For each SNR in the list, sets m = ceil(log2(snr_linear)) + 2, builds the
/// alpha-scaled family member with b = c = 0, and measures the gap to
/// capacity; reports the spread of the gap across SNRs.
ConstantGapReport constant_gap_check(int alpha, const std::vector<double>& snr_db_list,
                                     long n_samples, std::uint64_t seed);

}  // namespace apskit
