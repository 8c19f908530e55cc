#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apskit/comm.hpp"
#include "apskit/constellation.hpp"

namespace apskit {

/// Design-space sweep configuration. Grids default to 0..2 in steps of 0.25.
struct SweepConfig {
    int m = 6;
    double snr_c_db = 10.0;
    int alpha_lo = 2;
    int alpha_hi = 33;
    std::vector<double> b_grid = default_grid();
    std::vector<double> c_grid = default_grid();
    long n_samples = 200000;
    std::uint64_t seed = 1;
    int threads = 0;  ///< 0 = APSKIT_THREADS env, then hardware concurrency

    static std::vector<double> default_grid();
    void validate() const;
};

/// Metrics of one swept design, or the reason it was skipped.
struct MetricPoint {
    TradeoffParams params;
    int rings = 0;          ///< ring count actually built (0 when skipped)
    int rings_formula = 0;  ///< closed-form ring count for (m, alpha)
    MiEstimate rate;
    double variance = 0.0;
    double d_min = 0.0;
    double gap_bound = 0.0;
    bool pareto = false;
    std::string skipped_reason;  ///< empty when the point was evaluated
    std::string label;           ///< optional tag for named reference points

    bool valid() const { return skipped_reason.empty(); }
};

/// One lambda sample of the PSK-QAM time-sharing segment.
struct BaselineSample {
    double lambda = 0.0;
    double rate_bits = 0.0;
    double variance = 0.0;
};

/// Time-sharing baseline between a PSK endpoint (lambda = 1) and a QAM
/// endpoint (lambda = 0); rate and variance both interpolate linearly.
struct TimeSharingSegment {
    int m_psk = 0;
    int m_qam = 0;
    MiEstimate psk_rate;
    MiEstimate qam_rate;
    double psk_variance = 0.0;
    double qam_variance = 0.0;
    std::vector<BaselineSample> samples;

    double rate_at_lambda(double lambda) const;
    double variance_at_lambda(double lambda) const;
    double stderr_at_lambda(double lambda) const;

    /// Segment rate at symbol-energy variance v (v clamped to the endpoint
    /// variances), and the standard error of that interpolated rate.
    double rate_at_variance(double v) const;
    double stderr_at_variance(double v) const;

private:
    double lambda_at_variance(double v) const;
};

/// Swept points plus the baseline segment and the generating config.
struct FrontierSet {
    SweepConfig config;
    std::vector<MetricPoint> points;  ///< all tuples, ordered by (alpha, b, c)
    TimeSharingSegment baseline;

    std::size_t n_valid() const;
    std::size_t n_skipped() const;
    /// Pareto-flagged points ordered by variance ascending.
    std::vector<MetricPoint> frontier() const;
};

/// Seed stream for one (alpha, b, c) tuple; a pure function of its inputs, so
/// enlarging a grid never changes the draws of existing tuples.
std::uint64_t tuple_seed(std::uint64_t master, int alpha, double b, double c);

/// Non-domination flags in input order (maximize rate, minimize variance).
/// Points whose rates differ by at most one combined standard error and whose
/// variances differ by at most 1e-12 are ties and never dominate each other.
std::vector<bool> pareto_flags(const std::vector<MetricPoint>& points);

/// Returns every input point with its pareto flag assigned, stably sorted by
/// variance ascending; dominated points stay in the list, unflagged. Entries
/// carrying a skipped_reason are never flagged.
std::vector<MetricPoint> pareto_filter(std::vector<MetricPoint> points);

/// Full design-space sweep: evaluates every (alpha, b, c) tuple, records
/// invalid tuples as skipped, assigns Pareto flags, and attaches the
/// time-sharing baseline. Deterministic given the config.
FrontierSet sweep(const SweepConfig& cfg);

/// PSK vs QAM time-sharing segment at the given channel, sampled on a
/// 21-point lambda grid. m_qam must be even.
TimeSharingSegment time_sharing_baseline(int m_psk, int m_qam, const ChannelSpec& ch,
                                         long n_samples, std::uint64_t seed);

/// Builds and evaluates the six named reference designs at m = 6, checking
/// ring counts against the tabulated values (strict for A, B, C; D, E, F are
/// two-ring configurations realized through the ring count override).
std::vector<MetricPoint> table1_points(const ChannelSpec& ch, long n_samples,
                                       std::uint64_t seed);

}  // namespace apskit
