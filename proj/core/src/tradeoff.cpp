#include "apskit/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "apskit/geometry.hpp"
#include "apskit/parallel.hpp"
#include "apskit/rng.hpp"
#include "apskit/sensing.hpp"

namespace apskit {
namespace {

constexpr double kVarianceTieTol = 1e-12;

double combined_stderr(const MiEstimate& a, const MiEstimate& b) {
    return std::sqrt(a.std_error_bits * a.std_error_bits + b.std_error_bits * b.std_error_bits);
}

/// Evaluates one valid tradeoff design into a MetricPoint (rate, variance,
/// d_min, gap bound). Throws on invalid parameters; callers decide whether to
/// record the failure as a skip.
MetricPoint evaluate_design(const TradeoffParams& p, const ChannelSpec& ch, long n_samples,
                            std::uint64_t seed) {
    MetricPoint pt;
    pt.params = p;
    pt.rings_formula = tradeoff_ring_count(p.m, p.alpha);

    const Constellation c = build_tradeoff_family(p);
    pt.rings = static_cast<int>(c.ring_radii.size());
    pt.d_min = min_distance(c, *c.design).d_min;
    pt.variance = variance_metric(c);
    pt.gap_bound = gap_upper_bound(c, ch);
    pt.rate = estimate_mi(c, ch, n_samples, seed);
    return pt;
}

}  // namespace

std::vector<double> SweepConfig::default_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 8; ++i) g.push_back(0.25 * i);
    return g;
}

void SweepConfig::validate() const {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (alpha_lo < 1 || alpha_hi > (1 << m) || alpha_lo > alpha_hi)
        throw std::invalid_argument("alpha range must be a non-empty subset of [1, 2^m]");
    if (b_grid.empty() || c_grid.empty()) throw std::invalid_argument("grids must be non-empty");
    for (double v : b_grid)
        if (v < 0.0) throw std::invalid_argument("b grid values must be non-negative");
    for (double v : c_grid)
        if (v < 0.0) throw std::invalid_argument("c grid values must be non-negative");
    if (n_samples < 1000) throw std::invalid_argument("n_samples must be at least 1000");
}

double TimeSharingSegment::rate_at_lambda(double lambda) const {
    return lambda * psk_rate.value_bits + (1.0 - lambda) * qam_rate.value_bits;
}

double TimeSharingSegment::variance_at_lambda(double lambda) const {
    return lambda * psk_variance + (1.0 - lambda) * qam_variance;
}

double TimeSharingSegment::stderr_at_lambda(double lambda) const {
    const double a = lambda * psk_rate.std_error_bits;
    const double b = (1.0 - lambda) * qam_rate.std_error_bits;
    return std::sqrt(a * a + b * b);
}

double TimeSharingSegment::lambda_at_variance(double v) const {
    const double span = qam_variance - psk_variance;
    if (std::abs(span) <= kVarianceTieTol) return 1.0;
    const double lambda = (qam_variance - v) / span;
    return std::clamp(lambda, 0.0, 1.0);
}

double TimeSharingSegment::rate_at_variance(double v) const {
    return rate_at_lambda(lambda_at_variance(v));
}

double TimeSharingSegment::stderr_at_variance(double v) const {
    return stderr_at_lambda(lambda_at_variance(v));
}

std::size_t FrontierSet::n_valid() const {
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [](const MetricPoint& p) { return p.valid(); }));
}

std::size_t FrontierSet::n_skipped() const { return points.size() - n_valid(); }

std::vector<MetricPoint> FrontierSet::frontier() const {
    std::vector<MetricPoint> out;
    for (const MetricPoint& p : points)
        if (p.pareto) out.push_back(p);
    std::stable_sort(out.begin(), out.end(), [](const MetricPoint& a, const MetricPoint& b) {
        return a.variance < b.variance;
    });
    return out;
}

std::uint64_t tuple_seed(std::uint64_t master, int alpha, double b, double c) {
    return mix_seed(master, {static_cast<std::int64_t>(alpha), std::lround(b * 100.0),
                             std::lround(c * 100.0)});
}

std::vector<bool> pareto_flags(const std::vector<MetricPoint>& points) {
    const std::size_t n = points.size();
    std::vector<bool> flags(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (!points[i].valid()) continue;
        bool dominated = false;
        for (std::size_t j = 0; j < n && !dominated; ++j) {
            if (j == i || !points[j].valid()) continue;
            const MetricPoint& p = points[i];
            const MetricPoint& q = points[j];
            const bool tie =
                std::abs(q.rate.value_bits - p.rate.value_bits) <= combined_stderr(q.rate, p.rate) &&
                std::abs(q.variance - p.variance) <= kVarianceTieTol;
            if (tie) continue;
            const bool weakly_better =
                q.rate.value_bits >= p.rate.value_bits && q.variance <= p.variance;
            const bool strictly_somewhere =
                q.rate.value_bits > p.rate.value_bits || q.variance < p.variance;
            dominated = weakly_better && strictly_somewhere;
        }
        flags[i] = !dominated;
    }
    return flags;
}

std::vector<MetricPoint> pareto_filter(std::vector<MetricPoint> points) {
    const std::vector<bool> flags = pareto_flags(points);
    for (std::size_t i = 0; i < points.size(); ++i) points[i].pareto = flags[i];
    std::stable_sort(points.begin(), points.end(), [](const MetricPoint& a, const MetricPoint& b) {
        return a.variance < b.variance;
    });
    return points;
}

FrontierSet sweep(const SweepConfig& cfg) {
    cfg.validate();

    std::vector<double> b_grid = cfg.b_grid;
    std::vector<double> c_grid = cfg.c_grid;
    std::sort(b_grid.begin(), b_grid.end());
    b_grid.erase(std::unique(b_grid.begin(), b_grid.end()), b_grid.end());
    std::sort(c_grid.begin(), c_grid.end());
    c_grid.erase(std::unique(c_grid.begin(), c_grid.end()), c_grid.end());

    struct Tuple {
        int alpha;
        double b;
        double c;
    };
    std::vector<Tuple> tuples;
    for (int alpha = cfg.alpha_lo; alpha <= cfg.alpha_hi; ++alpha)
        for (double b : b_grid)
            for (double c : c_grid) tuples.push_back({alpha, b, c});

    const ChannelSpec ch = ChannelSpec::from_db(cfg.snr_c_db);

    FrontierSet set;
    set.config = cfg;
    set.points.resize(tuples.size());

    // Parallel map over tuples; each worker writes only its own index, and
    // every tuple draws from its own seed stream, so the result is identical
    // for any thread count.
    parallel_for_index(tuples.size(), resolve_threads(cfg.threads), [&](std::size_t i) {
        const Tuple& t = tuples[i];
        TradeoffParams p;
        p.m = cfg.m;
        p.alpha = t.alpha;
        p.b = t.b;
        p.c = t.c;
        try {
            set.points[i] =
                evaluate_design(p, ch, cfg.n_samples, tuple_seed(cfg.seed, t.alpha, t.b, t.c));
        } catch (const std::exception& e) {
            MetricPoint skip;
            skip.params = p;
            skip.rings_formula = tradeoff_ring_count(p.m, p.alpha);
            skip.skipped_reason = e.what();
            set.points[i] = skip;
        }
    });

    const std::vector<bool> flags = pareto_flags(set.points);
    for (std::size_t i = 0; i < set.points.size(); ++i) set.points[i].pareto = flags[i];

    const int m_qam = cfg.m % 2 == 0 ? cfg.m : cfg.m - 1;
    set.baseline = time_sharing_baseline(cfg.m, m_qam, ch, cfg.n_samples,
                                         mix_seed(cfg.seed, {-1}));
    return set;
}

TimeSharingSegment time_sharing_baseline(int m_psk, int m_qam, const ChannelSpec& ch,
                                         long n_samples, std::uint64_t seed) {
    if (m_qam % 2 != 0) throw std::invalid_argument("time sharing requires even m_qam");

    const Constellation psk = build_psk(m_psk);
    const Constellation qam = build_qam(m_qam);

    TimeSharingSegment seg;
    seg.m_psk = m_psk;
    seg.m_qam = m_qam;
    seg.psk_rate = estimate_mi(psk, ch, n_samples, mix_seed(seed, {1}));
    seg.qam_rate = estimate_mi(qam, ch, n_samples, mix_seed(seed, {2}));
    seg.psk_variance = variance_metric(psk);
    seg.qam_variance = variance_metric(qam);

    const int steps = 20;
    seg.samples.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const double lambda = static_cast<double>(i) / steps;
        seg.samples.push_back(
            {lambda, seg.rate_at_lambda(lambda), seg.variance_at_lambda(lambda)});
    }
    return seg;
}

std::vector<MetricPoint> table1_points(const ChannelSpec& ch, long n_samples,
                                       std::uint64_t seed) {
    struct Row {
        const char* label;
        int alpha;
        double b;
        double c;
        int rings_table;
        bool strict;
    };
    static const Row rows[] = {
        {"A", 16, 0.50, 0.00, 2, true},  {"B", 5, 0.50, 0.75, 5, true},
        {"C", 5, 1.25, 2.00, 5, true},   {"D", 4, 1.00, 0.75, 2, false},
        {"E", 5, 0.50, 1.25, 2, false},  {"F", 8, 0.25, 0.75, 2, false},
    };

    std::vector<MetricPoint> out;
    out.reserve(std::size(rows));
    for (const Row& row : rows) {
        TradeoffParams p;
        p.m = 6;
        p.alpha = row.alpha;
        p.b = row.b;
        p.c = row.c;

        const int rings_formula = tradeoff_ring_count(p.m, p.alpha);
        if (row.strict && rings_formula != row.rings_table)
            throw std::runtime_error(std::string("ring count mismatch for point ") + row.label +
                                     ": computed " + std::to_string(rings_formula) +
                                     ", expected " + std::to_string(row.rings_table));
        if (rings_formula != row.rings_table) p.ring_count_override = row.rings_table;

        MetricPoint pt =
            evaluate_design(p, ch, n_samples, tuple_seed(seed, row.alpha, row.b, row.c));
        pt.label = row.label;
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace apskit
