#include "apskit/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace apskit {

namespace {

constexpr double kDistinctTol = 1e-12;

EnergyMoments moments_from_points(const std::vector<cplx>& pts) {
    EnergyMoments mom;
    const double n = static_cast<double>(pts.size());
    double sum2 = 0.0, sum4 = 0.0;
    for (const cplx& p : pts) {
        const double e = std::norm(p);
        sum2 += e;
        sum4 += e * e;
    }
    mom.mean = sum2 / n;
    mom.fourth = sum4 / n;
    // two-pass variance; immune to cancellation in fourth - mean^2
    double acc = 0.0;
    for (const cplx& p : pts) {
        const double d = std::norm(p) - mom.mean;
        acc += d * d;
    }
    mom.variance = acc / n;
    return mom;
}

void finalize(Constellation& c) {
    // one global scale factor; moments recomputed from the scaled points
    const double raw_mean = moments_from_points(c.points).mean;
    if (!(raw_mean > 0.0))
        throw std::invalid_argument("constellation has zero mean energy");
    const double scale = 1.0 / std::sqrt(raw_mean);
    for (cplx& p : c.points) p *= scale;
    for (double& r : c.ring_radii) r *= scale;

    c.moments = moments_from_points(c.points);
    c.min_energy = std::norm(c.points.front());
    c.max_energy = c.min_energy;
    for (const cplx& p : c.points) {
        const double e = std::norm(p);
        c.min_energy = std::min(c.min_energy, e);
        c.max_energy = std::max(c.max_energy, e);
    }
    // constant modulus has zero energy variance by definition; snap the
    // residual rounding noise so single-ring designs report exactly 0
    if (c.max_energy - c.min_energy <= kDistinctTol * c.moments.mean)
        c.moments.variance = 0.0;

    const int n = c.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(c.points[i] - c.points[j]) <= kDistinctTol)
                throw std::invalid_argument(
                    "degenerate design: duplicate points at indices " +
                    std::to_string(i) + "," + std::to_string(j));
}

} // namespace

void ApskDesign::validate() const {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const std::size_t rings = ring_counts.size();
    if (rings == 0) throw std::invalid_argument("ring count K must be >= 1");
    if (ring_radii_raw.size() != rings || phase_offsets.size() != rings)
        throw std::invalid_argument("per-ring vectors must all have length K");
    long total = 0;
    for (int n : ring_counts) {
        if (n < 1) throw std::invalid_argument("every ring must carry at least one point");
        total += n;
    }
    if (total != (1L << m))
        throw std::invalid_argument("ring counts sum to " + std::to_string(total) +
                                    ", expected 2^m = " + std::to_string(1L << m));
    double prev = 0.0;
    for (double r : ring_radii_raw) {
        if (!(r > prev))
            throw std::invalid_argument("ring radii must be positive and strictly increasing");
        prev = r;
    }
}

double TradeoffParams::f(int k) const {
    return static_cast<double>(k) - c * std::sqrt(static_cast<double>(k)) + b;
}

int TradeoffParams::ring_count() const {
    if (ring_count_override) return *ring_count_override;
    return tradeoff_ring_count(m, alpha);
}

void TradeoffParams::validate() const {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (alpha < 1 || alpha > (1 << m))
        throw std::invalid_argument("alpha must lie in [1, 2^m]");
    if (b < 0.0 || c < 0.0)
        throw std::invalid_argument("perturbation coefficients must be non-negative");
    if (ring_count_override && *ring_count_override < 1)
        throw std::invalid_argument("ring count override must be >= 1");
    const int rings = ring_count();
    double prev = 0.0;
    for (int k = 1; k <= rings; ++k) {
        const double fk = f(k);
        if (!(fk > 0.0))
            throw std::invalid_argument("perturbation f(" + std::to_string(k) + ") <= 0");
        if (!(fk > prev))
            throw std::invalid_argument("perturbation f not strictly increasing at k = " +
                                        std::to_string(k));
        prev = fk;
    }
}

int tradeoff_ring_count(int m, int alpha) {
    // floor(sqrt(q)) == floor(sqrt(floor(q))) for rational q >= 0
    const long q = (1L << (m + 1)) / alpha;
    long k = static_cast<long>(std::sqrt(static_cast<double>(q)));
    while (k * k > q) --k;
    while ((k + 1) * (k + 1) <= q) ++k;
    return static_cast<int>(k);
}

std::vector<int> tradeoff_ring_counts(int m, int alpha, int rings) {
    std::vector<int> counts;
    counts.reserve(rings);
    long used = 0;
    for (int k = 1; k < rings; ++k) {
        counts.push_back(alpha * k);
        used += alpha * k;
    }
    const long last = (1L << m) - used;
    if (last < 1)
        throw std::invalid_argument("last ring would carry " + std::to_string(last) +
                                    " points; alpha too large for K = " + std::to_string(rings));
    counts.push_back(static_cast<int>(last));
    return counts;
}

Constellation build_apsk(const ApskDesign& design) {
    design.validate();

    Constellation c;
    c.m = design.m;
    c.family = Family::apsk;
    c.design = design;
    c.ring_radii = design.ring_radii_raw;
    c.points.reserve(design.point_count());

    const int rings = design.ring_count();
    for (int k = 0; k < rings; ++k) {
        const int n_k = design.ring_counts[k];
        const double r = design.ring_radii_raw[k];
        const double phi = design.phase_offsets[k];
        for (int n = 0; n < n_k; ++n) {
            const double a = phi + 2.0 * std::numbers::pi * n / n_k;
            c.points.emplace_back(r * std::cos(a), r * std::sin(a));
        }
    }
    finalize(c);
    return c;
}

Constellation build_tradeoff_family(const TradeoffParams& p) {
    p.validate();
    const int rings = p.ring_count();
    const double root_2m = std::sqrt(static_cast<double>(1 << p.m));

    ApskDesign d;
    d.m = p.m;
    d.ring_counts = tradeoff_ring_counts(p.m, p.alpha, rings);
    d.ring_radii_raw.reserve(rings);
    for (int k = 1; k <= rings; ++k) d.ring_radii_raw.push_back(p.f(k) / root_2m);
    d.phase_offsets.assign(rings, 0.0);

    Constellation c = build_apsk(d);
    c.family = Family::tradeoff;
    c.params = p;
    c.last_ring_overfull = d.ring_counts.back() > p.alpha * rings;
    return c;
}

Constellation build_prop1_family(int m, int alpha) {
    TradeoffParams p;
    p.m = m;
    p.alpha = alpha;
    return build_tradeoff_family(p);
}

Constellation build_psk(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    ApskDesign d;
    d.m = m;
    d.ring_counts = {1 << m};
    d.ring_radii_raw = {1.0};
    d.phase_offsets = {0.0};
    Constellation c = build_apsk(d);
    c.family = Family::psk;
    return c;
}

Constellation build_qam(int m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (m % 2 != 0)
        throw std::invalid_argument("square QAM requires even m; cross QAM is not supported");

    const int side = 1 << (m / 2);
    Constellation c;
    c.m = m;
    c.family = Family::qam;
    c.points.reserve(1 << m);
    for (int i = 0; i < side; ++i)
        for (int q = 0; q < side; ++q)
            c.points.emplace_back(2 * i - side + 1, 2 * q - side + 1);
    finalize(c);
    return c;
}

Constellation build_from_points(int m, std::vector<cplx> points, Family family,
                                std::optional<ApskDesign> design) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (points.size() != static_cast<std::size_t>(1) << m)
        throw std::invalid_argument("point count must equal 2^m");

    Constellation c;
    c.m = m;
    c.family = family;
    c.points = std::move(points);
    if (design) {
        design->validate();
        if (design->m != m || design->point_count() != static_cast<int>(c.points.size()))
            throw std::invalid_argument("design does not match the point list");
        c.design = design;
        c.ring_radii = design->ring_radii_raw;
    }
    finalize(c);
    return c;
}

} // namespace apskit
