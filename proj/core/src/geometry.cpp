#include "apskit/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace apskit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double ring_pair_distance(double r1, double r2, double delta) {
    // (r1-r2)^2 + 4 r1 r2 sin^2(delta/2) is the law-of-cosines form that
    // stays accurate for near-equal radii and small offsets
    const double dr = r1 - r2;
    const double s = std::sin(0.5 * delta);
    return std::sqrt(dr * dr + 4.0 * r1 * r2 * s * s);
}

} // namespace

double wrap_angle(double phi) {
    double w = std::remainder(phi, kTwoPi); // [-pi, pi]
    if (w <= -std::numbers::pi) w = std::numbers::pi;
    return w;
}

double intra_ring_dmin(double radius, int n_points) {
    if (!(radius > 0.0)) throw std::invalid_argument("ring radius must be positive");
    if (n_points < 1) throw std::invalid_argument("ring must carry at least one point");
    if (n_points == 1) return kInf;
    return 2.0 * radius * std::sin(std::numbers::pi / n_points);
}

AngleOffset min_angle_offset(int n1, int n2, double phi1, double phi2) {
    AngleOffset best;
    best.delta = kInf;
    const double base = phi1 - phi2;
    for (int n = 0; n < n1; ++n) {
        const double a = base + kTwoPi * n / n1;
        for (int np = 0; np < n2; ++np) {
            const double d = std::fabs(wrap_angle(a - kTwoPi * np / n2));
            if (d < best.delta) {
                best.delta = d;
                best.n1 = n;
                best.n2 = np;
                // zero is the global minimum; aligned rings exit on the
                // first candidate instead of scanning all n1*n2 offsets
                if (d < 1e-12) {
                    best.delta = 0.0;
                    return best;
                }
            }
        }
    }
    return best;
}

double inter_ring_dmin(double r1, double r2, int n1, int n2, double phi1, double phi2) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw std::invalid_argument("ring radii must be positive");
    const AngleOffset off = min_angle_offset(n1, n2, phi1, phi2);
    return ring_pair_distance(r1, r2, off.delta);
}

std::vector<std::vector<double>> delta_matrix(const ApskDesign& design) {
    const int rings = design.ring_count();
    std::vector<std::vector<double>> delta(rings, std::vector<double>(rings, 0.0));
    for (int k = 0; k < rings; ++k)
        for (int kp = k + 1; kp < rings; ++kp) {
            const AngleOffset off =
                min_angle_offset(design.ring_counts[k], design.ring_counts[kp],
                                 design.phase_offsets[k], design.phase_offsets[kp]);
            delta[k][kp] = off.delta;
            delta[kp][k] = off.delta;
        }
    return delta;
}

double dmin_from_delta(const std::vector<double>& radii, const std::vector<int>& counts,
                       const std::vector<std::vector<double>>& delta) {
    const int rings = static_cast<int>(radii.size());
    double best = kInf;
    for (int k = 0; k < rings; ++k)
        best = std::min(best, intra_ring_dmin(radii[k], counts[k]));
    for (int k = 0; k < rings; ++k)
        for (int kp = k + 1; kp < rings; ++kp)
            best = std::min(best, ring_pair_distance(radii[k], radii[kp], delta[k][kp]));
    return best;
}

DistanceReport min_distance(const Constellation& c, const ApskDesign& design) {
    design.validate();
    if (c.size() != design.point_count() || !c.design ||
        c.design->ring_counts != design.ring_counts ||
        c.design->phase_offsets != design.phase_offsets)
        throw std::invalid_argument("constellation was not built from this design");

    const int rings = design.ring_count();
    std::vector<int> ring_start(rings, 0);
    for (int k = 1; k < rings; ++k)
        ring_start[k] = ring_start[k - 1] + design.ring_counts[k - 1];

    DistanceReport rep;
    rep.intra_min.resize(rings);
    rep.delta_angles.assign(rings, std::vector<double>(rings, 0.0));
    rep.inter_min = kInf;

    double intra_best = kInf;
    for (int k = 0; k < rings; ++k) {
        rep.intra_min[k] = intra_ring_dmin(c.ring_radii[k], design.ring_counts[k]);
        if (rep.intra_min[k] < intra_best) {
            intra_best = rep.intra_min[k];
            rep.intra_argmin_ring = k;
        }
    }

    std::pair<int, int> inter_points{-1, -1};
    for (int k = 0; k < rings; ++k) {
        for (int kp = k + 1; kp < rings; ++kp) {
            const AngleOffset off =
                min_angle_offset(design.ring_counts[k], design.ring_counts[kp],
                                 design.phase_offsets[k], design.phase_offsets[kp]);
            rep.delta_angles[k][kp] = off.delta;
            rep.delta_angles[kp][k] = off.delta;
            const double d = ring_pair_distance(c.ring_radii[k], c.ring_radii[kp], off.delta);
            if (d < rep.inter_min) {
                rep.inter_min = d;
                rep.inter_argmin_rings = {k, kp};
                inter_points = {ring_start[k] + off.n1, ring_start[kp] + off.n2};
            }
        }
    }

    if (intra_best <= rep.inter_min) {
        rep.d_min = intra_best;
        // adjacent points on the minimizing ring; a ring that wins the
        // minimization always carries at least two points
        const int k = rep.intra_argmin_ring;
        rep.argmin_pair = {ring_start[k], ring_start[k] + 1};
    } else {
        rep.d_min = rep.inter_min;
        rep.argmin_pair = inter_points;
    }
    return rep;
}

double brute_force_dmin(const Constellation& c) {
    if (c.size() < 2) throw std::invalid_argument("need at least two points");
    double best = kInf;
    const int n = c.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            best = std::min(best, std::abs(c.points[i] - c.points[j]));
    return best;
}

double dmin_of(const Constellation& c) {
    if (c.design) return min_distance(c, *c.design).d_min;
    return brute_force_dmin(c);
}

EnergyMoments energy_moments(const Constellation& c) {
    return c.moments;
}

MomentOrder fourth_moment_compare(const Constellation& a, const Constellation& b) {
    const double fa = a.moments.fourth;
    const double fb = b.moments.fourth;
    if (std::fabs(fa - fb) <= 1e-12) return MomentOrder::equal;
    return fa < fb ? MomentOrder::first_smaller : MomentOrder::second_smaller;
}

} // namespace apskit
