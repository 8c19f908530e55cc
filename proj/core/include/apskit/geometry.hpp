#pragma once

#include <utility>
#include <vector>

#include "apskit/constellation.hpp"

namespace apskit {

/// Minimal angular offset between two rings and the point pair attaining it.
struct AngleOffset {
    double delta = 0.0; // radians, in [0, pi]
    int n1 = 0;
    int n2 = 0;
};

/// Minimum-distance decomposition of an APSK constellation into intra-ring
/// chords and inter-ring law-of-cosines terms.
struct DistanceReport {
    double d_min = 0.0;
    std::pair<int, int> argmin_pair{-1, -1}; // flattened point indices
    std::vector<double> intra_min;           // per ring; +inf for 1-point rings
    double inter_min = 0.0;                  // min over ring pairs; +inf if K = 1
    int intra_argmin_ring = -1;
    std::pair<int, int> inter_argmin_rings{-1, -1};
    std::vector<std::vector<double>> delta_angles; // K x K, diagonal 0
};

/// Reduce an angle to (-pi, pi].
double wrap_angle(double phi);

/// Chord between adjacent points on one ring: 2 r sin(pi/N). Returns +inf
/// for a single-point ring (no intra-ring pair to minimize over).
double intra_ring_dmin(double radius, int n_points);

/// Minimal |phi1 - phi2 + 2 pi n/N1 - 2 pi n'/N2| over all point pairs of
/// two rings, by exhaustive scan of the N1*N2 offsets.
AngleOffset min_angle_offset(int n1, int n2, double phi1, double phi2);

/// Distance between the closest points of two rings:
/// sqrt(r1^2 + r2^2 - 2 r1 r2 cos Delta).
double inter_ring_dmin(double r1, double r2, int n1, int n2, double phi1, double phi2);

/// Full decomposition for a constellation built from `design`. Throws if the
/// constellation does not match the design.
DistanceReport min_distance(const Constellation& c, const ApskDesign& design);

/// Exact pairwise minimum over all point pairs; the independent check for
/// min_distance.
double brute_force_dmin(const Constellation& c);

/// Minimum distance via whichever route the constellation supports: the
/// ring decomposition when the design is known, the pairwise scan otherwise.
double dmin_of(const Constellation& c);

/// Ring-pair angular offsets for a design; depends only on counts and
/// phases, not radii.
std::vector<std::vector<double>> delta_matrix(const ApskDesign& design);

/// Minimum distance from normalized radii, counts, and a precomputed offset
/// matrix. Lets sweeps over radii reuse the angular scan.
double dmin_from_delta(const std::vector<double>& radii, const std::vector<int>& counts,
                       const std::vector<std::vector<double>>& delta);

/// Recompute mean/variance/fourth moment of |X|^2 from the points.
EnergyMoments energy_moments(const Constellation& c);

enum class MomentOrder { first_smaller, equal, second_smaller };

/// Compare per-symbol fourth moments E[|X|^4]; for unit-mean-energy inputs
/// this orders the symbol-energy variances.
MomentOrder fourth_moment_compare(const Constellation& a, const Constellation& b);

} // namespace apskit
