#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace apskit {

using cplx = std::complex<double>;

/// Moments of the symbol energy |X|^2 under a uniform input distribution.
struct EnergyMoments {
    double mean = 0.0;     // E[|X|^2]; 1 after normalization
    double variance = 0.0; // Var(|X|^2)
    double fourth = 0.0;   // E[|X|^4]
};

/// Symbolic description of an APSK constellation: K concentric rings, ring k
/// carrying ring_counts[k] evenly spaced points at radius ring_radii_raw[k]
/// (pre-normalization) with phase offset phase_offsets[k].
struct ApskDesign {
    int m = 0;
    std::vector<int> ring_counts;
    std::vector<double> ring_radii_raw;
    std::vector<double> phase_offsets;

    int ring_count() const { return static_cast<int>(ring_counts.size()); }
    int point_count() const { return 1 << m; }

    /// Throws std::invalid_argument on count mismatch, non-increasing or
    /// non-positive radii, or inconsistent per-ring vectors.
    void validate() const;
};

/// Parameters of the ring-structured tradeoff family:
///   K     = floor(sqrt(2^(m+1)/alpha))
///   r~_k  = f(k)/sqrt(2^m),  f(k) = k - c*sqrt(k) + b
///   phi_k = 0
///   N_k   = alpha*k for k < K, remainder on ring K.
/// ring_count_override forces a specific K (the radii/count formulas are then
/// evaluated with that K); used to reproduce the labeled two-ring designs.
struct TradeoffParams {
    int m = 0;
    int alpha = 0;
    double b = 0.0;
    double c = 0.0;
    std::optional<int> ring_count_override;

    double f(int k) const;
    int ring_count() const;
    void validate() const;
};

enum class Family { apsk, tradeoff, psk, qam };

/// A built constellation, normalized to unit mean symbol energy. Immutable
/// after construction; safe to share across threads.
struct Constellation {
    std::vector<cplx> points;
    int m = 0;
    EnergyMoments moments;
    double min_energy = 0.0; // delta = min |x|^2
    double max_energy = 0.0;
    Family family = Family::apsk;

    /// Ring structure when the constellation is an APSK (absent for QAM).
    std::optional<ApskDesign> design;
    std::vector<double> ring_radii; // normalized radii, one per ring
    std::optional<TradeoffParams> params;

    /// Set when the remainder ring carries more than alpha*K points (the
    /// floor in the ring-count formula left a large last ring). Reported in
    /// metadata; the points are built exactly as the count formula states.
    bool last_ring_overfull = false;

    int size() const { return static_cast<int>(points.size()); }
};

/// Number of rings floor(sqrt(2^(m+1)/alpha)), evaluated in exact integer
/// arithmetic.
int tradeoff_ring_count(int m, int alpha);

/// Per-ring counts alpha*k with the remainder on ring K. Throws if the
/// remainder is not positive.
std::vector<int> tradeoff_ring_counts(int m, int alpha, int rings);

/// Build and normalize the constellation described by `design`.
Constellation build_apsk(const ApskDesign& design);

/// Build the tradeoff-family member for `p`. Rejects parameter tuples whose
/// perturbation f is non-positive or non-increasing on 1..K, or whose last
/// ring would be empty.
Constellation build_tradeoff_family(const TradeoffParams& p);

/// Tradeoff family with constant alpha and b = c = 0; rings scale as
/// sqrt(2^m) and the minimum distance as 2^(-m/2).
Constellation build_prop1_family(int m, int alpha);

/// 2^m-PSK: a single unit ring with aligned phase.
Constellation build_psk(int m);

/// Square 2^(m/2) x 2^(m/2) QAM on odd-integer coordinates, normalized.
/// m must be even.
Constellation build_qam(int m);

/// Rebuild a constellation from an explicit point list (e.g. deserialized
/// from JSON), renormalizing and recomputing the cached moments. A design may
/// be attached to enable the structured distance computation.
Constellation build_from_points(int m, std::vector<cplx> points, Family family,
                                std::optional<ApskDesign> design = std::nullopt);

} // namespace apskit
