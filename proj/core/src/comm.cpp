#include "apskit/comm.hpp"

#include <cmath>
#include <stdexcept>

#include "apskit/geometry.hpp"
#include "apskit/rng.hpp"

namespace apskit {
namespace {

constexpr double kLog2e = 1.4426950408889634073599246810019;
// log2(2*pi*e/4), the shaping-plus-packing constant of the analytic bounds
constexpr double kShapingConst = 2.0941911703612822054032039761;
constexpr double kPi = 3.1415926535897932384626433832795;
// exp(x) underflows to exactly 0.0 below this, so such terms can be skipped
// without changing the sum in any bit
constexpr double kExpFloor = -746.0;

}  // namespace

ChannelSpec ChannelSpec::from_db(double db) {
    ChannelSpec ch;
    ch.snr_c = std::pow(10.0, db / 10.0);
    ch.snr_c_db = db;
    ch.sigma_c2 = 1.0;
    return ch;
}

ChannelSpec ChannelSpec::from_linear(double snr) {
    if (!(snr > 0.0)) throw std::invalid_argument("snr must be positive");
    ChannelSpec ch;
    ch.snr_c = snr;
    ch.snr_c_db = 10.0 * std::log10(snr);
    ch.sigma_c2 = 1.0;
    return ch;
}

MiEstimate estimate_mi(const Constellation& c, const ChannelSpec& ch, long n_samples,
                       std::uint64_t seed) {
    if (n_samples < 1000) throw std::invalid_argument("n_samples must be at least 1000");
    if (!(ch.snr_c > 0.0)) throw std::invalid_argument("snr must be positive");

    const std::size_t M = c.size();
    const double m_bits = static_cast<double>(c.m);
    const double s = std::sqrt(ch.snr_c);

    // Pairwise scaled differences w[j*M+i] = sqrt(snr)*(x_j - x_i) and their
    // squared magnitudes, hoisted out of the sample loop.
    std::vector<double> w_re(M * M), w_im(M * M), w_sq(M * M);
    for (std::size_t j = 0; j < M; ++j) {
        for (std::size_t i = 0; i < M; ++i) {
            const cplx w = s * (c.points[j] - c.points[i]);
            w_re[j * M + i] = w.real();
            w_im[j * M + i] = w.imag();
            w_sq[j * M + i] = std::norm(w);
        }
    }

    Rng rng(seed);
    std::vector<double> expo(M);

    double mean = 0.0;
    double m2 = 0.0;
    for (long t = 0; t < n_samples; ++t) {
        const std::size_t j = rng.next_index(M);
        const cplx z = rng.next_cn01();
        const double zr = z.real();
        const double zi = z.imag();

        // Exponents of the mixture terms: -( |w_i|^2 + 2 Re(w_i conj(z)) ).
        // The i = j term is exactly 0, so max >= 0 and the log-sum is >= 0.
        const double* wr = &w_re[j * M];
        const double* wi = &w_im[j * M];
        const double* ws = &w_sq[j * M];
        double max_e = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
            const double e = -(ws[i] + 2.0 * (wr[i] * zr + wi[i] * zi));
            expo[i] = e;
            if (e > max_e) max_e = e;
        }
        double sum = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
            const double d = expo[i] - max_e;
            if (d >= kExpFloor) sum += std::exp(d);
        }
        const double v = m_bits - (max_e + std::log(sum)) * kLog2e;
        if (std::isnan(v)) throw std::runtime_error("mutual information accumulation produced NaN");

        const double delta = v - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (v - mean);
    }

    MiEstimate est;
    est.value_bits = mean < 0.0 ? 0.0 : mean;
    est.std_error_bits =
        std::sqrt(m2 / (static_cast<double>(n_samples - 1) * static_cast<double>(n_samples)));
    est.n_samples = n_samples;
    est.seed = seed;
    return est;
}

double mi_lower_bound(const Constellation& c, const ChannelSpec& ch) {
    const double d = dmin_of(c);
    if (!(d > 0.0)) throw std::invalid_argument("minimum distance must be positive");
    const double d2 = d * d;
    return static_cast<double>(c.m) - kShapingConst -
           std::log2(1.0 + 16.0 / (kPi * ch.snr_c * d2));
}

double gap_upper_bound(const Constellation& c, const ChannelSpec& ch) {
    const double d = dmin_of(c);
    if (!(d > 0.0)) throw std::invalid_argument("minimum distance must be positive");
    const double d2 = d * d;
    const double snr = ch.snr_c;
    const double inner =
        1.0 + snr + 16.0 / (kPi * d2 * snr) + 16.0 / (kPi * d2);
    return kShapingConst + std::log2(inner / std::pow(2.0, c.m));
}

double gaussian_capacity(const ChannelSpec& ch) {
    if (!(ch.snr_c > 0.0)) throw std::invalid_argument("snr must be positive");
    return std::log2(1.0 + ch.snr_c);
}

ConstantGapReport constant_gap_check(int alpha, const std::vector<double>& snr_db_list,
                                     long n_samples, std::uint64_t seed) {
    ConstantGapReport report;
    report.alpha = alpha;
    report.samples.reserve(snr_db_list.size());

    double gap_min = 0.0;
    double gap_max = 0.0;
    for (std::size_t i = 0; i < snr_db_list.size(); ++i) {
        GapSample sample;
        sample.snr_db = snr_db_list[i];
        const ChannelSpec ch = ChannelSpec::from_db(sample.snr_db);
        sample.snr_linear = ch.snr_c;
        sample.m = static_cast<int>(std::ceil(std::log2(ch.snr_c))) + 2;

        const Constellation c = build_prop1_family(sample.m, alpha);
        sample.rings = static_cast<int>(c.ring_radii.size());
        sample.capacity_bits = gaussian_capacity(ch);
        sample.mi = estimate_mi(c, ch, n_samples, mix_seed(seed, {static_cast<std::int64_t>(i)}));
        sample.gap_bits = sample.capacity_bits - sample.mi.value_bits;
        sample.gap_bound_bits = gap_upper_bound(c, ch);

        if (report.samples.empty() || sample.gap_bits < gap_min) gap_min = sample.gap_bits;
        if (report.samples.empty() || sample.gap_bits > gap_max) gap_max = sample.gap_bits;
        report.samples.push_back(sample);
    }
    report.spread_bits = report.samples.empty() ? 0.0 : gap_max - gap_min;
    return report;
}

}  // namespace apskit
