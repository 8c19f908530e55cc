#include "apskit/sensing.hpp"

#include <cmath>
#include <stdexcept>

#include "apskit/rng.hpp"

namespace apskit {

void SensingSpec::validate() const {
    if (!(sigma_s2 > 0.0)) throw std::invalid_argument("sigma_s2 must be positive");
    if (!(power > 0.0)) throw std::invalid_argument("power must be positive");
    if (block_len < 1) throw std::invalid_argument("block length must be at least 1");
}

double crb_conditional(const std::vector<double>& energies, const SensingSpec& s) {
    s.validate();
    double total = 0.0;
    for (double e : energies) total += e;
    if (!(total > 0.0)) throw std::invalid_argument("block energy must be positive");
    return s.sigma_s2 / (s.power * total);
}

double avg_crb_bound(const Constellation& c, const SensingSpec& s) {
    s.validate();
    const double delta = c.min_energy;
    if (!(delta > 0.0))
        throw std::invalid_argument("minimum symbol energy must be positive for the bound");
    const double L = static_cast<double>(s.block_len);
    return (s.sigma_s2 / s.power) * (1.0 / L + c.moments.variance / (L * L * delta));
}

CrbEstimate avg_crb_monte_carlo(const Constellation& c, const SensingSpec& s, long n_blocks,
                                std::uint64_t seed) {
    s.validate();
    if (n_blocks < 1000) throw std::invalid_argument("n_blocks must be at least 1000");

    const std::size_t M = c.size();
    std::vector<double> energy(M);
    for (std::size_t i = 0; i < M; ++i) energy[i] = std::norm(c.points[i]);

    Rng rng(seed);
    const double scale = s.sigma_s2 / s.power;

    double mean = 0.0;
    double m2 = 0.0;
    for (long t = 0; t < n_blocks; ++t) {
        double total = 0.0;
        for (int l = 0; l < s.block_len; ++l) total += energy[rng.next_index(M)];
        const double v = scale / total;

        const double delta = v - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (v - mean);
    }

    CrbEstimate est;
    est.mean = mean;
    est.std_error =
        std::sqrt(m2 / (static_cast<double>(n_blocks - 1) * static_cast<double>(n_blocks)));
    est.n_blocks = n_blocks;
    est.seed = seed;
    return est;
}

double variance_metric(const Constellation& c) { return c.moments.variance; }

}  // namespace apskit
