#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "apskit/constellation.hpp"

namespace oracles {

// Mutual information of a uniform finite input on the complex AWGN channel,
// integrated with a 32x32 tensor Gauss-Hermite rule instead of sampling.
// Deterministic cross-check for the Monte Carlo estimator; O(M^2) per node
// pair, so intended for small constellations (m <= 6).
inline double mi_quadrature_bits(const apskit::Constellation& c, double snr) {
    static const double nodes[32] = {
        -7.12581390983072804e+00, -6.40949814926966077e+00,
        -5.81222594951591365e+00, -5.27555098651588050e+00,
        -4.77716450350259603e+00, -4.30554795335119866e+00,
        -3.85375548547144486e+00, -3.41716749281857091e+00,
        -2.99249082500237407e+00, -2.57724953773231746e+00,
        -2.16949918360611216e+00, -1.76765410946320145e+00,
        -1.37037641095287177e+00, -9.76500463589682788e-01,
        -5.84978765435932413e-01, -1.94840741569399345e-01,
        1.94840741569399345e-01,  5.84978765435932413e-01,
        9.76500463589682788e-01,  1.37037641095287177e+00,
        1.76765410946320145e+00,  2.16949918360611216e+00,
        2.57724953773231746e+00,  2.99249082500237407e+00,
        3.41716749281857091e+00,  3.85375548547144486e+00,
        4.30554795335119866e+00,  4.77716450350259603e+00,
        5.27555098651588050e+00,  5.81222594951591365e+00,
        6.40949814926966077e+00,  7.12581390983072804e+00,
    };
    static const double weights[32] = {
        7.31067642738409573e-23, 9.23173653651825780e-19,
        1.19734401709285026e-15, 4.21501021132641555e-13,
        5.93329146339667624e-11, 4.09883216477087927e-09,
        1.57416779254558817e-07, 3.65058512956237819e-06,
        5.41658406181999070e-05, 5.36268365527972049e-04,
        3.65489032665442621e-03, 1.75534288315734380e-02,
        6.04581309559126881e-02, 1.51269734076642320e-01,
        2.77458142302529964e-01, 3.75238352592802471e-01,
        3.75238352592802471e-01, 2.77458142302529964e-01,
        1.51269734076642320e-01, 6.04581309559126881e-02,
        1.75534288315734380e-02, 3.65489032665442621e-03,
        5.36268365527972049e-04, 5.41658406181999070e-05,
        3.65058512956237819e-06, 1.57416779254558817e-07,
        4.09883216477087927e-09, 5.93329146339667624e-11,
        4.21501021132641555e-13, 1.19734401709285026e-15,
        9.23173653651825780e-19, 7.31067642738409573e-23,
    };

    const int M = c.size();
    const double m_bits = std::log2(static_cast<double>(M));
    const double s = std::sqrt(snr);
    const double inv_pi = 1.0 / 3.14159265358979323846;
    const double inv_ln2 = 1.4426950408889634074;

    std::vector<double> ur(M), ui(M), usq(M), d(M);
    double total = 0.0;
    for (int j = 0; j < M; ++j) {
        for (int i = 0; i < M; ++i) {
            ur[i] = s * (c.points[j].real() - c.points[i].real());
            ui[i] = s * (c.points[j].imag() - c.points[i].imag());
            usq[i] = ur[i] * ur[i] + ui[i] * ui[i];
        }
        double acc = 0.0;
        for (int a = 0; a < 32; ++a) {
            for (int b = 0; b < 32; ++b) {
                const double wr = nodes[a], wi = nodes[b];
                double max_e = 0.0;  // the i = j term is exactly 0
                for (int i = 0; i < M; ++i) {
                    d[i] = -(usq[i] + 2.0 * (ur[i] * wr + ui[i] * wi));
                    max_e = std::max(max_e, d[i]);
                }
                double sum = 0.0;
                for (int i = 0; i < M; ++i) sum += std::exp(d[i] - max_e);
                acc += weights[a] * weights[b] * (max_e + std::log(sum));
            }
        }
        total += acc * inv_pi;
    }
    return m_bits - (total / M) * inv_ln2;
}

}  // namespace oracles
