#include <cmath>

#include "doctest.h"

#include "apskit/comm.hpp"
#include "apskit/constellation.hpp"
#include "oracles.hpp"

using namespace apskit;

namespace {

// Quadrature references, frozen from an independent 32-node tensor
// Gauss-Hermite evaluation of the same integral with the same point
// orientation (the tensor grid is not rotation-invariant, so orientation
// matters at the ~3e-5 level even though the true MI is rotation-invariant).
constexpr double kQpskMi5dB = 1.718388122410;
constexpr double kQpskMi10dB = 1.993512995358;
constexpr double k8PskMi10dB = 2.677409495156;
constexpr double k16QamMi10dB = 3.163944776428;

}  // namespace

TEST_SUITE_BEGIN("comm");

TEST_CASE("channel spec converts between dB and linear") {
    const ChannelSpec a = ChannelSpec::from_db(10.0);
    CHECK(a.snr_c == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(a.snr_c_db == doctest::Approx(10.0).epsilon(1e-14));
    const ChannelSpec b = ChannelSpec::from_linear(4.0);
    CHECK(b.snr_c == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(b.snr_c_db == doctest::Approx(10.0 * std::log10(4.0)).epsilon(1e-14));
}

TEST_CASE("capacity pins") {
    CHECK(gaussian_capacity(ChannelSpec::from_db(10.0)) ==
          doctest::Approx(3.45943161863729725619936304673).epsilon(1e-15));
    CHECK(gaussian_capacity(ChannelSpec::from_db(5.0)) ==
          doctest::Approx(2.05737320860679496212871419874).epsilon(1e-14));
    CHECK(gaussian_capacity(ChannelSpec::from_linear(1.0)) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("analytic bound pins for unit-energy qpsk at 10 dB") {
    const Constellation qpsk = build_psk(2);  // d_min^2 = 2
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    CHECK(mi_lower_bound(qpsk, ch) ==
          doctest::Approx(-0.421473728733631460578311679838).epsilon(1e-12));
    CHECK(gap_upper_bound(qpsk, ch) ==
          doctest::Approx(3.88090534737092871677767472656).epsilon(1e-12));
}

TEST_CASE("quadrature oracle reproduces its frozen references") {
    CHECK(oracles::mi_quadrature_bits(build_psk(2), std::pow(10.0, 0.5)) ==
          doctest::Approx(kQpskMi5dB).epsilon(1e-9));
    CHECK(oracles::mi_quadrature_bits(build_psk(2), 10.0) ==
          doctest::Approx(kQpskMi10dB).epsilon(1e-9));
    CHECK(oracles::mi_quadrature_bits(build_psk(3), 10.0) ==
          doctest::Approx(k8PskMi10dB).epsilon(1e-9));
    CHECK(oracles::mi_quadrature_bits(build_qam(4), 10.0) ==
          doctest::Approx(k16QamMi10dB).epsilon(1e-9));
}

TEST_CASE("monte carlo estimate matches the quadrature oracle") {
    const long n = 200000;
    struct Case {
        Constellation c;
        double snr;
        double want;
    };
    const Case cases[] = {
        {build_psk(2), std::pow(10.0, 0.5), kQpskMi5dB},
        {build_psk(2), 10.0, kQpskMi10dB},
        {build_psk(3), 10.0, k8PskMi10dB},
        {build_qam(4), 10.0, k16QamMi10dB},
    };
    for (const Case& k : cases) {
        const MiEstimate e = estimate_mi(k.c, ChannelSpec::from_linear(k.snr), n, 42);
        REQUIRE(e.std_error_bits > 0.0);
        CHECK(std::abs(e.value_bits - k.want) < 5.0 * e.std_error_bits);
    }
    // a tradeoff design with no closed form: oracle computed on the fly
    const Constellation t = build_prop1_family(4, 2);
    const double want = oracles::mi_quadrature_bits(t, 10.0);
    const MiEstimate e = estimate_mi(t, ChannelSpec::from_linear(10.0), n, 42);
    CHECK(std::abs(e.value_bits - want) < 5.0 * e.std_error_bits);
}

TEST_CASE("estimator is deterministic in the seed") {
    const Constellation c = build_prop1_family(6, 2);
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    const MiEstimate a = estimate_mi(c, ch, 20000, 7);
    const MiEstimate b = estimate_mi(c, ch, 20000, 7);
    CHECK(a.value_bits == b.value_bits);
    CHECK(a.std_error_bits == b.std_error_bits);
    const MiEstimate d = estimate_mi(c, ch, 20000, 8);
    CHECK(a.value_bits != d.value_bits);
}

TEST_CASE("estimate stays inside hard information limits") {
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    for (const Constellation& c : {build_psk(2), build_qam(4), build_prop1_family(6, 2)}) {
        const MiEstimate e = estimate_mi(c, ch, 50000, 3);
        CHECK(e.value_bits >= 0.0);
        CHECK(e.value_bits <= c.m + 3.0 * e.std_error_bits);
        CHECK(e.value_bits <= gaussian_capacity(ch) + 3.0 * e.std_error_bits);
    }
}

TEST_CASE("high snr saturates the alphabet") {
    const MiEstimate e = estimate_mi(build_psk(2), ChannelSpec::from_db(30.0), 20000, 5);
    CHECK(e.value_bits == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("standard error shrinks like 1/sqrt(n)") {
    const Constellation c = build_qam(4);
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    const MiEstimate small = estimate_mi(c, ch, 10000, 9);
    const MiEstimate large = estimate_mi(c, ch, 160000, 9);
    const double ratio = small.std_error_bits / large.std_error_bits;
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("analytic bounds sandwich the measured rate") {
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    for (const Constellation& c : {build_psk(3), build_qam(4), build_prop1_family(6, 2)}) {
        const MiEstimate e = estimate_mi(c, ch, 100000, 11);
        CHECK(mi_lower_bound(c, ch) <= e.value_bits + 3.0 * e.std_error_bits);
        const double gap = gaussian_capacity(ch) - e.value_bits;
        CHECK(gap <= gap_upper_bound(c, ch) + 3.0 * e.std_error_bits);
    }
}

TEST_CASE("constant gap experiment picks m from the snr") {
    const ConstantGapReport rep = constant_gap_check(2, {5.0, 10.0}, 20000, 21);
    REQUIRE(rep.samples.size() == 2);
    CHECK(rep.samples[0].m == 4);  // ceil(log2 10^0.5) + 2
    CHECK(rep.samples[1].m == 6);  // ceil(log2 10) + 2
    for (const GapSample& s : rep.samples) {
        CHECK(s.gap_bits == doctest::Approx(s.capacity_bits - s.mi.value_bits).epsilon(1e-12));
        CHECK(s.gap_bits <= s.gap_bound_bits + 3.0 * s.mi.std_error_bits);
    }
    CHECK(rep.spread_bits ==
          doctest::Approx(std::abs(rep.samples[1].gap_bits - rep.samples[0].gap_bits))
              .epsilon(1e-12));
}

TEST_SUITE_END();
