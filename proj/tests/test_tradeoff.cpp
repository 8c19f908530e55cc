#include <cmath>
#include <vector>

#include "doctest.h"

#include "apskit/rng.hpp"
#include "apskit/tradeoff.hpp"

using namespace apskit;

namespace {

MetricPoint make_point(double variance, double rate, double se = 1e-6) {
    MetricPoint p;
    p.variance = variance;
    p.rate.value_bits = rate;
    p.rate.std_error_bits = se;
    p.rings = 2;
    p.rings_formula = 2;
    p.d_min = 0.1;
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("tradeoff");

TEST_CASE("tuple seeds are pure and collision-averse") {
    CHECK(tuple_seed(1, 2, 0.0, 0.0) == tuple_seed(1, 2, 0.0, 0.0));
    CHECK(tuple_seed(1, 2, 0.0, 0.0) != tuple_seed(1, 3, 0.0, 0.0));
    CHECK(tuple_seed(1, 2, 0.0, 0.0) != tuple_seed(1, 2, 0.25, 0.0));
    CHECK(tuple_seed(1, 2, 0.0, 0.0) != tuple_seed(1, 2, 0.0, 0.25));
    CHECK(tuple_seed(1, 2, 0.0, 0.0) != tuple_seed(2, 2, 0.0, 0.0));
}

TEST_CASE("domination flags: higher rate at lower variance wins") {
    std::vector<MetricPoint> pts = {
        make_point(3.0, 1.0),
        make_point(2.0, 2.0),
        make_point(1.0, 3.0),
    };
    const std::vector<bool> flags = pareto_flags(pts);
    CHECK(flags == std::vector<bool>{false, false, true});
}

TEST_CASE("incomparable points are all kept") {
    std::vector<MetricPoint> pts = {
        make_point(1.0, 1.0),
        make_point(2.0, 2.0),
        make_point(3.0, 3.0),
    };
    const std::vector<bool> flags = pareto_flags(pts);
    CHECK(flags == std::vector<bool>{true, true, true});
}

TEST_CASE("statistical ties never dominate each other") {
    // rates differ by less than one combined standard error and the variances
    // agree to 1e-12: both points survive
    std::vector<MetricPoint> pts = {
        make_point(1.0, 2.000, 0.01),
        make_point(1.0 + 1e-13, 2.005, 0.01),
    };
    const std::vector<bool> flags = pareto_flags(pts);
    CHECK(flags == std::vector<bool>{true, true});

    // identical variance but a rate gap beyond noise: only the better point
    // survives (with distinct variances the exact comparison keeps both)
    pts[1].variance = 1.0;
    pts[1].rate.value_bits = 2.2;
    const std::vector<bool> strict = pareto_flags(pts);
    CHECK(strict == std::vector<bool>{false, true});
}

TEST_CASE("skipped entries are never flagged") {
    std::vector<MetricPoint> pts = {make_point(1.0, 2.0), make_point(2.0, 1.0)};
    pts[1].skipped_reason = "perturbation f(1) <= 0";
    const std::vector<bool> flags = pareto_flags(pts);
    CHECK(flags[0]);
    CHECK_FALSE(flags[1]);
}

TEST_CASE("filter flags every point and sorts by variance") {
    std::vector<MetricPoint> pts = {
        make_point(3.0, 3.0),
        make_point(1.0, 1.0),
        make_point(2.0, 2.0),
        make_point(2.5, 1.5),  // dominated by (2.0, 2.0)
    };
    const std::vector<MetricPoint> f = pareto_filter(pts);
    REQUIRE(f.size() == 4);  // dominated points stay in the list, unflagged
    CHECK(f[0].variance == 1.0);
    CHECK(f[1].variance == 2.0);
    CHECK(f[2].variance == 2.5);
    CHECK(f[3].variance == 3.0);
    CHECK(f[0].pareto);
    CHECK(f[1].pareto);
    CHECK_FALSE(f[2].pareto);
    CHECK(f[3].pareto);
}

TEST_CASE("time sharing segment interpolates both coordinates linearly") {
    TimeSharingSegment seg;
    seg.m_psk = 6;
    seg.m_qam = 6;
    seg.psk_rate.value_bits = 2.0;
    seg.psk_rate.std_error_bits = 0.01;
    seg.qam_rate.value_bits = 3.0;
    seg.qam_rate.std_error_bits = 0.02;
    seg.psk_variance = 0.0;
    seg.qam_variance = 0.4;

    CHECK(seg.rate_at_lambda(1.0) == doctest::Approx(2.0));
    CHECK(seg.rate_at_lambda(0.0) == doctest::Approx(3.0));
    CHECK(seg.rate_at_lambda(0.5) == doctest::Approx(2.5));
    CHECK(seg.variance_at_lambda(0.5) == doctest::Approx(0.2));

    CHECK(seg.rate_at_variance(0.0) == doctest::Approx(2.0));
    CHECK(seg.rate_at_variance(0.4) == doctest::Approx(3.0));
    CHECK(seg.rate_at_variance(0.2) == doctest::Approx(2.5));
    // clamped outside the segment
    CHECK(seg.rate_at_variance(-1.0) == doctest::Approx(2.0));
    CHECK(seg.rate_at_variance(9.0) == doctest::Approx(3.0));

    // interpolated standard error stays between the endpoint errors
    const double se = seg.stderr_at_variance(0.2);
    CHECK(se >= 0.01 / 2);
    CHECK(se <= 0.01 + 0.02);
}

TEST_CASE("baseline endpoints are psk and qam") {
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    const TimeSharingSegment seg = time_sharing_baseline(6, 6, ch, 5000, 99);
    REQUIRE(seg.samples.size() == 21);
    CHECK(seg.samples.front().lambda == 0.0);
    CHECK(seg.samples.back().lambda == 1.0);
    CHECK(seg.psk_variance == 0.0);
    CHECK(seg.qam_variance == doctest::Approx(8.0 / 21.0).epsilon(1e-12));
    CHECK(seg.samples.front().rate_bits == doctest::Approx(seg.qam_rate.value_bits));
    CHECK(seg.samples.back().rate_bits == doctest::Approx(seg.psk_rate.value_bits));
    // 64-QAM out-rates 64-PSK at 10 dB by a wide margin
    CHECK(seg.qam_rate.value_bits > seg.psk_rate.value_bits + 0.2);

    CHECK_THROWS_AS((void)time_sharing_baseline(6, 5, ch, 5000, 99), std::invalid_argument);
}

TEST_CASE("sweep records skips, flags a frontier, and is reproducible") {
    SweepConfig cfg;
    cfg.m = 4;
    cfg.snr_c_db = 10.0;
    cfg.alpha_lo = 2;
    cfg.alpha_hi = 16;
    cfg.b_grid = {0.0, 0.5};
    cfg.c_grid = {0.0, 1.0};  // c = 1 at b = 0 zeroes f(1): guaranteed skips
    cfg.n_samples = 2000;
    cfg.seed = 31;
    cfg.threads = 1;

    const FrontierSet a = sweep(cfg);
    CHECK(a.points.size() == 15 * 2 * 2);
    CHECK(a.n_valid() + a.n_skipped() == a.points.size());
    CHECK(a.n_skipped() >= 15);  // every alpha at (b=0, c=1)
    for (const MetricPoint& p : a.points)
        if (!p.valid()) CHECK_FALSE(p.skipped_reason.empty());

    const std::vector<MetricPoint> frontier = a.frontier();
    CHECK(!frontier.empty());
    for (std::size_t i = 1; i < frontier.size(); ++i)
        CHECK(frontier[i - 1].variance <= frontier[i].variance + 1e-15);

    // a constant-modulus point is always on the frontier
    bool has_zero_var = false;
    for (const MetricPoint& p : frontier) has_zero_var |= (p.variance == 0.0);
    CHECK(has_zero_var);

    cfg.threads = 2;
    const FrontierSet b = sweep(cfg);
    REQUIRE(b.points.size() == a.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].rate.value_bits == b.points[i].rate.value_bits);
        CHECK(a.points[i].variance == b.points[i].variance);
        CHECK(a.points[i].pareto == b.points[i].pareto);
        CHECK(a.points[i].skipped_reason == b.points[i].skipped_reason);
    }
}

TEST_CASE("grid seeds do not depend on grid shape") {
    // the tuple (3, 0.5, 0) must draw the same stream no matter which sweep
    // enumerates it
    const std::uint64_t s = tuple_seed(7, 3, 0.5, 0.0);
    SweepConfig cfg;
    cfg.m = 4;
    cfg.alpha_lo = 3;
    cfg.alpha_hi = 3;
    cfg.b_grid = {0.5};
    cfg.c_grid = {0.0};
    cfg.n_samples = 2000;
    cfg.seed = 7;
    cfg.threads = 1;
    const FrontierSet narrow = sweep(cfg);
    cfg.b_grid = {0.0, 0.5};
    cfg.c_grid = {0.0};
    const FrontierSet wide = sweep(cfg);
    REQUIRE(narrow.points.size() == 1);
    REQUIRE(wide.points.size() == 2);
    CHECK(narrow.points[0].rate.seed == s);
    CHECK(wide.points[1].rate.seed == s);
    CHECK(narrow.points[0].rate.value_bits == wide.points[1].rate.value_bits);
}

TEST_CASE("named reference designs build with the tabulated ring counts") {
    const ChannelSpec ch = ChannelSpec::from_db(10.0);
    const std::vector<MetricPoint> rows = table1_points(ch, 2000, 1);
    REQUIRE(rows.size() == 6);
    const char* labels[] = {"A", "B", "C", "D", "E", "F"};
    const int rings[] = {2, 5, 5, 2, 2, 2};
    const int formula[] = {2, 5, 5, 5, 5, 4};
    for (int i = 0; i < 6; ++i) {
        CHECK(rows[i].label == labels[i]);
        CHECK(rows[i].rings == rings[i]);
        CHECK(rows[i].rings_formula == formula[i]);
        CHECK(rows[i].valid());
        CHECK(rows[i].d_min > 0.0);
    }
}

TEST_CASE("sweep config validation") {
    SweepConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.alpha_lo = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.alpha_lo = 2;
    cfg.n_samples = 10;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.n_samples = 2000;
    cfg.b_grid = {-0.5};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_SUITE_END();
