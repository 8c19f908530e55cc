#include "apskit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "apskit/comm.hpp"
#include "apskit/geometry.hpp"
#include "apskit/io.hpp"
#include "apskit/sensing.hpp"
#include "apskit/tradeoff.hpp"

namespace apskit {
namespace {

namespace fs = std::filesystem;

constexpr double kPackingConst = 186.509667991878083;  // 96 + 64*sqrt(2)
constexpr std::size_t kMaxFailures = 12;

void add_fail(SuiteResult& r, const std::string& msg) {
    if (r.failures.size() < kMaxFailures) r.failures.push_back(msg);
}

std::string g12(double v) { return format_g12(v); }

std::string tradeoff_label(const TradeoffParams& p) {
    std::ostringstream ss;
    ss << "m=" << p.m << " alpha=" << p.alpha << " b=" << g12(p.b) << " c=" << g12(p.c);
    return ss.str();
}

std::vector<std::pair<std::string, Constellation>> mixed_test_set(std::uint64_t seed,
                                                                  int n_random) {
    std::vector<std::pair<std::string, Constellation>> set;
    set.emplace_back("qpsk", build_psk(2));
    set.emplace_back("8psk", build_psk(3));
    set.emplace_back("16qam", build_qam(4));
    Rng rng(seed);
    for (int i = 0; i < n_random; ++i) {
        const TradeoffParams p = random_valid_tradeoff(rng);
        set.emplace_back(tradeoff_label(p), build_tradeoff_family(p));
    }
    return set;
}

std::string read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- suites ---------------------------------------------------------------

SuiteResult suite_ring_count_span(const VerifyOptions&) {
    SuiteResult r;
    r.name = "ring_count_span";
    static const int expected[] = {8, 6, 5, 5, 4, 4, 4, 3, 3, 3, 3, 3, 3, 2, 2, 2,
                                   2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1};

    std::set<int> attained;
    std::ostringstream seq;
    bool ok = true;
    for (int alpha = 2; alpha <= 33; ++alpha) {
        const int k = tradeoff_ring_count(6, alpha);
        attained.insert(k);
        seq << (alpha > 2 ? "," : "") << k;
        if (k != expected[alpha - 2]) {
            ok = false;
            add_fail(r, "K(m=6, alpha=" + std::to_string(alpha) + ") = " + std::to_string(k) +
                            ", expected " + std::to_string(expected[alpha - 2]));
        }
    }
    if (*attained.begin() != 1 || *attained.rbegin() != 8) {
        ok = false;
        add_fail(r, "K range is [" + std::to_string(*attained.begin()) + "," +
                        std::to_string(*attained.rbegin()) + "], expected [1,8]");
    }

    std::ostringstream att;
    for (int k : attained) att << k << " ";
    r.detail = "K(alpha=2..33) = " + seq.str() + "; attained { " + att.str() +
               "} spanning [1,8] (K=7 would need a non-integer alpha)";
    r.passed = ok;
    return r;
}

SuiteResult suite_reference_points(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "reference_points";
    static const char* labels = "ABCDEF";
    static const int want_rings[] = {2, 5, 5, 2, 2, 2};
    static const int want_formula[] = {2, 5, 5, 5, 5, 4};

    try {
        const std::vector<MetricPoint> pts =
            table1_points(ChannelSpec::from_db(10.0), 2000, opts.seed);
        bool ok = pts.size() == 6;
        std::ostringstream d;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const MetricPoint& p = pts[i];
            if (p.rings != want_rings[i] || p.rings_formula != want_formula[i]) {
                ok = false;
                add_fail(r, std::string("point ") + labels[i] + ": K = " +
                                std::to_string(p.rings) + " (closed form " +
                                std::to_string(p.rings_formula) + "), expected " +
                                std::to_string(want_rings[i]) + " (" +
                                std::to_string(want_formula[i]) + ")");
            }
            d << labels[i] << ":K=" << p.rings << "/f" << p.rings_formula
              << " var=" << g12(p.variance) << " d=" << g12(p.d_min) << "  ";
        }
        r.detail = d.str();
        r.passed = ok;
    } catch (const std::exception& e) {
        r.passed = false;
        add_fail(r, e.what());
        r.detail = "builder rejected a reference design";
    }
    return r;
}

SuiteResult suite_packing_bound(const VerifyOptions&) {
    SuiteResult r;
    r.name = "packing_bound";
    const std::vector<double> grid = SweepConfig::default_grid();

    long generated = 0, skipped = 0, violations = 0;
    double max_product = 0.0;
    std::string argmax;

    for (int m = 2; m <= 10; ++m) {
        const long two_m = 1L << m;
        const double root_2m = std::sqrt(static_cast<double>(two_m));
        for (int alpha = 1; alpha <= two_m; ++alpha) {
            const int rings = tradeoff_ring_count(m, alpha);
            const std::vector<int> counts = tradeoff_ring_counts(m, alpha, rings);

            ApskDesign probe;
            probe.m = m;
            probe.ring_counts = counts;
            probe.ring_radii_raw.resize(counts.size());
            probe.phase_offsets.assign(counts.size(), 0.0);
            const std::vector<std::vector<double>> delta = delta_matrix(probe);

            std::vector<double> radii(counts.size());
            for (double b : grid) {
                for (double c : grid) {
                    TradeoffParams p;
                    p.m = m;
                    p.alpha = alpha;
                    p.b = b;
                    p.c = c;
                    try {
                        p.validate();
                    } catch (const std::exception&) {
                        ++skipped;
                        continue;
                    }
                    double energy = 0.0;
                    for (int k = 1; k <= rings; ++k) {
                        radii[k - 1] = p.f(k) / root_2m;
                        energy += counts[k - 1] * radii[k - 1] * radii[k - 1];
                    }
                    energy /= static_cast<double>(two_m);
                    const double scale = 1.0 / std::sqrt(energy);
                    for (double& rad : radii) rad *= scale;

                    const double d = dmin_from_delta(radii, counts, delta);
                    const double product = d * d * static_cast<double>(two_m);
                    ++generated;
                    if (product > max_product) {
                        max_product = product;
                        argmax = tradeoff_label(p);
                    }
                    if (product > kPackingConst * (1.0 + 1e-9)) {
                        ++violations;
                        add_fail(r, "d_min^2 * 2^m = " + g12(product) + " > " +
                                        g12(kPackingConst) + " at " + tradeoff_label(p));
                    }
                }
            }
        }
    }

    r.passed = violations == 0 && generated > 10000;
    r.detail = std::to_string(generated) + " designs over m=2..10 (skipped " +
               std::to_string(skipped) + " invalid tuples); max d_min^2*2^m = " +
               g12(max_product) + " at " + argmax + "; bound " + g12(kPackingConst) +
               "; violations " + std::to_string(violations);
    return r;
}

SuiteResult suite_dmin_scaling(const VerifyOptions&) {
    SuiteResult r;
    r.name = "dmin_scaling";
    const int alphas[] = {2, 4};
    const int ms[] = {4, 6, 8, 10};

    bool ok = true;
    double pooled_min = 1e300, pooled_max = 0.0;
    std::ostringstream d;
    for (int alpha : alphas) {
        double lo = 1e300, hi = 0.0;
        for (int m : ms) {
            const Constellation c = build_prop1_family(m, alpha);
            const double dmin = min_distance(c, *c.design).d_min;
            const double product = dmin * dmin * alpha * static_cast<double>(1L << m);
            lo = std::min(lo, product);
            hi = std::max(hi, product);
        }
        pooled_min = std::min(pooled_min, lo);
        pooled_max = std::max(pooled_max, hi);
        const double ratio = hi / lo;
        d << "alpha=" << alpha << " band [" << g12(lo) << "," << g12(hi) << "] ratio "
          << g12(ratio) << "; ";
        if (!(ratio <= 4.0)) {
            ok = false;
            add_fail(r, "alpha=" + std::to_string(alpha) + ": band ratio " + g12(ratio) +
                            " exceeds 4");
        }
    }
    d << "pooled ratio " << g12(pooled_max / pooled_min)
      << " (bands are per-alpha; the constant depends on alpha)";
    r.detail = d.str();
    r.passed = ok;
    return r;
}

SuiteResult suite_mi_bounds(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "mi_bounds";
    const auto designs = mixed_test_set(mix_seed(opts.seed, {7}), 10);
    const double snrs[] = {5.0, 10.0, 15.0};
    const long n = opts.mi_samples();

    long checks = 0, violations = 0;
    double min_lb_margin = 1e300, min_gap_margin = 1e300;
    for (std::size_t di = 0; di < designs.size(); ++di) {
        const auto& [label, c] = designs[di];
        MiEstimate prev;
        bool have_prev = false;
        for (std::size_t si = 0; si < std::size(snrs); ++si) {
            const ChannelSpec ch = ChannelSpec::from_db(snrs[si]);
            const MiEstimate mi = estimate_mi(
                c, ch, n,
                mix_seed(opts.seed, {100 + static_cast<std::int64_t>(di),
                                     static_cast<std::int64_t>(si)}));
            const double slack = 3.0 * mi.std_error_bits;

            const double lb_margin = mi.value_bits + slack - mi_lower_bound(c, ch);
            const double gap_margin =
                gap_upper_bound(c, ch) + slack - (gaussian_capacity(ch) - mi.value_bits);
            min_lb_margin = std::min(min_lb_margin, lb_margin);
            min_gap_margin = std::min(min_gap_margin, gap_margin);
            checks += 2;
            if (lb_margin < 0.0) {
                ++violations;
                add_fail(r, label + " @ " + g12(snrs[si]) + " dB: lower bound above MI by " +
                                g12(-lb_margin));
            }
            if (gap_margin < 0.0) {
                ++violations;
                add_fail(r, label + " @ " + g12(snrs[si]) + " dB: capacity gap above bound by " +
                                g12(-gap_margin));
            }
            if (have_prev &&
                mi.value_bits + 3.0 * (mi.std_error_bits + prev.std_error_bits) <
                    prev.value_bits) {
                ++violations;
                add_fail(r, label + ": MI decreased from " + g12(prev.value_bits) + " to " +
                                g12(mi.value_bits) + " between SNR steps");
            }
            ++checks;
            prev = mi;
            have_prev = true;
        }
    }

    r.passed = violations == 0;
    r.detail = std::to_string(designs.size()) + " designs x 3 SNRs, n=" + std::to_string(n) +
               "; min lower-bound margin " + g12(min_lb_margin) + ", min gap margin " +
               g12(min_gap_margin) + " bits; violations " + std::to_string(violations) + "/" +
               std::to_string(checks);
    return r;
}

SuiteResult suite_constant_gap(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "constant_gap";
    const ConstantGapReport report =
        constant_gap_check(2, {5.0, 10.0, 15.0, 20.0}, opts.mi_samples(), mix_seed(opts.seed, {8}));

    bool ok = report.spread_bits <= 0.5;
    if (!ok)
        add_fail(r, "gap spread " + g12(report.spread_bits) + " bits exceeds 0.5");
    std::ostringstream d;
    d << "gaps:";
    for (const GapSample& s : report.samples) {
        d << " " << g12(s.snr_db) << "dB(m=" << s.m << ")=" << g12(s.gap_bits);
        if (s.gap_bits > s.gap_bound_bits + 3.0 * s.mi.std_error_bits) {
            ok = false;
            add_fail(r, "measured gap " + g12(s.gap_bits) + " exceeds analytic bound " +
                            g12(s.gap_bound_bits) + " at " + g12(s.snr_db) + " dB");
        }
    }
    d << "; spread " << g12(report.spread_bits) << " bits (limit 0.5)";
    r.detail = d.str();
    r.passed = ok;
    return r;
}

SuiteResult suite_crb_ordering(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "crb_ordering";
    std::vector<std::pair<std::string, Constellation>> designs;
    designs.emplace_back("64psk", build_psk(6));
    designs.emplace_back("16qam", build_qam(4));
    Rng rng(mix_seed(opts.seed, {9}));
    for (int i = 0; i < 10; ++i) {
        const TradeoffParams p = random_valid_tradeoff(rng);
        designs.emplace_back(tradeoff_label(p), build_tradeoff_family(p));
    }

    long violations = 0;
    double worst_ratio = 0.0;
    for (std::size_t di = 0; di < designs.size(); ++di) {
        const auto& [label, c] = designs[di];
        std::vector<double> gaps;
        for (int L : opts.block_lengths) {
            SensingSpec spec;
            spec.block_len = L;
            const double bound = avg_crb_bound(c, spec);
            const double floor = spec.sigma_s2 / (spec.power * L);
            const CrbEstimate mc = avg_crb_monte_carlo(
                c, spec, opts.crb_blocks(),
                mix_seed(opts.seed, {200 + static_cast<std::int64_t>(di), L}));

            if (mc.mean > bound + 3.0 * mc.std_error) {
                ++violations;
                add_fail(r, label + " L=" + std::to_string(L) + ": MC mean " + g12(mc.mean) +
                                " above bound " + g12(bound));
            }
            if (mc.mean < floor - 3.0 * mc.std_error) {
                ++violations;
                add_fail(r, label + " L=" + std::to_string(L) + ": MC mean " + g12(mc.mean) +
                                " below the constant-modulus floor " + g12(floor));
            }
            if (variance_metric(c) == 0.0) {
                if (bound != floor) {
                    ++violations;
                    add_fail(r, label + " L=" + std::to_string(L) +
                                    ": zero-variance bound is not exactly the floor");
                }
                if (std::abs(mc.mean - floor) > 1e-9 * floor || mc.std_error > 1e-9 * floor) {
                    ++violations;
                    add_fail(r, label + " L=" + std::to_string(L) +
                                    ": constant-modulus MC deviates from " + g12(floor));
                }
            }
            worst_ratio = std::max(worst_ratio, mc.mean / bound);
            gaps.push_back(bound - floor);
        }
        // bound excess over the floor follows a 1/L^2 law at fixed design
        if (variance_metric(c) > 0.0) {
            for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
                const double l1 = opts.block_lengths[i];
                const double l2 = opts.block_lengths[i + 1];
                const double expected = (l2 / l1) * (l2 / l1);
                const double observed = gaps[i] / gaps[i + 1];
                if (observed / expected > 1.2 || expected / observed > 1.2) {
                    ++violations;
                    add_fail(r, label + ": bound gap ratio " + g12(observed) + " vs 1/L^2 law " +
                                    g12(expected));
                }
            }
        }
    }

    r.passed = violations == 0;
    r.detail = std::to_string(designs.size()) + " designs x " +
               std::to_string(opts.block_lengths.size()) + " block lengths, n_blocks=" +
               std::to_string(opts.crb_blocks()) + "; max MC/bound ratio " + g12(worst_ratio) +
               "; violations " + std::to_string(violations);
    return r;
}

SuiteResult suite_sensing_optimal(const VerifyOptions&) {
    SuiteResult r;
    r.name = "sensing_optimal";
    long violations = 0;

    for (int m = 1; m <= 6; ++m) {
        if (variance_metric(build_psk(m)) != 0.0) {
            ++violations;
            add_fail(r, "PSK m=" + std::to_string(m) + " variance is not exactly 0");
        }
    }

    long multi = 0, single = 0;
    const std::vector<double> grid = SweepConfig::default_grid();
    for (int alpha = 2; alpha <= 33; ++alpha) {
        for (double b : grid) {
            for (double c : grid) {
                TradeoffParams p;
                p.m = 6;
                p.alpha = alpha;
                p.b = b;
                p.c = c;
                Constellation cst;
                try {
                    cst = build_tradeoff_family(p);
                } catch (const std::exception&) {
                    continue;
                }
                const double var = variance_metric(cst);
                if (cst.ring_radii.size() >= 2) {
                    ++multi;
                    if (!(var > 0.0)) {
                        ++violations;
                        add_fail(r, "multi-ring " + tradeoff_label(p) + " has variance " +
                                        g12(var));
                    }
                } else {
                    ++single;
                    if (var != 0.0) {
                        ++violations;
                        add_fail(r, "single-ring " + tradeoff_label(p) +
                                        " variance is not exactly 0");
                    }
                }
            }
        }
    }

    r.passed = violations == 0 && multi > 0;
    r.detail = "PSK m=1..6 variance exactly 0; " + std::to_string(multi) +
               " multi-ring designs strictly positive, " + std::to_string(single) +
               " single-ring designs exactly 0; violations " + std::to_string(violations);
    return r;
}

SuiteResult suite_dmin_oracle(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "dmin_oracle";
    Rng rng(mix_seed(opts.seed, {11}));

    long violations = 0;
    double max_diff = 0.0;
    for (int i = 0; i < 100; ++i) {
        const ApskDesign d = random_apsk_design(rng);
        const Constellation c = build_apsk(d);
        const double structured = min_distance(c, d).d_min;
        const double brute = brute_force_dmin(c);
        const double diff = std::abs(structured - brute);
        max_diff = std::max(max_diff, diff);
        if (diff > 1e-9) {
            ++violations;
            add_fail(r, "design " + std::to_string(i) + " (m=" + std::to_string(d.m) + ", K=" +
                            std::to_string(d.ring_count()) + "): structured " + g12(structured) +
                            " vs brute force " + g12(brute));
        }
    }

    r.passed = violations == 0;
    r.detail = "100 random designs; max |structured - brute force| = " + g12(max_diff) +
               "; violations " + std::to_string(violations);
    return r;
}

SuiteResult suite_frontier_vs_time_sharing(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "frontier_vs_time_sharing";

    SweepConfig cfg;
    cfg.m = 6;
    cfg.snr_c_db = 10.0;
    cfg.alpha_lo = 2;
    cfg.alpha_hi = 33;
    cfg.b_grid = {0.0, 0.5, 1.0, 1.5, 2.0};
    cfg.c_grid = {0.0, 0.5, 1.0, 1.5, 2.0};
    cfg.n_samples = opts.sweep_samples;
    cfg.seed = opts.seed;
    cfg.threads = opts.threads;

    const FrontierSet set = sweep(cfg);
    const TimeSharingSegment& seg = set.baseline;
    const std::vector<MetricPoint> frontier = set.frontier();

    std::vector<double> winner_vars;
    double max_margin = 0.0;
    for (const MetricPoint& p : frontier) {
        if (!(p.variance > 0.0) || !(p.variance < seg.qam_variance)) continue;
        const double seg_rate = seg.rate_at_variance(p.variance);
        const double cse = std::sqrt(p.rate.std_error_bits * p.rate.std_error_bits +
                                     seg.stderr_at_variance(p.variance) *
                                         seg.stderr_at_variance(p.variance));
        const double margin = p.rate.value_bits - seg_rate;
        if (margin > 3.0 * cse) {
            winner_vars.push_back(p.variance);
            max_margin = std::max(max_margin, margin);
        }
    }
    std::sort(winner_vars.begin(), winner_vars.end());
    long distinct = 0;
    double prev = -1.0;
    for (double v : winner_vars) {
        if (v - prev > 1e-12) ++distinct;
        prev = v;
    }

    r.passed = distinct >= 3;
    if (!r.passed)
        add_fail(r, "only " + std::to_string(distinct) +
                        " interior variance levels beat time sharing by > 3 stderr");
    r.detail = std::to_string(set.n_valid()) + " evaluated tuples (" +
               std::to_string(set.n_skipped()) + " skipped), frontier size " +
               std::to_string(frontier.size()) + "; " + std::to_string(distinct) +
               " interior variance levels beat time sharing (max margin " + g12(max_margin) +
               " bits); PSK rate " + g12(seg.psk_rate.value_bits) + ", QAM rate " +
               g12(seg.qam_rate.value_bits) + " @ var " + g12(seg.qam_variance);
    return r;
}

SuiteResult suite_sweep_determinism(const VerifyOptions& opts) {
    SuiteResult r;
    r.name = "sweep_determinism";

    SweepConfig cfg;
    cfg.m = 4;
    cfg.snr_c_db = 5.0;
    cfg.alpha_lo = 2;
    cfg.alpha_hi = 16;
    cfg.b_grid = {0.0, 0.75, 1.5};
    cfg.c_grid = {0.0, 0.75, 1.5};
    cfg.n_samples = 2000;
    cfg.seed = mix_seed(opts.seed, {12});

    const fs::path dir =
        fs::temp_directory_path() / ("apskit_verify_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    bool ok = true;
    try {
        cfg.threads = 1;
        const FrontierSet a = sweep(cfg);
        cfg.threads = 4;
        const FrontierSet b = sweep(cfg);

        write_frontier_csv(a, (dir / "frontier_a.csv").string());
        write_frontier_csv(b, (dir / "frontier_b.csv").string());
        write_baseline_csv(a, (dir / "baseline_a.csv").string());
        write_baseline_csv(b, (dir / "baseline_b.csv").string());

        const std::string fa = read_bytes(dir / "frontier_a.csv");
        const std::string fb = read_bytes(dir / "frontier_b.csv");
        const std::string ba = read_bytes(dir / "baseline_a.csv");
        const std::string bb = read_bytes(dir / "baseline_b.csv");

        if (fa.empty() || fa != fb) {
            ok = false;
            add_fail(r, "frontier CSVs differ between a 1-thread and a 4-thread run");
        }
        if (ba.empty() || ba != bb) {
            ok = false;
            add_fail(r, "baseline CSVs differ between runs");
        }

        // repeat with the same thread count: bytes must match the first run
        cfg.threads = 1;
        const FrontierSet a2 = sweep(cfg);
        write_frontier_csv(a2, (dir / "frontier_a2.csv").string());
        if (read_bytes(dir / "frontier_a2.csv") != fa) {
            ok = false;
            add_fail(r, "frontier CSV changed between identical runs");
        }
        r.detail = "frontier+baseline CSVs byte-identical across repeats and thread counts (" +
                   std::to_string(fa.size()) + " bytes)";
    } catch (const std::exception& e) {
        ok = false;
        add_fail(r, e.what());
    }
    fs::remove_all(dir);
    r.passed = ok;
    return r;
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"ring_count_span", suite_ring_count_span},
        {"reference_points", suite_reference_points},
        {"packing_bound", suite_packing_bound},
        {"dmin_scaling", suite_dmin_scaling},
        {"mi_bounds", suite_mi_bounds},
        {"constant_gap", suite_constant_gap},
        {"crb_ordering", suite_crb_ordering},
        {"sensing_optimal", suite_sensing_optimal},
        {"dmin_oracle", suite_dmin_oracle},
        {"frontier_vs_time_sharing", suite_frontier_vs_time_sharing},
        {"sweep_determinism", suite_sweep_determinism},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
    for (const auto& [n, fn] : suite_table()) {
        if (n != name) continue;
        const auto t0 = std::chrono::steady_clock::now();
        SuiteResult r = fn(opts);
        r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
    std::vector<SuiteResult> results;
    for (const auto& [name, fn] : suite_table()) results.push_back(run_suite(name, opts));
    return results;
}

std::string report_to_json(const std::vector<SuiteResult>& results) {
    nlohmann::json suites = nlohmann::json::array();
    bool all = true;
    for (const SuiteResult& r : results) {
        all = all && r.passed;
        suites.push_back({{"name", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail},
                          {"failures", r.failures},
                          {"elapsed_s", r.elapsed_s}});
    }
    nlohmann::json root;
    root["suites"] = suites;
    root["all_passed"] = all;
    return root.dump(2) + "\n";
}

ApskDesign random_apsk_design(Rng& rng) {
    ApskDesign d;
    d.m = 2 + static_cast<int>(rng.next_index(5));
    const int points = 1 << d.m;
    const int max_rings = std::min(8, points);
    const int rings = 1 + static_cast<int>(rng.next_index(max_rings));

    d.ring_counts.assign(rings, 1);
    for (int extra = points - rings; extra > 0; --extra)
        ++d.ring_counts[rng.next_index(rings)];

    double radius = 0.3 + 0.7 * rng.next_unit();
    for (int k = 0; k < rings; ++k) {
        d.ring_radii_raw.push_back(radius);
        radius += 0.08 + 0.9 * rng.next_unit();
    }
    for (int k = 0; k < rings; ++k)
        d.phase_offsets.push_back(2.0 * std::numbers::pi * rng.next_unit());
    return d;
}

TradeoffParams random_valid_tradeoff(Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        TradeoffParams p;
        p.m = 4 + static_cast<int>(rng.next_index(3));
        p.alpha = 2 + static_cast<int>(rng.next_index((1 << p.m) - 1));
        p.b = 0.25 * static_cast<double>(rng.next_index(9));
        p.c = 0.25 * static_cast<double>(rng.next_index(9));
        try {
            p.validate();
            return p;
        } catch (const std::exception&) {
        }
    }
    throw std::logic_error("no valid tradeoff tuple found");
}

}  // namespace apskit
