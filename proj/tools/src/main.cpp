#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "apskit/comm.hpp"
#include "apskit/constellation.hpp"
#include "apskit/geometry.hpp"
#include "apskit/io.hpp"
#include "apskit/rng.hpp"
#include "apskit/sensing.hpp"
#include "apskit/svg.hpp"
#include "apskit/tradeoff.hpp"
#include "apskit/verify.hpp"

namespace fs = std::filesystem;
using namespace apskit;

namespace {

/// Thrown when requested parameters collapse the design to a single ring and
/// the caller did not opt in; maps to exit code 2 so scripts can tell the
/// refusal apart from hard errors.
struct DegenerateDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_int_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

/// Accepts "start:step:end", a comma list, or a single number.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    if (text.find(':') != std::string::npos) {
        std::istringstream ss(text);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
            throw CLI::ValidationError("grid", "expected start:step:end");
        const double start = std::stod(a), step = std::stod(b), end = std::stod(c);
        if (!(step > 0.0)) throw CLI::ValidationError("grid", "step must be positive");
        const long n = std::lround(std::floor((end - start) / step + 1e-9));
        for (long i = 0; i <= n; ++i) grid.push_back(start + step * static_cast<double>(i));
    } else if (text.find(',') != std::string::npos) {
        std::istringstream ss(text);
        std::string field;
        while (std::getline(ss, field, ',')) grid.push_back(std::stod(field));
    } else {
        grid.push_back(std::stod(text));
    }
    if (grid.empty()) throw CLI::ValidationError("grid", "grid is empty");
    return grid;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(std::stoi(field));
    return out;
}

struct DesignArgs {
    int m = 0;
    int alpha = 0;
    double b = 0.0;
    double c = 0.0;
    int k_override = 0;
    bool psk = false;
    bool qam = false;
    bool allow_degenerate = false;
    std::string design_path;

    void add_flags(CLI::App* cmd, bool with_degenerate) {
        cmd->add_option("--m", m, "bits per symbol (constellation has 2^m points)");
        cmd->add_option("--alpha", alpha, "ring growth parameter, in [1, 2^m]");
        cmd->add_option("--b", b, "radial offset coefficient")->capture_default_str();
        cmd->add_option("--c", c, "radial sqrt coefficient")->capture_default_str();
        cmd->add_option("--k-override", k_override, "force a specific ring count");
        cmd->add_flag("--psk", psk, "build 2^m-PSK instead of the tradeoff family");
        cmd->add_flag("--qam", qam, "build square 2^m-QAM (m even)");
        cmd->add_option("--design", design_path, "explicit ring design JSON file");
        if (with_degenerate)
            cmd->add_flag("--allow-degenerate", allow_degenerate,
                          "accept alpha values that collapse to a single ring");
    }

    Constellation build() const {
        if (!design_path.empty()) return build_apsk(read_design_json(design_path));
        if (m < 1) throw CLI::ValidationError("--m", "required unless --design is given");
        if (psk) return build_psk(m);
        if (qam) return build_qam(m);
        if (alpha < 1)
            throw CLI::ValidationError("--alpha", "required unless --psk/--qam/--design");

        TradeoffParams p;
        p.m = m;
        p.alpha = alpha;
        p.b = b;
        p.c = c;
        if (k_override > 0) p.ring_count_override = k_override;

        if (!p.ring_count_override && p.ring_count() == 1 && !allow_degenerate) {
            const int max_alpha = 1 << (m - 1);
            std::ostringstream why;
            why << "alpha=" << alpha << " at m=" << m
                << " yields a single ring (the constellation degenerates to " << (1 << m)
                << "-PSK); the largest alpha with K >= 2 is " << max_alpha
                << ". Pass --allow-degenerate or --psk to build it anyway.";
            throw DegenerateDesign(why.str());
        }
        return build_tradeoff_family(p);
    }

    std::string describe(const Constellation& cst) const {
        std::ostringstream ss;
        ss << family_name(cst.family) << " m=" << cst.m << " K=" << cst.ring_radii.size();
        if (cst.params) {
            ss << " alpha=" << cst.params->alpha << " b=" << format_g12(cst.params->b)
               << " c=" << format_g12(cst.params->c);
        }
        return ss.str();
    }
};

int cmd_gen(const DesignArgs& args, const std::string& out_path, const std::string& svg_path) {
    const Constellation cst = args.build();
    write_constellation_json(cst, out_path);
    std::ostringstream counts;
    if (cst.design)
        for (std::size_t k = 0; k < cst.design->ring_counts.size(); ++k)
            counts << (k ? "," : "") << cst.design->ring_counts[k];
    std::cout << "wrote " << out_path << ": " << args.describe(cst) << " N=[" << counts.str()
              << "] d_min=" << format_g12(dmin_of(cst))
              << " var=" << format_g12(variance_metric(cst)) << "\n";
    if (!svg_path.empty()) {
        write_constellation_svg(cst, svg_path, args.describe(cst));
        std::cout << "wrote " << svg_path << "\n";
    }
    return 0;
}

struct MetricsArgs {
    DesignArgs design;
    std::string in_path;
    double snr_db = 10.0;
    int block_len = 64;
    double sigma_s2 = 1.0;
    double power = 1.0;
    long n_samples = 200000;
    long n_blocks = 10000;
    std::uint64_t seed = 1;
    std::string out_path = "-";
    std::string distance_report_path;
    bool as_json = false;
};

int cmd_metrics(const MetricsArgs& args) {
    const Constellation cst =
        args.in_path.empty() ? args.design.build() : read_constellation_json(args.in_path);

    const ChannelSpec ch = ChannelSpec::from_db(args.snr_db);
    SensingSpec sense;
    sense.sigma_s2 = args.sigma_s2;
    sense.power = args.power;
    sense.block_len = args.block_len;

    const double d_min = dmin_of(cst);
    const double variance = variance_metric(cst);
    const MiEstimate mi = estimate_mi(cst, ch, args.n_samples, args.seed);
    const double lower = mi_lower_bound(cst, ch);
    const double gap = gap_upper_bound(cst, ch);
    const double capacity = gaussian_capacity(ch);
    const double crb_bound = avg_crb_bound(cst, sense);
    const CrbEstimate crb_mc =
        avg_crb_monte_carlo(cst, sense, args.n_blocks, mix_seed(args.seed, {17}));

    std::ostringstream out;
    if (args.as_json) {
        nlohmann::json row;
        row["family"] = family_name(cst.family);
        row["m"] = cst.m;
        row["rings"] = cst.ring_radii.size();
        row["snr_db"] = args.snr_db;
        row["d_min"] = d_min;
        row["variance"] = variance;
        row["mi_bits"] = mi.value_bits;
        row["mi_stderr"] = mi.std_error_bits;
        row["mi_lower_bound"] = lower;
        row["capacity"] = capacity;
        row["gap_bound"] = gap;
        row["crb_bound"] = crb_bound;
        row["crb_mc_mean"] = crb_mc.mean;
        row["crb_mc_stderr"] = crb_mc.std_error;
        row["L"] = args.block_len;
        row["sigma_s2"] = args.sigma_s2;
        row["power"] = args.power;
        row["n_samples"] = args.n_samples;
        row["n_blocks"] = args.n_blocks;
        row["seed"] = args.seed;
        out << row.dump(2) << "\n";
    } else {
        out << "family,m,rings,snr_db,d_min,variance,mi_bits,mi_stderr,mi_lower_bound,"
               "capacity,gap_bound,crb_bound,crb_mc_mean,crb_mc_stderr,L,sigma_s2,power,"
               "n_samples,n_blocks,seed\n";
        out << family_name(cst.family) << ',' << cst.m << ',' << cst.ring_radii.size() << ','
            << format_g12(args.snr_db) << ',' << format_g12(d_min) << ','
            << format_g12(variance) << ',' << format_g12(mi.value_bits) << ','
            << format_g12(mi.std_error_bits) << ',' << format_g12(lower) << ','
            << format_g12(capacity) << ',' << format_g12(gap) << ',' << format_g12(crb_bound)
            << ',' << format_g12(crb_mc.mean) << ',' << format_g12(crb_mc.std_error) << ','
            << args.block_len << ',' << format_g12(args.sigma_s2) << ','
            << format_g12(args.power) << ',' << args.n_samples << ',' << args.n_blocks << ','
            << args.seed << "\n";
    }

    if (args.out_path == "-") {
        std::cout << out.str();
    } else {
        std::ofstream f(args.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for writing: " + args.out_path);
        f << out.str();
        std::cout << "wrote " << args.out_path << "\n";
    }

    if (!args.distance_report_path.empty()) {
        if (!cst.design)
            throw std::runtime_error(
                "distance report needs the ring structure; input has bare points only");
        std::ofstream f(args.distance_report_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for writing: " + args.distance_report_path);
        f << distance_report_to_json(min_distance(cst, *cst.design));
        std::cout << "wrote " << args.distance_report_path << "\n";
    }
    return 0;
}

struct SweepArgs {
    int m = 6;
    double snr_db = 10.0;
    std::string alpha = "2:33";
    std::string grid;
    std::string b_grid;
    std::string c_grid;
    long n_samples = 200000;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out_dir = ".";
    std::string mba_path;
};

int cmd_sweep(const SweepArgs& args) {
    SweepConfig cfg;
    cfg.m = args.m;
    cfg.snr_c_db = args.snr_db;
    std::tie(cfg.alpha_lo, cfg.alpha_hi) = parse_int_range(args.alpha);
    if (!args.grid.empty()) cfg.b_grid = cfg.c_grid = parse_grid(args.grid);
    if (!args.b_grid.empty()) cfg.b_grid = parse_grid(args.b_grid);
    if (!args.c_grid.empty()) cfg.c_grid = parse_grid(args.c_grid);
    cfg.n_samples = args.n_samples;
    cfg.seed = args.seed;
    cfg.threads = args.threads;
    cfg.validate();

    const FrontierSet set = sweep(cfg);

    fs::create_directories(args.out_dir);
    const fs::path dir(args.out_dir);
    write_frontier_csv(set, (dir / "frontier.csv").string());
    write_baseline_csv(set, (dir / "baseline.csv").string());
    write_skipped_log(set, (dir / "skipped.csv").string());

    std::vector<std::pair<double, double>> overlay;
    if (!args.mba_path.empty()) overlay = read_xy_csv(args.mba_path);
    write_frontier_svg(set, (dir / "frontier.svg").string(), overlay);

    std::cout << "swept " << set.points.size() << " tuples (" << set.n_valid() << " evaluated, "
              << set.n_skipped() << " skipped); frontier size " << set.frontier().size() << "\n"
              << "wrote " << (dir / "frontier.csv").string() << ", "
              << (dir / "baseline.csv").string() << ", " << (dir / "skipped.csv").string()
              << ", " << (dir / "frontier.svg").string() << "\n";
    return 0;
}

struct VerifyArgs {
    std::vector<std::string> suites;
    long n_samples = 200000;
    long n_blocks = 10000;
    long sweep_samples = 20000;
    std::string block_lengths = "8,64,512";
    std::uint64_t seed = 1;
    int threads = 0;
    bool quick = false;
    bool list = false;
    std::string report_path;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.list) {
        for (const std::string& name : suite_names()) std::cout << name << "\n";
        return 0;
    }

    VerifyOptions opts;
    opts.n_samples = args.n_samples;
    opts.n_blocks = args.n_blocks;
    opts.sweep_samples = args.sweep_samples;
    opts.block_lengths = parse_int_list(args.block_lengths);
    opts.seed = args.seed;
    opts.threads = args.threads;
    opts.quick = args.quick;

    const std::vector<std::string> names = args.suites.empty() ? suite_names() : args.suites;
    std::vector<SuiteResult> results;
    bool all = true;
    for (const std::string& name : names) {
        const SuiteResult r = run_suite(name, opts);
        all = all && r.passed;
        std::printf("[%s] %-26s (%6.2fs)  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.elapsed_s, r.detail.c_str());
        for (const std::string& f : r.failures) std::printf("       - %s\n", f.c_str());
        std::fflush(stdout);
        results.push_back(r);
    }

    if (!args.report_path.empty()) {
        std::ofstream f(args.report_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for writing: " + args.report_path);
        f << report_to_json(results);
        std::cout << "wrote " << args.report_path << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"APSK constellation design for joint communication and sensing"};
    app.require_subcommand(1);
    // one config option on the root app; flags given after a subcommand name
    // fall through to it. File keys live in [gen]/[metrics]/[sweep]/[verify]
    // sections. Precedence: flags, then file values, then built-in defaults.
    app.set_config("--config", "",
                   "INI/TOML defaults file with [subcommand] sections; flags override it");
    app.fallthrough();

    DesignArgs gen_args;
    std::string gen_out = "constellation.json";
    std::string gen_svg;
    CLI::App* gen = app.add_subcommand("gen", "build one constellation and write it as JSON");
    gen_args.add_flags(gen, true);
    gen->add_option("--out", gen_out, "output JSON path")->capture_default_str();
    gen->add_option("--svg", gen_svg, "also write a point-scatter SVG");

    MetricsArgs metrics_args;
    CLI::App* metrics =
        app.add_subcommand("metrics", "evaluate one constellation at a channel operating point");
    metrics_args.design.add_flags(metrics, false);
    metrics->add_option("--in", metrics_args.in_path, "constellation JSON produced by gen");
    metrics->add_option("--snr-db", metrics_args.snr_db, "communication SNR in dB")
        ->capture_default_str();
    metrics->add_option("--L,--block-len", metrics_args.block_len, "sensing block length")
        ->capture_default_str();
    metrics->add_option("--sigma-s2", metrics_args.sigma_s2, "sensing noise power")
        ->capture_default_str();
    metrics->add_option("--power", metrics_args.power, "transmit power")->capture_default_str();
    metrics->add_option("--n-samples", metrics_args.n_samples, "MI Monte Carlo samples")
        ->capture_default_str();
    metrics->add_option("--n-blocks", metrics_args.n_blocks, "CRB Monte Carlo blocks")
        ->capture_default_str();
    metrics->add_option("--seed", metrics_args.seed, "RNG seed")->capture_default_str();
    metrics->add_option("--out", metrics_args.out_path, "output path, or - for stdout")
        ->capture_default_str();
    metrics->add_option("--distance-report", metrics_args.distance_report_path,
                        "write the ring-distance decomposition as JSON");
    metrics->add_flag("--json", metrics_args.as_json, "emit JSON instead of CSV");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "sweep (alpha, b, c), extract the Pareto frontier");
    sweep_cmd->add_option("--m", sweep_args.m, "bits per symbol")->capture_default_str();
    sweep_cmd->add_option("--snr-db", sweep_args.snr_db, "communication SNR in dB")
        ->capture_default_str();
    sweep_cmd->add_option("--alpha", sweep_args.alpha, "alpha range lo:hi")
        ->capture_default_str();
    sweep_cmd->add_option("--grid", sweep_args.grid, "b and c grid as start:step:end");
    sweep_cmd->add_option("--b-grid", sweep_args.b_grid, "b grid (overrides --grid)");
    sweep_cmd->add_option("--c-grid", sweep_args.c_grid, "c grid (overrides --grid)");
    sweep_cmd->add_option("--n-samples", sweep_args.n_samples, "MI samples per tuple")
        ->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_args.seed, "master seed")->capture_default_str();
    sweep_cmd->add_option("--threads", sweep_args.threads,
                          "worker threads (0 = APSKIT_THREADS env, then hardware)")
        ->capture_default_str();
    sweep_cmd->add_option("--out-dir", sweep_args.out_dir, "output directory")
        ->capture_default_str();
    sweep_cmd->add_option("--mba", sweep_args.mba_path,
                          "external frontier CSV (variance,rate) to overlay in the SVG");

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the property suites; nonzero exit on violation");
    verify_cmd->add_option("--suite", verify_args.suites,
                           "suite names to run (default: all; see --list)");
    verify_cmd->add_option("--n-samples", verify_args.n_samples, "MI samples per design/SNR")
        ->capture_default_str();
    verify_cmd->add_option("--n-blocks", verify_args.n_blocks, "CRB Monte Carlo blocks")
        ->capture_default_str();
    verify_cmd->add_option("--sweep-samples", verify_args.sweep_samples,
                           "MI samples per tuple in the sweep suite")
        ->capture_default_str();
    verify_cmd->add_option("--L,--block-lengths", verify_args.block_lengths,
                           "comma-separated sensing block lengths")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_args.seed, "RNG seed")->capture_default_str();
    verify_cmd->add_option("--threads", verify_args.threads, "worker threads for the sweep suite")
        ->capture_default_str();
    verify_cmd->add_flag("--quick", verify_args.quick, "reduced Monte Carlo scale");
    verify_cmd->add_flag("--list", verify_args.list, "list suite names and exit");
    verify_cmd->add_option("--report", verify_args.report_path, "write a JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_args, gen_out, gen_svg);
        if (metrics->parsed()) return cmd_metrics(metrics_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
    } catch (const DegenerateDesign& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
