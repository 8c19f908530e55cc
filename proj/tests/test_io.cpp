#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "apskit/constellation.hpp"
#include "apskit/geometry.hpp"
#include "apskit/io.hpp"
#include "apskit/svg.hpp"
#include "apskit/tradeoff.hpp"

using namespace apskit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("apskit_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int count_fields(const std::string& line) {
    int n = 1;
    for (char ch : line) n += (ch == ',');
    return n;
}

FrontierSet tiny_frontier_set() {
    SweepConfig cfg;
    cfg.m = 4;
    cfg.alpha_lo = 2;
    cfg.alpha_hi = 4;
    cfg.b_grid = {0.0};
    cfg.c_grid = {0.0, 1.0};
    cfg.n_samples = 2000;
    cfg.seed = 5;
    cfg.threads = 1;
    return sweep(cfg);
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("fixed-width formatting is stable and compact") {
    CHECK(format_g12(0.1) == "0.1");
    CHECK(format_g12(3.0) == "3");
    CHECK(format_g12(0.0) == "0");
    CHECK(format_g12(-1.5) == "-1.5");
    CHECK(format_g12(1.0 / 3.0) == "0.333333333333");
    CHECK(format_g12(1e-300) == "1e-300");
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::apsk, Family::tradeoff, Family::psk, Family::qam})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS((void)family_from_name("minestrone"), std::invalid_argument);
}

TEST_CASE("constellation json round-trip") {
    TempDir tmp;
    TradeoffParams p;
    p.m = 5;
    p.alpha = 3;
    p.b = 0.5;
    p.c = 0.25;
    const Constellation a = build_tradeoff_family(p);
    const std::string path = tmp.file("c.json");
    write_constellation_json(a, path);
    const Constellation b = read_constellation_json(path);

    CHECK(b.m == a.m);
    CHECK(b.family == a.family);
    REQUIRE(b.size() == a.size());
    // the reader renormalizes to unit mean energy, which may move each
    // coordinate by an ulp; the values themselves survive the text format
    for (int i = 0; i < a.size(); ++i)
        CHECK(std::abs(b.points[i] - a.points[i]) <= 1e-14);
    REQUIRE(b.design.has_value());
    CHECK(b.design->ring_counts == a.design->ring_counts);
    CHECK(dmin_of(b) == doctest::Approx(dmin_of(a)).epsilon(1e-14));
    CHECK(b.moments.variance == doctest::Approx(a.moments.variance).epsilon(1e-12));
}

TEST_CASE("qam json round-trip works without a ring design") {
    TempDir tmp;
    const Constellation a = build_qam(4);
    const std::string path = tmp.file("q.json");
    write_constellation_json(a, path);
    const Constellation b = read_constellation_json(path);
    CHECK_FALSE(b.design.has_value());
    CHECK(b.moments.variance == doctest::Approx(0.32).epsilon(1e-14));
    CHECK(dmin_of(b) == doctest::Approx(dmin_of(a)).epsilon(1e-14));
}

TEST_CASE("explicit design files are accepted") {
    TempDir tmp;
    const std::string path = tmp.file("design.json");
    {
        std::ofstream f(path);
        f << R"({"m": 3, "ring_counts": [4, 4], "ring_radii": [0.6, 1.3]})";
    }
    const ApskDesign d = read_design_json(path);
    CHECK(d.m == 3);
    CHECK(d.ring_counts == std::vector<int>{4, 4});
    CHECK(d.phase_offsets == std::vector<double>{0.0, 0.0});  // defaulted
    const Constellation c = build_apsk(d);
    CHECK(c.size() == 8);
    CHECK(c.moments.mean == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("frontier csv layout: header, config echo, constant field count") {
    TempDir tmp;
    const FrontierSet set = tiny_frontier_set();
    const std::string path = tmp.file("frontier.csv");
    write_frontier_csv(set, path);

    std::istringstream in(slurp(path));
    std::string line;
    int data_rows = 0, comment_rows = 0;
    bool seen_header = false;
    bool seen_skip_reason = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            ++comment_rows;
            CHECK_FALSE(seen_header);  // config echo precedes the header
            continue;
        }
        if (!seen_header) {
            CHECK(line ==
                  "alpha,b,c,K,variance,rate_bits,rate_stderr,d_min,gap_bound,pareto,"
                  "skipped_reason");
            seen_header = true;
            continue;
        }
        ++data_rows;
        CHECK(count_fields(line) == 11);
        if (line.find("f(1)") != std::string::npos) seen_skip_reason = true;
    }
    CHECK(comment_rows >= 6);
    CHECK(data_rows == static_cast<int>(set.points.size()));
    CHECK(seen_skip_reason);  // the c = 1, b = 0 column is recorded, not dropped
}

TEST_CASE("baseline csv layout") {
    TempDir tmp;
    const FrontierSet set = tiny_frontier_set();
    const std::string path = tmp.file("baseline.csv");
    write_baseline_csv(set, path);

    std::istringstream in(slurp(path));
    std::string line;
    int data_rows = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            CHECK(line == "lambda,rate_bits,variance");
            seen_header = true;
            continue;
        }
        ++data_rows;
        CHECK(count_fields(line) == 3);
    }
    CHECK(data_rows == 21);
}

TEST_CASE("skipped log lists only the skipped tuples") {
    TempDir tmp;
    const FrontierSet set = tiny_frontier_set();
    const std::string path = tmp.file("skipped.csv");
    write_skipped_log(set, path);

    std::istringstream in(slurp(path));
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line == "alpha,b,c,reason") continue;
        ++rows;
        CHECK(count_fields(line) == 4);
    }
    CHECK(rows == static_cast<int>(set.n_skipped()));
}

TEST_CASE("xy csv reader skips comments and headers") {
    TempDir tmp;
    const std::string path = tmp.file("overlay.csv");
    {
        std::ofstream f(path);
        f << "# produced elsewhere\n";
        f << "variance,rate\n";
        f << "0.1,2.5\n";
        f << "0.2,2.75\n";
    }
    const auto xy = read_xy_csv(path);
    REQUIRE(xy.size() == 2);
    CHECK(xy[0].first == doctest::Approx(0.1));
    CHECK(xy[1].second == doctest::Approx(2.75));
}

TEST_CASE("svg writers emit well-formed documents") {
    TempDir tmp;
    const std::string cpath = tmp.file("c.svg");
    write_constellation_svg(build_prop1_family(6, 2), cpath, "demo <title> & more");
    const std::string cs = slurp(cpath);
    CHECK(cs.find("<svg") != std::string::npos);
    CHECK(cs.find("</svg>") != std::string::npos);
    CHECK(cs.find("<title> & more") == std::string::npos);  // escaped
    CHECK(cs.find("&lt;title&gt; &amp; more") != std::string::npos);

    const std::string fpath = tmp.file("f.svg");
    write_frontier_svg(tiny_frontier_set(), fpath, {{0.05, 2.0}, {0.3, 3.0}});
    const std::string fsd = slurp(fpath);
    CHECK(fsd.find("<svg") != std::string::npos);
    CHECK(fsd.find("</svg>") != std::string::npos);
}

TEST_CASE("identical runs produce byte-identical csv files") {
    TempDir tmp;
    const FrontierSet a = tiny_frontier_set();
    const FrontierSet b = tiny_frontier_set();
    write_frontier_csv(a, tmp.file("a.csv"));
    write_frontier_csv(b, tmp.file("b.csv"));
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
}

TEST_SUITE_END();
