#include "apskit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace apskit {
namespace {

using nlohmann::json;

std::string sanitize_field(std::string s) {
    for (char& ch : s) {
        if (ch == ',') ch = ';';
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    return s;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    json j;
    in >> j;
    return j;
}

void echo_config(std::ofstream& out, const SweepConfig& cfg) {
    out << "# m=" << cfg.m << "\n";
    out << "# snr_c_db=" << format_g12(cfg.snr_c_db) << "\n";
    out << "# alpha=" << cfg.alpha_lo << ":" << cfg.alpha_hi << "\n";
    out << "# b_grid=";
    for (std::size_t i = 0; i < cfg.b_grid.size(); ++i)
        out << (i ? "," : "") << format_g12(cfg.b_grid[i]);
    out << "\n# c_grid=";
    for (std::size_t i = 0; i < cfg.c_grid.size(); ++i)
        out << (i ? "," : "") << format_g12(cfg.c_grid[i]);
    out << "\n# n_samples=" << cfg.n_samples << "\n";
    out << "# seed=" << cfg.seed << "\n";
}

json design_to_json(const ApskDesign& d, const std::vector<double>& radii) {
    json j;
    j["ring_counts"] = d.ring_counts;
    j["ring_radii"] = radii;
    j["phase_offsets"] = d.phase_offsets;
    return j;
}

}  // namespace

std::string format_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::apsk: return "apsk";
        case Family::tradeoff: return "tradeoff";
        case Family::psk: return "psk";
        case Family::qam: return "qam";
    }
    throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "apsk") return Family::apsk;
    if (name == "tradeoff") return Family::tradeoff;
    if (name == "psk") return Family::psk;
    if (name == "qam") return Family::qam;
    throw std::invalid_argument("unknown family name: " + name);
}

std::string constellation_to_json(const Constellation& c) {
    json meta;
    meta["family"] = family_name(c.family);
    meta["m"] = c.m;
    meta["rings"] = c.ring_radii.size();
    meta["mean_energy"] = c.moments.mean;
    meta["energy_variance"] = c.moments.variance;
    meta["fourth_moment"] = c.moments.fourth;
    meta["min_energy"] = c.min_energy;
    meta["max_energy"] = c.max_energy;
    meta["last_ring_overfull"] = c.last_ring_overfull;
    if (c.design) {
        json d = design_to_json(*c.design, c.ring_radii);
        for (auto& [key, value] : d.items()) meta[key] = value;
        meta["d_min"] = min_distance(c, *c.design).d_min;
    } else if (c.size() >= 2) {
        meta["d_min"] = brute_force_dmin(c);
    }
    if (c.params) {
        meta["alpha"] = c.params->alpha;
        meta["b"] = c.params->b;
        meta["c"] = c.params->c;
        if (c.params->ring_count_override)
            meta["ring_count_override"] = *c.params->ring_count_override;
    }

    json points = json::array();
    for (const cplx& p : c.points) points.push_back({{"re", p.real()}, {"im", p.imag()}});

    json root;
    root["meta"] = meta;
    root["points"] = points;
    return root.dump(2) + "\n";
}

void write_constellation_json(const Constellation& c, const std::string& path) {
    open_out(path) << constellation_to_json(c);
}

Constellation read_constellation_json(const std::string& path) {
    const json root = load_json(path);
    if (!root.contains("meta") || !root.contains("points"))
        throw std::invalid_argument(path + ": expected {meta, points}");

    const json& meta = root.at("meta");
    const int m = meta.at("m").get<int>();
    const Family family =
        meta.contains("family") ? family_from_name(meta.at("family").get<std::string>())
                                : Family::apsk;

    std::vector<cplx> pts;
    for (const json& p : root.at("points"))
        pts.emplace_back(p.at("re").get<double>(), p.at("im").get<double>());

    std::optional<ApskDesign> design;
    if (meta.contains("ring_counts") && meta.contains("ring_radii")) {
        ApskDesign d;
        d.m = m;
        d.ring_counts = meta.at("ring_counts").get<std::vector<int>>();
        d.ring_radii_raw = meta.at("ring_radii").get<std::vector<double>>();
        if (meta.contains("phase_offsets"))
            d.phase_offsets = meta.at("phase_offsets").get<std::vector<double>>();
        else
            d.phase_offsets.assign(d.ring_counts.size(), 0.0);
        design = std::move(d);
    }
    return build_from_points(m, std::move(pts), family, std::move(design));
}

ApskDesign read_design_json(const std::string& path) {
    const json j = load_json(path);
    ApskDesign d;
    d.m = j.at("m").get<int>();
    d.ring_counts = j.at("ring_counts").get<std::vector<int>>();
    d.ring_radii_raw = j.at("ring_radii").get<std::vector<double>>();
    if (j.contains("phase_offsets"))
        d.phase_offsets = j.at("phase_offsets").get<std::vector<double>>();
    else
        d.phase_offsets.assign(d.ring_counts.size(), 0.0);
    d.validate();
    return d;
}

std::string distance_report_to_json(const DistanceReport& rep) {
    json j;
    j["d_min"] = rep.d_min;
    j["argmin_pair"] = {rep.argmin_pair.first, rep.argmin_pair.second};
    j["intra_min"] = rep.intra_min;
    j["inter_min"] = rep.inter_min;
    j["intra_argmin_ring"] = rep.intra_argmin_ring;
    j["inter_argmin_rings"] = {rep.inter_argmin_rings.first, rep.inter_argmin_rings.second};
    j["delta_angles"] = rep.delta_angles;
    return j.dump(2) + "\n";
}

void write_frontier_csv(const FrontierSet& set, const std::string& path) {
    std::ofstream out = open_out(path);
    echo_config(out, set.config);
    out << "alpha,b,c,K,variance,rate_bits,rate_stderr,d_min,gap_bound,pareto,skipped_reason\n";
    for (const MetricPoint& p : set.points) {
        out << p.params.alpha << ',' << format_g12(p.params.b) << ',' << format_g12(p.params.c)
            << ',';
        if (p.valid()) {
            out << p.rings << ',' << format_g12(p.variance) << ','
                << format_g12(p.rate.value_bits) << ',' << format_g12(p.rate.std_error_bits)
                << ',' << format_g12(p.d_min) << ',' << format_g12(p.gap_bound) << ','
                << (p.pareto ? 1 : 0) << ",\n";
        } else {
            out << p.rings_formula << ",,,,,," << 0 << ',' << sanitize_field(p.skipped_reason)
                << "\n";
        }
    }
}

void write_baseline_csv(const FrontierSet& set, const std::string& path) {
    std::ofstream out = open_out(path);
    echo_config(out, set.config);
    out << "# m_psk=" << set.baseline.m_psk << " m_qam=" << set.baseline.m_qam << "\n";
    out << "lambda,rate_bits,variance\n";
    for (const BaselineSample& s : set.baseline.samples)
        out << format_g12(s.lambda) << ',' << format_g12(s.rate_bits) << ','
            << format_g12(s.variance) << "\n";
}

void write_skipped_log(const FrontierSet& set, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "alpha,b,c,reason\n";
    for (const MetricPoint& p : set.points)
        if (!p.valid())
            out << p.params.alpha << ',' << format_g12(p.params.b) << ','
                << format_g12(p.params.c) << ',' << sanitize_field(p.skipped_reason) << "\n";
}

std::vector<std::pair<double, double>> read_xy_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);

    std::vector<std::pair<double, double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',')) continue;
        try {
            rows.emplace_back(std::stod(a), std::stod(b));
        } catch (const std::exception&) {
            // header or other non-numeric line
        }
    }
    return rows;
}

}  // namespace apskit
