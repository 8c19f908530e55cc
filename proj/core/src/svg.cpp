#include "apskit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "apskit/io.hpp"

namespace apskit {
namespace {

std::string escape_text(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string num(double v) { return format_g12(v); }

/// Round tick step: largest of {1,2,5}*10^k giving at most `target` ticks.
double nice_step(double range, int target) {
    if (!(range > 0.0)) return 1.0;
    const double raw = range / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0})
        if (mult * mag >= raw) return mult * mag;
    return 10.0 * mag;
}

struct Frame {
    double x0, x1, y0, y1;       // data range
    double px0, px1, py0, py1;   // pixel box (py0 is the top edge)

    double x(double v) const { return px0 + (v - x0) / (x1 - x0) * (px1 - px0); }
    double y(double v) const { return py1 - (v - y0) / (y1 - y0) * (py1 - py0); }
};

void draw_axes(std::ostringstream& svg, const Frame& f, const std::string& xlabel,
               const std::string& ylabel) {
    svg << "<rect x='" << f.px0 << "' y='" << f.py0 << "' width='" << f.px1 - f.px0
        << "' height='" << f.py1 - f.py0 << "' fill='none' stroke='#444'/>\n";

    const double xstep = nice_step(f.x1 - f.x0, 8);
    for (double v = std::ceil(f.x0 / xstep) * xstep; v <= f.x1 + 1e-9 * xstep; v += xstep) {
        const double px = f.x(v);
        svg << "<line x1='" << px << "' y1='" << f.py1 << "' x2='" << px << "' y2='"
            << f.py1 + 5 << "' stroke='#444'/>\n";
        svg << "<text x='" << px << "' y='" << f.py1 + 18
            << "' font-size='11' text-anchor='middle' fill='#333'>" << num(v) << "</text>\n";
    }
    const double ystep = nice_step(f.y1 - f.y0, 7);
    for (double v = std::ceil(f.y0 / ystep) * ystep; v <= f.y1 + 1e-9 * ystep; v += ystep) {
        const double py = f.y(v);
        svg << "<line x1='" << f.px0 - 5 << "' y1='" << py << "' x2='" << f.px0 << "' y2='"
            << py << "' stroke='#444'/>\n";
        svg << "<text x='" << f.px0 - 8 << "' y='" << py + 4
            << "' font-size='11' text-anchor='end' fill='#333'>" << num(v) << "</text>\n";
    }
    svg << "<text x='" << (f.px0 + f.px1) / 2 << "' y='" << f.py1 + 36
        << "' font-size='13' text-anchor='middle' fill='#111'>" << escape_text(xlabel)
        << "</text>\n";
    svg << "<text x='16' y='" << (f.py0 + f.py1) / 2
        << "' font-size='13' text-anchor='middle' fill='#111' transform='rotate(-90 16 "
        << (f.py0 + f.py1) / 2 << ")'>" << escape_text(ylabel) << "</text>\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

}  // namespace

void write_constellation_svg(const Constellation& c, const std::string& path,
                             const std::string& title) {
    const int side = 560;
    const double margin = 40.0;

    double reach = 0.0;
    for (const cplx& p : c.points) reach = std::max({reach, std::abs(p.real()), std::abs(p.imag())});
    for (double r : c.ring_radii) reach = std::max(reach, r);
    if (reach <= 0.0) reach = 1.0;
    reach *= 1.12;

    const auto px = [&](double v) { return margin + (v + reach) / (2 * reach) * (side - 2 * margin); };
    const auto py = [&](double v) { return side - margin - (v + reach) / (2 * reach) * (side - 2 * margin); };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << side << "' height='" << side
        << "' viewBox='0 0 " << side << " " << side << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";

    svg << "<line x1='" << px(-reach) << "' y1='" << py(0.0) << "' x2='" << px(reach) << "' y2='"
        << py(0.0) << "' stroke='#ddd'/>\n";
    svg << "<line x1='" << px(0.0) << "' y1='" << py(-reach) << "' x2='" << px(0.0) << "' y2='"
        << py(reach) << "' stroke='#ddd'/>\n";

    for (double r : c.ring_radii)
        svg << "<circle cx='" << px(0.0) << "' cy='" << py(0.0) << "' r='"
            << r / (2 * reach) * (side - 2 * margin)
            << "' fill='none' stroke='#bbb' stroke-dasharray='4 3'/>\n";

    for (const cplx& p : c.points)
        svg << "<circle cx='" << px(p.real()) << "' cy='" << py(p.imag())
            << "' r='4' fill='#1f77b4'/>\n";

    if (!title.empty())
        svg << "<text x='" << margin << "' y='24' font-size='14' fill='#111'>"
            << escape_text(title) << "</text>\n";
    svg << "</svg>\n";
    write_file(path, svg.str());
}

void write_frontier_svg(const FrontierSet& set, const std::string& path,
                        const std::vector<std::pair<double, double>>& overlay) {
    const int width = 760, height = 560;
    Frame f;
    f.px0 = 70;
    f.px1 = width - 30;
    f.py0 = 40;
    f.py1 = height - 60;

    double vmax = 0.0, rmin = 1e300, rmax = -1e300;
    for (const MetricPoint& p : set.points) {
        if (!p.valid()) continue;
        vmax = std::max(vmax, p.variance);
        rmin = std::min(rmin, p.rate.value_bits);
        rmax = std::max(rmax, p.rate.value_bits);
    }
    for (const BaselineSample& s : set.baseline.samples) {
        vmax = std::max(vmax, s.variance);
        rmin = std::min(rmin, s.rate_bits);
        rmax = std::max(rmax, s.rate_bits);
    }
    for (const auto& [x, y] : overlay) {
        vmax = std::max(vmax, x);
        rmin = std::min(rmin, y);
        rmax = std::max(rmax, y);
    }
    if (rmin > rmax) { rmin = 0.0; rmax = 1.0; }
    const double rpad = std::max(0.05, (rmax - rmin) * 0.08);
    f.x0 = 0.0;
    f.x1 = vmax > 0.0 ? vmax * 1.06 : 1.0;
    f.y0 = rmin - rpad;
    f.y1 = rmax + rpad;

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
        << "' viewBox='0 0 " << width << " " << height << "'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    draw_axes(svg, f, "Var(|X|^2)", "rate (bits/symbol)");

    for (const MetricPoint& p : set.points)
        if (p.valid() && !p.pareto)
            svg << "<circle cx='" << f.x(p.variance) << "' cy='" << f.y(p.rate.value_bits)
                << "' r='2.5' fill='#aaa'/>\n";

    if (set.baseline.samples.size() >= 2) {
        svg << "<polyline fill='none' stroke='#2980b9' stroke-width='2' points='";
        for (const BaselineSample& s : set.baseline.samples)
            svg << f.x(s.variance) << "," << f.y(s.rate_bits) << " ";
        svg << "'/>\n";
    }

    if (!overlay.empty()) {
        svg << "<polyline fill='none' stroke='#27ae60' stroke-width='2' "
               "stroke-dasharray='6 4' points='";
        for (const auto& [x, y] : overlay) svg << f.x(x) << "," << f.y(y) << " ";
        svg << "'/>\n";
    }

    const std::vector<MetricPoint> frontier = set.frontier();
    if (frontier.size() >= 2) {
        svg << "<polyline fill='none' stroke='#c0392b' stroke-width='2' points='";
        for (const MetricPoint& p : frontier)
            svg << f.x(p.variance) << "," << f.y(p.rate.value_bits) << " ";
        svg << "'/>\n";
    }
    for (const MetricPoint& p : frontier)
        svg << "<circle cx='" << f.x(p.variance) << "' cy='" << f.y(p.rate.value_bits)
            << "' r='3.5' fill='#c0392b'/>\n";

    double ly = f.py0 + 16;
    const auto legend = [&](const char* color, const std::string& label, bool dashed) {
        svg << "<line x1='" << f.px1 - 170 << "' y1='" << ly - 4 << "' x2='" << f.px1 - 140
            << "' y2='" << ly - 4 << "' stroke='" << color << "' stroke-width='2'"
            << (dashed ? " stroke-dasharray='6 4'" : "") << "/>\n";
        svg << "<text x='" << f.px1 - 134 << "' y='" << ly
            << "' font-size='12' fill='#333'>" << escape_text(label) << "</text>\n";
        ly += 18;
    };
    legend("#c0392b", "Pareto frontier", false);
    legend("#2980b9", "PSK-QAM time sharing", false);
    if (!overlay.empty()) legend("#27ae60", "overlay", true);

    std::ostringstream title;
    title << "m=" << set.config.m << ", SNR=" << format_g12(set.config.snr_c_db) << " dB";
    svg << "<text x='" << f.px0 << "' y='24' font-size='14' fill='#111'>" << title.str()
        << "</text>\n";
    svg << "</svg>\n";
    write_file(path, svg.str());
}

}  // namespace apskit
