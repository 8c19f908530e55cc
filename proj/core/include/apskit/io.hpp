#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apskit/constellation.hpp"
#include "apskit/geometry.hpp"
#include "apskit/tradeoff.hpp"

namespace apskit {

/// Fixed 12-significant-digit decimal formatting used by every CSV writer,
/// so identical runs emit byte-identical files.
std::string format_g12(double v);

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Serialized form: {"meta": {...}, "points": [{"re": ..., "im": ...}, ...]}.
std::string constellation_to_json(const Constellation& c);
void write_constellation_json(const Constellation& c, const std::string& path);
Constellation read_constellation_json(const std::string& path);

/// Explicit ring description: {"m": ..., "ring_counts": [...],
/// "ring_radii": [...], "phase_offsets": [...]} (offsets default to 0).
ApskDesign read_design_json(const std::string& path);

std::string distance_report_to_json(const DistanceReport& rep);

/// Columns: alpha,b,c,K,variance,rate_bits,rate_stderr,d_min,gap_bound,
/// pareto,skipped_reason. Config echoed as leading '#' comment lines.
void write_frontier_csv(const FrontierSet& set, const std::string& path);

/// Columns: lambda,rate_bits,variance.
void write_baseline_csv(const FrontierSet& set, const std::string& path);

/// One line per skipped tuple: alpha,b,c,reason.
void write_skipped_log(const FrontierSet& set, const std::string& path);

/// Reads (x, y) pairs from the first two columns of a CSV, skipping '#'
/// comments and non-numeric header lines. Used for external overlay curves.
std::vector<std::pair<double, double>> read_xy_csv(const std::string& path);

}  // namespace apskit
