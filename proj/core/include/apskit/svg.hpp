#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apskit/constellation.hpp"
#include "apskit/tradeoff.hpp"

namespace apskit {

/// Point-scatter plot of a constellation with its ring circles.
void write_constellation_svg(const Constellation& c, const std::string& path,
                             const std::string& title = "");

/// Variance-rate plane: all swept points, the Pareto frontier, the
/// time-sharing baseline, and an optional external overlay curve.
void write_frontier_svg(const FrontierSet& set, const std::string& path,
                        const std::vector<std::pair<double, double>>& overlay = {});

}  // namespace apskit
