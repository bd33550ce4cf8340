#pragma once

#include <string>
#include <vector>

#include "epr/distribution.hpp"
#include "harness.hpp"

namespace epr::harness {

/// Line chart of a sweep/bench CSV: per-N median of the chosen metric,
/// one polyline per method, log-scaled N axis. The output is fully
/// deterministic (fixed 800x480 canvas, no timestamps). Throws
/// std::runtime_error when `rows` is empty.
std::string render_chart(const std::vector<SweepRow>& rows, ChartMetric metric,
                         const std::string& title);

/// Bar chart of the 16 normalized weights; deterministic like render_chart.
std::string render_distribution_chart(const GlobalDistribution& d,
                                      const std::string& title);

} // namespace epr::harness
