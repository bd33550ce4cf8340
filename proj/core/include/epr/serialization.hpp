#pragma once

#include <string>

#include <json.hpp>

#include "epr/analysis.hpp"
#include "epr/constraints.hpp"
#include "epr/distribution.hpp"
#include "epr/sampling.hpp"
#include "epr/scenario.hpp"

namespace epr {

/// JSON documents use insertion-ordered keys so emitted files are
/// byte-stable. Every document carries a "format" discriminator:
/// "epr-scenario", "epr-constraints", "epr-distribution", "epr-report".
using json = nlohmann::ordered_json;

json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const json& j);

/// Constraint table document: "p" is nested [x][y][a][b], plus optional
/// "name" and "expected_correlations" metadata.
json constraints_to_json(const ConstraintTable& c, const std::string& name = "",
                         const TargetCorrelations* expected = nullptr);
ConstraintTable constraints_from_json(const json& j);

/// Distribution document: the 16 weights plus the derived quantities a
/// verifier recomputes (edge sums, correlations, CHSH sums, delta,
/// residuals).
json distribution_to_json(const GlobalDistribution& d, const Scenario& scenario);
GlobalDistribution distribution_from_json(const json& j);

/// Full analysis report keyed to the weights it was computed from.
json report_to_json(const ChshReport& r, const GlobalDistribution& d);

/// Fixed-width human-readable rendering of a report.
std::string report_to_text(const ChshReport& r);

const char* method_name(SamplerMethod m);
SamplerMethod method_from_name(const std::string& name);

} // namespace epr
