#pragma once

#include <array>
#include <string>
#include <vector>

namespace epr {

/// One outcome of a single-party measurement: the observed bit and the
/// setting bit it was observed under (a|x or b|y).
struct Outcome {
    int local_outcome = 0;
    int setting = 0;
};

/// A joint outcome ab|xy of the composite experiment together with its
/// canonical position in the 16-cell global distribution.
struct JointVertex {
    int a = 0;
    int b = 0;
    int x = 0;
    int y = 0;
    int index = 0;
};

enum class EdgeKind { context, nosignal };

struct Hyperedge {
    std::vector<int> vertices;
    EdgeKind kind = EdgeKind::context;
};

/// A contextuality scenario: outcome vertices plus the hyperedges that
/// group them into complete measurement contexts. Values are immutable
/// after construction and safe to share across threads.
struct Scenario {
    int vertex_count = 0;
    std::vector<Hyperedge> edges;
};

/// Structural summary produced by validate_scenario. Violations are
/// reported, not thrown.
struct ScenarioStats {
    int n_vertices = 0;
    int n_edges = 0;
    std::vector<int> edge_cardinalities;
    std::vector<int> edges_per_vertex;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Canonical index of the joint outcome (a, b, x, y): 8x + 4y + 2a + b.
/// Position k of a GlobalDistribution holds the probability of the
/// outcome this map sends to k. Throws std::invalid_argument on
/// arguments outside {0, 1}.
int vertex_index(int a, int b, int x, int y);

/// Inverse of vertex_index. Throws std::out_of_range for index not in [0, 15].
JointVertex joint_vertex(int index);
JointVertex joint_vertex(int a, int b, int x, int y);

/// Encoding of a single-party outcome as a local vertex id: 2*setting + outcome.
int local_vertex_id(const Outcome& o);

/// The one-party binary scenario: vertices {0|0, 1|0, 0|1, 1|1} with one
/// hyperedge per setting, {0|0, 1|0} and {0|1, 1|1}.
Scenario make_local_scenario();

/// Foulis-Randall product of two one-party binary scenarios. The result
/// has 16 vertices (indexed by vertex_index) and 12 hyperedges of
/// cardinality 4. Edge order is deterministic: the 4 measurement-context
/// edges first (x-major, then y), then the 8 no-signalling edges in the
/// order (driving party A then B; per source edge; j = 0 then 1). Only
/// the 2-setting, 2-outcome case is supported; anything else throws
/// std::invalid_argument.
Scenario foulis_randall_product(const Scenario& sa, const Scenario& sb);

/// Indices (in edge order) of every hyperedge containing vertex v.
/// Throws std::out_of_range if v is not a vertex of s.
std::vector<int> edges_containing(const Scenario& s, int v);

/// Structural counts and integrity report. Never mutates s.
ScenarioStats validate_scenario(const Scenario& s);

} // namespace epr
