#include "epr/scenario.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace epr {

namespace {

bool is_bit(int v) { return v == 0 || v == 1; }

// The FR construction below assumes both inputs have the canonical
// one-party layout produced by make_local_scenario.
void require_canonical_local(const Scenario& s, const char* which) {
    std::string who(which);
    if (s.vertex_count != 4 || s.edges.size() != 2)
        throw std::invalid_argument(
            "foulis_randall_product: scenario " + who +
            " is not a 2-setting binary scenario (need 4 vertices, 2 edges)");
    for (int e = 0; e < 2; ++e) {
        const auto& verts = s.edges[e].vertices;
        if (verts.size() != 2 || verts[0] != 2 * e || verts[1] != 2 * e + 1)
            throw std::invalid_argument(
                "foulis_randall_product: scenario " + who +
                " edge " + std::to_string(e) + " does not match the canonical layout");
    }
}

} // namespace

int vertex_index(int a, int b, int x, int y) {
    if (!is_bit(a) || !is_bit(b) || !is_bit(x) || !is_bit(y))
        throw std::invalid_argument("vertex_index: arguments must be 0 or 1");
    return ((x * 8) + (y * 4)) + (b + (a * 2));
}

JointVertex joint_vertex(int index) {
    if (index < 0 || index > 15)
        throw std::out_of_range("joint_vertex: index must be in [0, 15]");
    JointVertex v;
    v.x = (index >> 3) & 1;
    v.y = (index >> 2) & 1;
    v.a = (index >> 1) & 1;
    v.b = index & 1;
    v.index = index;
    return v;
}

JointVertex joint_vertex(int a, int b, int x, int y) {
    return joint_vertex(vertex_index(a, b, x, y));
}

int local_vertex_id(const Outcome& o) {
    if (!is_bit(o.local_outcome) || !is_bit(o.setting))
        throw std::invalid_argument("local_vertex_id: fields must be 0 or 1");
    return 2 * o.setting + o.local_outcome;
}

Scenario make_local_scenario() {
    Scenario s;
    s.vertex_count = 4;
    s.edges.push_back({{local_vertex_id({0, 0}), local_vertex_id({1, 0})}, EdgeKind::context});
    s.edges.push_back({{local_vertex_id({0, 1}), local_vertex_id({1, 1})}, EdgeKind::context});
    return s;
}

Scenario foulis_randall_product(const Scenario& sa, const Scenario& sb) {
    require_canonical_local(sa, "A");
    require_canonical_local(sb, "B");

    // Local vertices as (outcome, setting) pairs, edge-major. H[0] is
    // party A, H[1] party B; H[p][s] is the context edge for setting s.
    using LocalVertex = std::array<int, 2>;
    using LocalEdge = std::array<LocalVertex, 2>;
    const std::array<std::array<LocalEdge, 2>, 2> H = {{
        {{{{{0, 0}, {1, 0}}}, {{{0, 1}, {1, 1}}}}},
        {{{{{0, 0}, {1, 0}}}, {{{0, 1}, {1, 1}}}}},
    }};

    Scenario out;
    out.vertex_count = 16;

    // The four joint measurement contexts: all outcomes ab|xy for fixed (x, y).
    for (const auto& edge_a : H[0]) {
        for (const auto& edge_b : H[1]) {
            Hyperedge e;
            e.kind = EdgeKind::context;
            for (const auto& va : edge_a)
                for (const auto& vb : edge_b)
                    e.vertices.push_back(vertex_index(va[0], vb[0], va[1], vb[1]));
            out.edges.push_back(std::move(e));
        }
    }

    // The eight no-signalling edges: one party measures first and the
    // other's context is chosen per-outcome. mc selects the driving
    // party, j the pairing of driver outcomes with follower contexts.
    for (int mc = 0; mc < 2; ++mc) {
        const int mc_i = 1 - mc;
        for (const auto& edge : H[mc]) {
            for (int j = 0; j < 2; ++j) {
                Hyperedge e;
                e.kind = EdgeKind::nosignal;
                for (int i = 0; i < 2; ++i) {
                    const LocalEdge& edge_b = H[mc_i][i];
                    const LocalVertex& vertex_a = edge[std::abs(i - j)];
                    const LocalVertex& vertex_b = edge_b[0];
                    const LocalVertex& vertex_c = edge_b[1];
                    const std::array<int, 4> vertices_a = {vertex_a[0], vertex_b[0],
                                                           vertex_a[1], vertex_b[1]};
                    const std::array<int, 4> vertices_b = {vertex_a[0], vertex_c[0],
                                                           vertex_a[1], vertex_c[1]};
                    e.vertices.push_back(vertex_index(vertices_a[mc], vertices_a[mc_i],
                                                      vertices_a[mc + 2], vertices_a[mc_i + 2]));
                    e.vertices.push_back(vertex_index(vertices_b[mc], vertices_b[mc_i],
                                                      vertices_b[mc + 2], vertices_b[mc_i + 2]));
                }
                out.edges.push_back(std::move(e));
            }
        }
    }

    return out;
}

std::vector<int> edges_containing(const Scenario& s, int v) {
    if (v < 0 || v >= s.vertex_count)
        throw std::out_of_range("edges_containing: vertex id " + std::to_string(v) +
                                " out of range (vertex_count " +
                                std::to_string(s.vertex_count) + ")");
    std::vector<int> out;
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        const auto& verts = s.edges[i].vertices;
        if (std::find(verts.begin(), verts.end(), v) != verts.end())
            out.push_back(static_cast<int>(i));
    }
    return out;
}

ScenarioStats validate_scenario(const Scenario& s) {
    ScenarioStats stats;
    stats.n_vertices = s.vertex_count;
    stats.n_edges = static_cast<int>(s.edges.size());
    stats.edges_per_vertex.assign(std::max(s.vertex_count, 0), 0);

    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        const auto& verts = s.edges[i].vertices;
        stats.edge_cardinalities.push_back(static_cast<int>(verts.size()));
        if (verts.empty())
            stats.violations.push_back("edge " + std::to_string(i) + " is empty");
        std::set<int> seen;
        for (int v : verts) {
            if (v < 0 || v >= s.vertex_count) {
                stats.violations.push_back("edge " + std::to_string(i) +
                                           " references dangling vertex " + std::to_string(v));
                continue;
            }
            if (!seen.insert(v).second)
                stats.violations.push_back("edge " + std::to_string(i) +
                                           " contains duplicate vertex " + std::to_string(v));
            ++stats.edges_per_vertex[v];
        }
    }
    return stats;
}

} // namespace epr
