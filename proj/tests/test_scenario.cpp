#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "epr/scenario.hpp"
#include "test_support.hpp"

using namespace epr;

namespace {

// The 12 edges of the composite in construction order, frozen as the
// deterministic-layout contract for the binary case.
const std::vector<std::vector<int>> kExpectedEdges = {
    {0, 1, 2, 3},  {4, 5, 6, 7},  {8, 9, 10, 11}, {12, 13, 14, 15},
    {0, 1, 6, 7},  {2, 3, 4, 5},  {8, 9, 14, 15}, {10, 11, 12, 13},
    {0, 2, 9, 11}, {1, 3, 8, 10}, {4, 6, 13, 15}, {5, 7, 12, 14},
};

} // namespace

TEST_CASE("vertex_index implements 8x + 4y + 2a + b") {
    CHECK(vertex_index(0, 0, 0, 0) == 0);
    CHECK(vertex_index(1, 1, 1, 1) == 15);
    CHECK(vertex_index(1, 0, 0, 1) == 6);
    CHECK(vertex_index(0, 1, 1, 0) == 9);

    CHECK_THROWS_AS(vertex_index(2, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(vertex_index(0, -1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(vertex_index(0, 0, 3, 0), std::invalid_argument);
}

TEST_CASE("vertex_index round-trips through joint_vertex for all 16 cells") {
    std::set<int> seen;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) {
                    const int idx = vertex_index(a, b, x, y);
                    CHECK(idx >= 0);
                    CHECK(idx <= 15);
                    seen.insert(idx);
                    const JointVertex v = joint_vertex(idx);
                    CHECK(v.a == a);
                    CHECK(v.b == b);
                    CHECK(v.x == x);
                    CHECK(v.y == y);
                    CHECK(v.index == idx);
                }
    CHECK(seen.size() == 16); // bijective
    CHECK_THROWS_AS(joint_vertex(16), std::out_of_range);
    CHECK_THROWS_AS(joint_vertex(-1), std::out_of_range);
}

TEST_CASE("local scenario has two disjoint setting contexts covering 4 vertices") {
    const Scenario s = make_local_scenario();
    CHECK(s.vertex_count == 4);
    REQUIRE(s.edges.size() == 2);
    CHECK(s.edges[0].vertices == std::vector<int>{0, 1});
    CHECK(s.edges[1].vertices == std::vector<int>{2, 3});

    std::set<int> all;
    for (const auto& e : s.edges)
        all.insert(e.vertices.begin(), e.vertices.end());
    CHECK(all.size() == 4);

    for (int v = 0; v < 4; ++v)
        CHECK(edges_containing(s, v).size() == 1);
}

TEST_CASE("FR product has 16 vertices and 12 edges of cardinality 4") {
    const Scenario fr = eprtest::fr_scenario();
    CHECK(fr.vertex_count == 16);
    REQUIRE(fr.edges.size() == 12);
    for (const auto& e : fr.edges)
        CHECK(e.vertices.size() == 4);

    // 4 context edges first, 8 no-signalling edges after.
    for (std::size_t i = 0; i < 12; ++i)
        CHECK(fr.edges[i].kind == (i < 4 ? EdgeKind::context : EdgeKind::nosignal));
}

TEST_CASE("FR edge layout is deterministic and matches the frozen order") {
    const Scenario a = eprtest::fr_scenario();
    const Scenario b = eprtest::fr_scenario();
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        CHECK(a.edges[i].vertices == b.edges[i].vertices);

    for (std::size_t i = 0; i < kExpectedEdges.size(); ++i) {
        std::vector<int> got = a.edges[i].vertices;
        std::sort(got.begin(), got.end());
        CHECK(got == kExpectedEdges[i]);
    }
}

TEST_CASE("the worked single hyperedge {00|00, 01|00, 10|01, 11|01} is produced") {
    const Scenario fr = eprtest::fr_scenario();
    const std::set<int> expected = {
        vertex_index(0, 0, 0, 0), // 00|00
        vertex_index(0, 1, 0, 0), // 01|00
        vertex_index(1, 0, 0, 1), // 10|01
        vertex_index(1, 1, 0, 1), // 11|01
    };
    bool found = false;
    for (const auto& e : fr.edges) {
        const std::set<int> verts(e.vertices.begin(), e.vertices.end());
        if (verts == expected) {
            found = true;
            CHECK(e.kind == EdgeKind::nosignal);
        }
    }
    CHECK(found);
}

TEST_CASE("every composite vertex lies in exactly 3 of the 12 edges") {
    const Scenario fr = eprtest::fr_scenario();
    for (int v = 0; v < 16; ++v) {
        const auto edges = edges_containing(fr, v);
        CHECK(edges.size() == 3);
        CHECK(std::is_sorted(edges.begin(), edges.end()));
    }
    // Vertex 00|00 specifically: its context plus two no-signalling edges.
    CHECK(edges_containing(fr, 0) == std::vector<int>{0, 4, 8});
}

TEST_CASE("the four context edges partition the 16 vertices") {
    const Scenario fr = eprtest::fr_scenario();
    std::set<int> seen;
    for (int e = 0; e < 4; ++e)
        for (int v : fr.edges[static_cast<std::size_t>(e)].vertices)
            CHECK(seen.insert(v).second);
    CHECK(seen.size() == 16);
}

TEST_CASE("every FR edge is a duplicate-free subset of the product vertex set") {
    const Scenario fr = eprtest::fr_scenario();
    for (const auto& e : fr.edges) {
        std::set<int> verts(e.vertices.begin(), e.vertices.end());
        CHECK(verts.size() == e.vertices.size());
        for (int v : verts) {
            CHECK(v >= 0);
            CHECK(v < fr.vertex_count);
        }
    }
}

TEST_CASE("edges_containing rejects out-of-range vertices") {
    const Scenario fr = eprtest::fr_scenario();
    CHECK_THROWS_AS(edges_containing(fr, 16), std::out_of_range);
    CHECK_THROWS_AS(edges_containing(fr, -1), std::out_of_range);
}

TEST_CASE("foulis_randall_product rejects unsupported scenarios") {
    const Scenario local = make_local_scenario();

    Scenario three_outcome;
    three_outcome.vertex_count = 6;
    three_outcome.edges.push_back({{0, 1, 2}, EdgeKind::context});
    three_outcome.edges.push_back({{3, 4, 5}, EdgeKind::context});
    CHECK_THROWS_AS(foulis_randall_product(three_outcome, local), std::invalid_argument);
    CHECK_THROWS_AS(foulis_randall_product(local, three_outcome), std::invalid_argument);

    Scenario shuffled = local;
    std::swap(shuffled.edges[0].vertices[0], shuffled.edges[0].vertices[1]);
    CHECK_THROWS_AS(foulis_randall_product(shuffled, local), std::invalid_argument);

    Scenario empty;
    CHECK_THROWS_AS(foulis_randall_product(empty, local), std::invalid_argument);
}

TEST_CASE("validate_scenario reports structure without mutating") {
    SUBCASE("composite") {
        const Scenario fr = eprtest::fr_scenario();
        const ScenarioStats stats = validate_scenario(fr);
        CHECK(stats.ok());
        CHECK(stats.n_vertices == 16);
        CHECK(stats.n_edges == 12);
        for (int card : stats.edge_cardinalities)
            CHECK(card == 4);
        for (int deg : stats.edges_per_vertex)
            CHECK(deg == 3);
        const int total_cards = std::accumulate(stats.edge_cardinalities.begin(),
                                                stats.edge_cardinalities.end(), 0);
        const int total_degs = std::accumulate(stats.edges_per_vertex.begin(),
                                               stats.edges_per_vertex.end(), 0);
        CHECK(total_cards == total_degs);
    }

    SUBCASE("local") {
        const ScenarioStats stats = validate_scenario(make_local_scenario());
        CHECK(stats.ok());
        CHECK(stats.n_vertices == 4);
        CHECK(stats.n_edges == 2);
    }

    SUBCASE("empty scenario is fine") {
        const ScenarioStats stats = validate_scenario(Scenario{});
        CHECK(stats.ok());
        CHECK(stats.n_vertices == 0);
        CHECK(stats.n_edges == 0);
    }

    SUBCASE("duplicate vertex in an edge") {
        Scenario s;
        s.vertex_count = 3;
        s.edges.push_back({{0, 1, 1}, EdgeKind::context});
        const ScenarioStats stats = validate_scenario(s);
        REQUIRE(!stats.ok());
        CHECK(stats.violations.front().find("duplicate") != std::string::npos);
    }

    SUBCASE("dangling vertex id") {
        Scenario s;
        s.vertex_count = 2;
        s.edges.push_back({{0, 5}, EdgeKind::context});
        const ScenarioStats stats = validate_scenario(s);
        REQUIRE(!stats.ok());
        CHECK(stats.violations.front().find("dangling") != std::string::npos);
    }

    SUBCASE("empty edge") {
        Scenario s;
        s.vertex_count = 1;
        s.edges.push_back({{}, EdgeKind::context});
        CHECK(!validate_scenario(s).ok());
    }
}
