#include "epr/serialization.hpp"

#include <cstdio>
#include <stdexcept>

namespace epr {

namespace {

void require_format(const json& j, const char* expected) {
    if (!j.is_object() || !j.contains("format") || j.at("format") != expected)
        throw std::runtime_error(std::string("document is not a ") + expected +
                                 " file");
}

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

} // namespace

json scenario_to_json(const Scenario& s) {
    json j;
    j["format"] = "epr-scenario";
    j["vertex_count"] = s.vertex_count;
    j["edges"] = json::array();
    for (const auto& e : s.edges) {
        json je;
        je["kind"] = e.kind == EdgeKind::context ? "context" : "nosignal";
        je["vertices"] = e.vertices;
        j["edges"].push_back(std::move(je));
    }
    return j;
}

Scenario scenario_from_json(const json& j) {
    require_format(j, "epr-scenario");
    Scenario s;
    s.vertex_count = j.at("vertex_count").get<int>();
    for (const auto& je : j.at("edges")) {
        Hyperedge e;
        const std::string kind = je.at("kind").get<std::string>();
        if (kind == "context")
            e.kind = EdgeKind::context;
        else if (kind == "nosignal")
            e.kind = EdgeKind::nosignal;
        else
            throw std::runtime_error("unknown edge kind: " + kind);
        e.vertices = je.at("vertices").get<std::vector<int>>();
        s.edges.push_back(std::move(e));
    }
    return s;
}

json constraints_to_json(const ConstraintTable& c, const std::string& name,
                         const TargetCorrelations* expected) {
    json j;
    j["format"] = "epr-constraints";
    if (!name.empty())
        j["name"] = name;
    json px = json::array();
    for (int x = 0; x < 2; ++x) {
        json py = json::array();
        for (int y = 0; y < 2; ++y) {
            json pa = json::array();
            for (int a = 0; a < 2; ++a) {
                json pb = json::array();
                for (int b = 0; b < 2; ++b)
                    pb.push_back(c.at(x, y, a, b));
                pa.push_back(std::move(pb));
            }
            py.push_back(std::move(pa));
        }
        px.push_back(std::move(py));
    }
    j["p"] = std::move(px);
    if (expected)
        j["expected_correlations"] = expected->e;
    return j;
}

ConstraintTable constraints_from_json(const json& j) {
    require_format(j, "epr-constraints");
    const auto& p = j.at("p");
    if (!p.is_array() || p.size() != 2)
        throw std::runtime_error("constraints: \"p\" must be a [x][y][a][b] array");
    ConstraintTable c;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    c.set(x, y, a, b, p.at(static_cast<std::size_t>(x))
                                          .at(static_cast<std::size_t>(y))
                                          .at(static_cast<std::size_t>(a))
                                          .at(static_cast<std::size_t>(b))
                                          .get<double>());
    return c;
}

json distribution_to_json(const GlobalDistribution& d, const Scenario& scenario) {
    const ChshReport r = analyze(d);
    json j;
    j["format"] = "epr-distribution";
    j["weights"] = d.p;
    j["edge_sums"] = hyperedge_weight_sums(d, scenario);
    j["correlations"] = {r.correlations.e00, r.correlations.e01, r.correlations.e10,
                         r.correlations.e11};
    j["s_values"] = r.s_values;
    j["delta"] = r.delta;
    j["residuals"] = r.nosignalling_residuals;
    return j;
}

GlobalDistribution distribution_from_json(const json& j) {
    require_format(j, "epr-distribution");
    const auto weights = j.at("weights").get<std::vector<double>>();
    if (weights.size() != 16)
        throw std::runtime_error("distribution: expected 16 weights, got " +
                                 std::to_string(weights.size()));
    GlobalDistribution d;
    std::copy(weights.begin(), weights.end(), d.p.begin());
    return d;
}

json report_to_json(const ChshReport& r, const GlobalDistribution& d) {
    json j;
    j["format"] = "epr-report";
    j["weights"] = d.p;
    j["correlations"] = {r.correlations.e00, r.correlations.e01, r.correlations.e10,
                         r.correlations.e11};
    j["s_values"] = r.s_values;
    j["violated"] = r.violated;
    j["delta"] = r.delta;
    j["corrected_tests"] = r.corrected_tests;
    j["residuals"] = r.nosignalling_residuals;
    j["max_s"] = r.max_s;
    return j;
}

std::string report_to_text(const ChshReport& r) {
    static const char* pattern_names[4] = {"(+ + + -)", "(+ + - +)", "(+ - + +)",
                                           "(- + + +)"};
    std::string out;
    out += "CHSH analysis\n";
    out += "  correlations   <A0B0> = " + fmt("%+.6f", r.correlations.e00) +
           "  <A0B1> = " + fmt("%+.6f", r.correlations.e01) +
           "  <A1B0> = " + fmt("%+.6f", r.correlations.e10) +
           "  <A1B1> = " + fmt("%+.6f", r.correlations.e11) + "\n";
    for (std::size_t i = 0; i < 4; ++i) {
        out += std::string("  S ") + pattern_names[i] + "    = " +
               fmt("%+.6f", r.s_values[i]) +
               "  bound-2: " + (r.violated[i] ? "violated " : "satisfied") +
               "  corrected: " + (r.corrected_tests[i] ? "satisfied" : "violated") +
               "\n";
    }
    out += "  max |S|        = " + fmt("%.6f", r.max_s) + "\n";
    out += "  delta          = " + fmt("%+.6f", r.delta) + "\n";
    out += "  residuals      = " + fmt("%.6f", r.nosignalling_residuals[0]) + " " +
           fmt("%.6f", r.nosignalling_residuals[1]) + " " +
           fmt("%.6f", r.nosignalling_residuals[2]) + " " +
           fmt("%.6f", r.nosignalling_residuals[3]) + "\n";
    return out;
}

const char* method_name(SamplerMethod m) {
    return m == SamplerMethod::rejection_atomic ? "rejection" : "metropolis";
}

SamplerMethod method_from_name(const std::string& name) {
    if (name == "rejection")
        return SamplerMethod::rejection_atomic;
    if (name == "metropolis")
        return SamplerMethod::metropolis_batch;
    throw std::runtime_error("unknown sampler method: " + name);
}

} // namespace epr
