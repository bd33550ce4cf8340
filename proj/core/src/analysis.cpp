#include "epr/analysis.hpp"

#include <cmath>

namespace epr {

namespace {

// f2(i, j, k, l) = (p_i + p_j) - (p_k + p_l), zero-based cell indices.
double f2(const GlobalDistribution& d, int i, int j, int k, int l) {
    return (d[i] + d[j]) - (d[k] + d[l]);
}

// f1(i, j) = |2 (p_i + p_j) - 1|, the marginal's deviation from 1/2 doubled.
double f1(const GlobalDistribution& d, int i, int j) {
    return std::abs(2.0 * (d[i] + d[j]) - 1.0);
}

std::array<double, 4> correlation_terms(const GlobalDistribution& d) {
    return {f2(d, 0, 3, 1, 2), f2(d, 4, 7, 5, 6), f2(d, 8, 11, 9, 10),
            f2(d, 12, 15, 13, 14)};
}

} // namespace

CorrelationVector correlations(const GlobalDistribution& d) {
    const auto e = correlation_terms(d);
    return {e[0], e[1], e[2], e[3]};
}

ChshValues chsh_values(const CorrelationVector& c) {
    const std::array<double, 4> e = {c.e00, c.e01, c.e10, c.e11};
    ChshValues out;
    for (std::size_t i = 0; i < 4; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < 4; ++k)
            s += chsh_sign_patterns[i][k] * e[k];
        out.s[i] = s;
        out.violated[i] = std::abs(s) > 2.0;
    }
    return out;
}

double signalling_delta(const GlobalDistribution& d) {
    return 0.5 * ((f1(d, 0, 1) - f1(d, 4, 5)) + (f1(d, 8, 9) - f1(d, 12, 13)) +
                  (f1(d, 0, 2) - f1(d, 4, 6)) + (f1(d, 8, 10) - f1(d, 12, 14)));
}

std::array<bool, 4> chsh_corrected_tests(const GlobalDistribution& d) {
    const double delta = signalling_delta(d);
    const auto e = correlation_terms(d);
    std::array<bool, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < 4; ++k)
            s += chsh_sign_patterns[i][k] * e[k];
        out[i] = 2.0 * (1.0 + delta) >= std::abs(s);
    }
    return out;
}

std::array<double, 4> no_signalling_residuals(const GlobalDistribution& d) {
    return {
        std::abs((d[0] + d[1]) - (d[4] + d[5])),
        std::abs((d[8] + d[9]) - (d[12] + d[13])),
        std::abs((d[0] + d[2]) - (d[8] + d[10])),
        std::abs((d[4] + d[6]) - (d[12] + d[14])),
    };
}

std::vector<double> hyperedge_weight_sums(const GlobalDistribution& d,
                                          const Scenario& scenario) {
    std::vector<double> sums;
    sums.reserve(scenario.edges.size());
    for (const auto& edge : scenario.edges) {
        double s = 0.0;
        for (int v : edge.vertices)
            s += d[v];
        sums.push_back(s);
    }
    return sums;
}

ChshReport analyze(const GlobalDistribution& d) {
    ChshReport r;
    r.correlations = correlations(d);
    const ChshValues v = chsh_values(r.correlations);
    r.s_values = v.s;
    r.violated = v.violated;
    r.delta = signalling_delta(d);
    r.corrected_tests = chsh_corrected_tests(d);
    r.nosignalling_residuals = no_signalling_residuals(d);
    r.max_s = 0.0;
    for (double s : r.s_values)
        r.max_s = std::max(r.max_s, std::abs(s));
    return r;
}

} // namespace epr
