#include "epr/constraints.hpp"

#include <cmath>
#include <stdexcept>

#include "epr/analysis.hpp"
#include "epr/scenario.hpp"

namespace epr {

namespace {
constexpr double kContextSumTolerance = 1e-9;
}

double ConstraintTable::at(int x, int y, int a, int b) const {
    return p_[static_cast<std::size_t>(vertex_index(a, b, x, y))];
}

void ConstraintTable::set(int x, int y, int a, int b, double value) {
    p_[static_cast<std::size_t>(vertex_index(a, b, x, y))] = value;
}

ConstraintTable constraints_from_correlations(const TargetCorrelations& t) {
    for (double e : t.e)
        if (!(std::abs(e) <= 1.0))
            throw std::invalid_argument(
                "constraints_from_correlations: correlations must be in [-1, 1]");
    ConstraintTable c;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const double exy = t.e[static_cast<std::size_t>(2 * x + y)];
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const double sign = ((a ^ b) == 0) ? 1.0 : -1.0;
                    c.set(x, y, a, b, (1.0 + sign * exy) / 4.0);
                }
        }
    return c;
}

ConstraintTable pr_box() {
    return constraints_from_correlations({{1.0, 1.0, 1.0, -1.0}});
}

ConstraintTable classical_uniform() {
    return constraints_from_correlations({{0.0, 0.0, 0.0, 0.0}});
}

ConstraintTable tsirelson() {
    const double q = 1.0 / std::sqrt(2.0);
    return constraints_from_correlations({{q, q, q, -q}});
}

ConstraintValidation validate_constraints(const ConstraintTable& c) {
    ConstraintValidation v;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            double sum = 0.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const double value = c.at(x, y, a, b);
                    if (!(value >= 0.0 && value <= 1.0)) {
                        v.entries_in_range = false;
                        v.problems.push_back(
                            "entry p(" + std::to_string(a) + "," + std::to_string(b) +
                            "|" + std::to_string(x) + "," + std::to_string(y) +
                            ") = " + std::to_string(value) + " outside [0, 1]");
                    }
                    sum += value;
                }
            v.context_sums[static_cast<std::size_t>(2 * x + y)] = sum;
            if (std::abs(sum - 1.0) > kContextSumTolerance) {
                v.context_sums_ok = false;
                v.problems.push_back("context (" + std::to_string(x) + "," +
                                     std::to_string(y) + ") sums to " +
                                     std::to_string(sum) + ", expected 1");
            }
        }
    v.residuals = no_signalling_residuals(analytic_distribution(c));
    return v;
}

GlobalDistribution analytic_distribution(const ConstraintTable& c) {
    GlobalDistribution d;
    d.p = c.flat();
    return d;
}

} // namespace epr
