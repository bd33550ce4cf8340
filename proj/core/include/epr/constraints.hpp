#pragma once

#include <array>
#include <string>
#include <vector>

#include "epr/distribution.hpp"

namespace epr {

/// Desired two-party correlations <A0B0>, <A0B1>, <A1B0>, <A1B1>, with
/// both parties' marginals fixed uniform.
struct TargetCorrelations {
    std::array<double, 4> e{};
};

/// The input-correlation table p(a, b | x, y) used as per-outcome
/// acceptance probabilities during sampling. Storage is flat in the
/// same order as vertex_index, so a context block is 4 consecutive
/// entries.
class ConstraintTable {
public:
    double at(int x, int y, int a, int b) const;
    void set(int x, int y, int a, int b, double value);

    const std::array<double, 16>& flat() const { return p_; }
    std::array<double, 16>& flat() { return p_; }

private:
    std::array<double, 16> p_{};
};

struct ConstraintValidation {
    bool entries_in_range = true;
    bool context_sums_ok = true;
    std::array<double, 4> context_sums{};
    // Analytic no-signalling residuals of the induced distribution.
    std::array<double, 4> residuals{};
    std::vector<std::string> problems;

    bool valid() const { return entries_in_range && context_sums_ok; }
};

/// Table realizing the target correlations under uniform marginals:
/// p(a, b | x, y) = (1 + (-1)^(a xor b) * e_xy) / 4. Throws
/// std::invalid_argument if any |e| > 1.
ConstraintTable constraints_from_correlations(const TargetCorrelations& t);

/// Super-quantum preset: maximally correlated in three contexts,
/// maximally anti-correlated in the fourth (correlations (1, 1, 1, -1)).
ConstraintTable pr_box();

/// Classical control preset: every entry 0.25.
ConstraintTable classical_uniform();

/// Quantum-boundary preset: correlations (1, 1, 1, -1) / sqrt(2),
/// saturating the 2*sqrt(2) CHSH bound.
ConstraintTable tsirelson();

/// Range and per-context-sum checks, plus the analytic residuals of the
/// induced distribution. Report-style: never throws.
ConstraintValidation validate_constraints(const ConstraintTable& c);

/// The distribution a table induces in the sampling limit: weight of
/// vertex (a, b, x, y) is exactly the table entry.
GlobalDistribution analytic_distribution(const ConstraintTable& c);

} // namespace epr
