#pragma once

#include <array>
#include <vector>

#include "epr/distribution.hpp"
#include "epr/scenario.hpp"

namespace epr {

/// Two-party correlations <A0B0>, <A0B1>, <A1B0>, <A1B1>.
struct CorrelationVector {
    double e00 = 0.0;
    double e01 = 0.0;
    double e10 = 0.0;
    double e11 = 0.0;
};

/// The four CHSH sums and their bound-2 violation flags. Sign patterns,
/// in order: (1,1,1,-1), (1,1,-1,1), (1,-1,1,1), (-1,1,1,1).
struct ChshValues {
    std::array<double, 4> s{};
    std::array<bool, 4> violated{};
};

struct ChshReport {
    CorrelationVector correlations;
    std::array<double, 4> s_values{};
    std::array<bool, 4> violated{};
    double delta = 0.0;
    /// true = inequality satisfied under the delta-widened bound.
    std::array<bool, 4> corrected_tests{};
    std::array<double, 4> nosignalling_residuals{};
    double max_s = 0.0;
};

inline constexpr std::array<std::array<int, 4>, 4> chsh_sign_patterns = {{
    {1, 1, 1, -1},
    {1, 1, -1, 1},
    {1, -1, 1, 1},
    {-1, 1, 1, 1},
}};

/// Correlations from the 16-cell distribution:
///   e00 = (p1+p4)-(p2+p3), e01 = (p5+p8)-(p6+p7),
///   e10 = (p9+p12)-(p10+p11), e11 = (p13+p16)-(p14+p15).
CorrelationVector correlations(const GlobalDistribution& d);

/// The four signed CHSH sums with |s| > 2 flags.
ChshValues chsh_values(const CorrelationVector& c);

/// Marginal-deviation correction term:
///   delta = 0.5 * ((f1(0,1)-f1(4,5)) + (f1(8,9)-f1(12,13))
///                + (f1(0,2)-f1(4,6)) + (f1(8,10)-f1(12,14)))
/// with f1(i,j) = |2(p_i + p_j) - 1|. Reported as computed, including a
/// possibly negative value.
double signalling_delta(const GlobalDistribution& d);

/// Whether each CHSH inequality holds under the widened bound
/// 2(1 + delta) >= |sum|. true = satisfied (not violated).
std::array<bool, 4> chsh_corrected_tests(const GlobalDistribution& d);

/// No-signalling residuals:
///   |(p1+p2)-(p5+p6)|, |(p9+p10)-(p13+p14)|,
///   |(p1+p3)-(p9+p11)|, |(p5+p7)-(p13+p15)|.
std::array<double, 4> no_signalling_residuals(const GlobalDistribution& d);

/// All of the above in one report.
ChshReport analyze(const GlobalDistribution& d);

/// Per-hyperedge sum of the member weights, in edge order.
std::vector<double> hyperedge_weight_sums(const GlobalDistribution& d,
                                          const Scenario& scenario);

} // namespace epr
