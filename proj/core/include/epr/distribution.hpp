#pragma once

#include <array>

namespace epr {

/// The 16 normalized weights of the global distribution, one per joint
/// outcome ab|xy at position vertex_index(a, b, x, y). Each of the four
/// context blocks of a well-formed distribution sums to 1.
struct GlobalDistribution {
    std::array<double, 16> p{};

    double& operator[](int i) { return p[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return p[static_cast<std::size_t>(i)]; }
};

} // namespace epr
