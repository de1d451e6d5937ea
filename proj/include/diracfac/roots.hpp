#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracfac/matrix.hpp"

namespace diracfac {

inline constexpr double kPi = 3.14159265358979323846;

/// The n-th roots of unity eps_k = exp(i 2 pi k / n), k = 0..n-1.
///
/// Index arithmetic (k mod n) is the exact side of root algebra: products of
/// roots are tracked as exponent sums, while the floating values back the
/// residual checks.  They satisfy sum_k eps_k = 0 (n >= 2) and
/// prod_k eps_k = +1 for odd n, -1 for even n.
struct UnityRoots {
    int order = 0;
    std::vector<Cx> roots;

    /// eps_k with the index reduced mod n (negative k allowed).
    Cx root(long long k) const {
        long long m = k % order;
        if (m < 0) m += order;
        return roots[static_cast<std::size_t>(m)];
    }
};

inline UnityRoots unity_roots(int n) {
    if (n < 1) throw std::invalid_argument("unity_roots: order must be a positive integer");
    UnityRoots u;
    u.order = n;
    u.roots.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * kPi * k / n;
        u.roots.push_back(Cx{std::cos(angle), std::sin(angle)});
    }
    return u;
}

} // namespace diracfac
