#pragma once

#include <cmath>
#include <stdexcept>

#include "diracfac/roots.hpp"

namespace diracfac {

/// Signals that gamma_fn() was evaluated exactly at a pole (0, -1, -2, ...).
/// Callers that apply the gamma-ratio rule treat a pole in the denominator
/// as an exact zero coefficient instead of an error.
struct GammaPoleError : std::domain_error {
    using std::domain_error::domain_error;
};

inline bool is_gamma_pole(double x) { return x <= 0.0 && x == std::floor(x); }

namespace detail {

// Lanczos approximation, g = 7, 9 coefficients (relative error well below
// 1e-14 on the real axis away from the poles).
inline constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline double lanczos_sum(double x) {
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    return a;
}

} // namespace detail

/// Gamma for real arguments away from the poles; reflection handles x < 1/2.
inline double gamma_fn(double x) {
    if (is_gamma_pole(x)) throw GammaPoleError("gamma_fn: pole at nonpositive integer");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    const double z = x - 1.0;
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * detail::lanczos_sum(z);
}

/// log Gamma for x > 0, safe far beyond the overflow range of gamma().
inline double log_gamma(double x) {
    if (x <= 0.0) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(detail::lanczos_sum(z));
}

} // namespace diracfac
