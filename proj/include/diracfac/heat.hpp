#pragma once

#include <cmath>
#include <map>
#include <stdexcept>

#include "diracfac/evolution.hpp"
#include "diracfac/spectral.hpp"
#include "diracfac/stable.hpp"

namespace diracfac {

/// The generalized heat problem
///   d/dt F = -(-(d/dx)^2 + k)^{1/n} F,   F(x, 0) = f(x),
/// with n >= 1, shift k >= 0, on a periodic grid.
struct HeatProblem {
    int order = 2;                 // n (nu = 1/n)
    double shift = 0.0;            // k
    SpectralField initial;         // f
    double time = 0.0;             // t

    HeatProblem(int n, double k, SpectralField f, double t)
        : order(n), shift(k), initial(std::move(f)), time(t) {
        if (n < 1) throw std::invalid_argument("HeatProblem: order must be >= 1");
        if (k < 0.0) throw std::domain_error("HeatProblem: shift k must be >= 0 (principal real root)");
        if (t < 0.0) throw std::domain_error("HeatProblem: time must be >= 0");
        if (initial.top_quarter_mass_fraction() >= kResolutionThreshold)
            throw ResolutionError("HeatProblem: grid does not resolve the initial data");
    }
};

/// Reference solver: the exact Fourier-mode solution
///   F(p, t) = exp(-t (p^2 + k)^{1/n}) f(p).
inline SpectralField heat_solve_fourier(const HeatProblem& problem) {
    SpectralField out = problem.initial;
    for (long m = out.min_mode(); m <= out.max_mode(); ++m) {
        const double p = out.frequency(m);
        const double symbol = std::pow(p * p + problem.shift, 1.0 / problem.order);
        out.set_mode(m, out.mode(m) * std::exp(-problem.time * symbol));
    }
    return out;
}

/// Transform-route solver: in Fourier space the heat-kernel bracket turns
/// mode p into exp(-t^n xi p^2), so each mode is weighted by
///   w(p) = int_0^inf g_{1/n}(xi) exp(-t^n (k + p^2) xi) dxi,
/// evaluated by adaptive quadrature on the compactified xi axis.  t = 0 and
/// n = 1 reduce exactly (empty exponent / delta density).
inline SpectralField heat_solve_levy(const HeatProblem& problem) {
    if (problem.time == 0.0) return problem.initial;
    if (problem.order == 1) return heat_solve_fourier(problem);

    const StableDensity g(StableDensitySpec(Rational(1, problem.order), StableMethod::series));
    const double clamp = g.lower_clamp();
    const double tn = std::pow(problem.time, problem.order);

    SpectralField out = problem.initial;
    std::map<long, double> weight_by_abs_mode;
    for (long m = out.min_mode(); m <= out.max_mode(); ++m) {
        const long key = m < 0 ? -m : m;
        auto it = weight_by_abs_mode.find(key);
        double w;
        if (it != weight_by_abs_mode.end()) {
            w = it->second;
        } else {
            const double p = out.frequency(key);
            const double s = tn * (problem.shift + p * p);
            if (s == 0.0) {
                w = 1.0; // the xi-integral of g alone: normalization
            } else {
                auto f = [&](double xi) { return g(xi) * std::exp(-s * xi); };
                QuadratureResult q = integrate_to_infinity(f, clamp, 1e-10);
                if (!q.converged) throw AccuracyError("heat_solve_levy: quadrature failed");
                w = q.value;
            }
            weight_by_abs_mode.emplace(key, w);
        }
        out.set_mode(m, out.mode(m) * w);
    }
    return out;
}

/// Relative L2 discrepancy of the two solution routes (Parseval: computed on
/// the mode vectors).
inline double compare_heat_solvers(const HeatProblem& problem) {
    const SpectralField a = heat_solve_levy(problem);
    const SpectralField b = heat_solve_fourier(problem);
    double num = 0.0, den = 0.0;
    for (long m = a.min_mode(); m <= a.max_mode(); ++m) {
        num += std::norm(a.mode(m) - b.mode(m));
        den += std::norm(b.mode(m));
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

} // namespace diracfac
