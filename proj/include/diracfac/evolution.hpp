#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracfac/families.hpp"
#include "diracfac/matrix.hpp"
#include "diracfac/spectral.hpp"

namespace diracfac {

/// Raised when a spectral grid cannot resolve the data it is asked to carry.
struct ResolutionError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class PropagatorMethod { exact, bch1 };

/// Evolution configuration for the linearized system
///   d/dt Phi = (tau_1 d/dx + a tau_2) Phi.
/// `exact` exponentiates the full mode generator; `bch1` uses the
/// lowest-order disentangled product, whose omitted terms are cubic in t.
struct PropagatorSpec {
    int order = 2;     // n, the factorization order
    double a = 0.0;
    double t = 0.0;
    PropagatorMethod method = PropagatorMethod::exact;
};

inline constexpr double kResolutionThreshold = 1e-10;

/// Generator of one Fourier mode: (i p) tau_1 + a tau_2 (n x n), with the
/// even-n phase baked into tau_2 by the family construction.
inline CMatrix mode_generator(int n, double a, double p) {
    if (n < 2) throw std::invalid_argument("mode_generator: order must be >= 2");
    const FactorFamily tau = build_family(FamilyName::tau, n);
    return Cx{0.0, p} * tau.members[0] + Cx{a, 0.0} * tau.members[1];
}

/// Mode propagator for the chosen method.
inline CMatrix mode_propagator(int n, double a, double p, double t, PropagatorMethod method) {
    const FactorFamily tau = build_family(FamilyName::tau, n);
    const CMatrix& t1 = tau.members[0];
    const CMatrix& t2 = tau.members[1];
    if (method == PropagatorMethod::exact)
        return mat_exp(Cx{t, 0} * (Cx{0.0, p} * t1 + Cx{a, 0.0} * t2));
    // exp(t ip tau1) exp(t a tau2) exp(-(a t^2/2) ip [tau1,tau2])
    const CMatrix u1 = mat_exp(Cx{0.0, t * p} * t1);
    const CMatrix u2 = mat_exp(Cx{t * a, 0.0} * t2);
    const CMatrix u3 = mat_exp(Cx{0.0, -0.5 * a * t * t * p} * commutator(t1, t2));
    return u1 * u2 * u3;
}

/// Evolves the vector field mode by mode.  The spatial derivative is exact
/// in Fourier space, so there is no time-stepping error; the only
/// approximation is the bch1 product when that method is selected.
inline VectorSpectralField evolve(const VectorSpectralField& phi0, const PropagatorSpec& spec) {
    if (static_cast<int>(phi0.order()) != spec.order)
        throw std::invalid_argument("evolve: component count must equal the factorization order");
    if (!std::isfinite(spec.t) || !std::isfinite(spec.a))
        throw std::invalid_argument("evolve: t and a must be finite");
    if (phi0.top_quarter_mass_fraction() >= kResolutionThreshold)
        throw ResolutionError("evolve: grid does not resolve the initial data");

    const std::size_t n = phi0.order();
    VectorSpectralField out = phi0;
    const SpectralField& ref = phi0.components[0];
    for (long m = ref.min_mode(); m <= ref.max_mode(); ++m) {
        const double p = ref.frequency(m);
        const CMatrix u = mode_propagator(spec.order, spec.a, p, spec.t, spec.method);
        std::vector<Cx> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = phi0.components[c].mode(m);
        for (std::size_t r = 0; r < n; ++r) {
            Cx acc{0, 0};
            for (std::size_t c = 0; c < n; ++c) acc += u(r, c) * v[c];
            out.components[r].set_mode(m, acc);
        }
    }
    return out;
}

struct BchScanResult {
    std::vector<std::pair<double, double>> residuals; // (t, ||U_exact - U_bch1||_F)
    double slope = 0.0;                               // least-squares log-log slope
};

/// Scans ||U_exact(t) - U_bch1(t)||_F for one mode over a t list and fits
/// the log-log slope.  The first omitted commutators are cubic in t, so the
/// slope sits at 3 whenever a and p are both nonzero.
inline BchScanResult bch_error_scan(int n, double a, double p, const std::vector<double>& ts) {
    if (ts.size() < 2) throw std::invalid_argument("bch_error_scan: need at least two t values");
    BchScanResult out;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t fitted = 0;
    for (double t : ts) {
        const CMatrix ue = mode_propagator(n, a, p, t, PropagatorMethod::exact);
        const CMatrix ub = mode_propagator(n, a, p, t, PropagatorMethod::bch1);
        const double r = frobenius_norm(ue - ub);
        out.residuals.emplace_back(t, r);
        if (r > 0.0) {
            const double lx = std::log(t), ly = std::log(r);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++fitted;
        }
    }
    if (fitted >= 2) {
        const double d = fitted * sxx - sx * sx;
        out.slope = (fitted * sxy - sx * sy) / d;
    }
    return out;
}

/// Verifies that one component of the evolved system satisfies the scalar
/// equation the linearization came from:  per mode,
///   d^n/dt^n F(p, t) = ((i p)^n + a^n) F(p, t).
/// The n-th time derivative is taken by an (n+1)-point central difference
/// with a per-mode step h = 1e-2 min(1, 1/(|p|^n + a^n)^{1/n}); returns the
/// max relative mode error over modes carrying at least 1e-8 of the
/// component's spectral mass.
inline double component_equation_check(const VectorSpectralField& phi0, const PropagatorSpec& spec,
                                       std::size_t component) {
    if (component >= phi0.order())
        throw std::invalid_argument("component_equation_check: component index out of range");
    if (spec.method != PropagatorMethod::exact)
        throw std::invalid_argument("component_equation_check: exact method required");
    const int n = spec.order;

    // binomial row for the n-th central difference
    std::vector<double> binom(static_cast<std::size_t>(n) + 1, 1.0);
    for (int k = 1; k <= n; ++k)
        binom[static_cast<std::size_t>(k)] =
            binom[static_cast<std::size_t>(k - 1)] * (n - k + 1) / static_cast<double>(k);

    const SpectralField& ref = phi0.components[0];
    const std::size_t nc = phi0.order();

    double total_mass = 0.0;
    std::vector<double> mode_mass;
    for (long m = ref.min_mode(); m <= ref.max_mode(); ++m) {
        double mass = std::norm(phi0.components[component].mode(m));
        mode_mass.push_back(mass);
        total_mass += mass;
    }
    if (total_mass == 0.0) return 0.0;

    double worst = 0.0;
    std::size_t mi = 0;
    for (long m = ref.min_mode(); m <= ref.max_mode(); ++m, ++mi) {
        if (mode_mass[mi] < 1e-8 * total_mass) continue;
        const double p = ref.frequency(m);

        const double pn = std::pow(std::abs(p), n) + std::pow(spec.a, n);
        const double h = 1e-2 * std::min(1.0, pn > 0.0 ? 1.0 / std::pow(pn, 1.0 / n) : 1.0);
        if (h < 1e-8)
            throw std::domain_error(
                "component_equation_check: stencil step underflow (mode too stiff to difference)");

        std::vector<Cx> v0(nc);
        for (std::size_t c = 0; c < nc; ++c) v0[c] = phi0.components[c].mode(m);

        auto value_at = [&](double time) {
            const CMatrix u = mode_propagator(n, spec.a, p, time, PropagatorMethod::exact);
            Cx acc{0, 0};
            for (std::size_t c = 0; c < nc; ++c) acc += u(component, c) * v0[c];
            return acc;
        };

        Cx diff{0, 0};
        for (int k = 0; k <= n; ++k) {
            const double tk = spec.t + (static_cast<double>(k) - 0.5 * n) * h;
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            diff += sign * binom[static_cast<std::size_t>(k)] * value_at(tk);
        }
        diff /= std::pow(h, n);

        Cx ipn{1, 0};
        for (int s = 0; s < n; ++s) ipn *= Cx{0.0, p};
        const Cx rhs = (ipn + Cx{std::pow(spec.a, n), 0.0}) * value_at(spec.t);

        const double denom = std::max(std::abs(rhs), 1e-30);
        worst = std::max(worst, std::abs(diff - rhs) / denom);
    }
    return worst;
}

} // namespace diracfac
