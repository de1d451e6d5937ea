#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracfac/families.hpp"
#include "diracfac/gamma.hpp"
#include "diracfac/monomial.hpp"

namespace diracfac {

enum class OperatorKind { half, third };

/// Matrix of first-order fractional symbols: entry (i, j) acts on a monomial
/// expansion f as  deriv_coeff(i,j) * D^nu f + scalar_coeff(i,j) * f, with one
/// shared derivative order nu.  This carries the n-th-root operators
///   O_1/2 = D^1/2 sigma_j + sqrt(a) sigma_k     (2x2)
///   O_1/3 = D^1/3 lambda_1 + cbrt(a) lambda_2   (3x3)
/// in operator form; evaluation mode substitutes the image of the constant
/// function, D^nu 1 = x^{-nu} / Gamma(1 - nu), to reproduce the displayed
/// numeric matrices at a given x.
struct OperatorMatrix {
    std::size_t dim = 0;
    FracOrder nu{1, 2};
    CMatrix deriv_coeff;
    CMatrix scalar_coeff;
};

inline OperatorMatrix assemble_operator(OperatorKind kind, double a, int j = 3, int k = 2) {
    if (a < 0.0) throw std::domain_error("assemble_operator: a must be >= 0");
    OperatorMatrix op;
    if (kind == OperatorKind::half) {
        if (j == k) throw std::invalid_argument("assemble_operator: Pauli indices must differ");
        if (j < 1 || j > 3 || k < 1 || k > 3)
            throw std::invalid_argument("assemble_operator: Pauli indices must be in 1..3");
        op.dim = 2;
        op.nu = FracOrder{1, 2};
        op.deriv_coeff = pauli(j);
        op.scalar_coeff = Cx{std::sqrt(a), 0} * pauli(k);
    } else {
        const FactorFamily lam = build_family(FamilyName::lambda);
        op.dim = 3;
        op.nu = FracOrder{1, 3};
        op.deriv_coeff = lam.members[0];
        op.scalar_coeff = Cx{std::cbrt(a), 0} * lam.members[1];
    }
    return op;
}

/// Evaluation mode: D^nu replaced by its image on the constant function,
/// x^{-nu} / Gamma(1 - nu), at a fixed x > 0.  Not an operator identity;
/// never mixed with apply_operator in one computation.
inline CMatrix evaluate_operator(const OperatorMatrix& op, double x) {
    if (x <= 0.0) throw std::domain_error("evaluate_operator: requires x > 0");
    const double nu = op.nu.nu.as_double();
    const double image = std::pow(x, -nu) / gamma_fn(1.0 - nu);
    return Cx{image, 0} * op.deriv_coeff + op.scalar_coeff;
}

/// Operator mode: componentwise action on a vector of monomial expansions.
inline std::vector<MonomialExpansion> apply_operator(const OperatorMatrix& op,
                                                     const std::vector<MonomialExpansion>& field,
                                                     std::size_t* poles_hit = nullptr) {
    if (field.size() != op.dim)
        throw std::invalid_argument("apply_operator: field size must equal operator dimension");
    std::vector<MonomialExpansion> out;
    out.reserve(op.dim);
    for (std::size_t i = 0; i < op.dim; ++i) {
        MonomialExpansion acc(Rational(0), 1);
        for (std::size_t j = 0; j < op.dim; ++j) {
            const Cx dc = op.deriv_coeff(i, j);
            const Cx sc = op.scalar_coeff(i, j);
            if (dc != Cx{0, 0} && !field[j].empty())
                acc += dc * frac_deriv(field[j], op.nu, poles_hit);
            if (sc != Cx{0, 0} && !field[j].empty()) acc += sc * field[j];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

/// Applies the operator form n times to the field (x^mu, ..., x^mu) and
/// compares componentwise with (d/dx + a) x^mu = mu x^{mu-1} + a x^mu.
/// Returns the max relative coefficient error over components, test
/// exponents, and grid exponents.
inline double operator_power_check(OperatorKind kind, double a, int n,
                                   const std::vector<Rational>& test_exponents,
                                   std::size_t* poles_hit = nullptr) {
    const int expected_n = (kind == OperatorKind::half) ? 2 : 3;
    if (n != expected_n)
        throw std::invalid_argument("operator_power_check: n must match the operator kind");
    const OperatorMatrix op = assemble_operator(kind, a);

    double worst = 0.0;
    for (const Rational& mu : test_exponents) {
        if (mu <= Rational(-1))
            throw std::domain_error("operator_power_check: test exponent must be > -1");

        std::vector<MonomialExpansion> field(op.dim, MonomialExpansion::monomial(mu));
        for (int s = 0; s < n; ++s) field = apply_operator(op, field, poles_hit);

        MonomialExpansion expected(Rational(0), 1);
        if (mu != Rational(0))
            expected += MonomialExpansion::monomial(mu - Rational(1), Cx{mu.as_double(), 0});
        if (a != 0.0) expected += MonomialExpansion::monomial(mu, Cx{a, 0});

        const double scale = std::max(expected.max_coeff(), 1e-300);
        for (const MonomialExpansion& comp : field) {
            // every expected term must be matched
            for (auto& [off, want] : expected.terms()) {
                const Cx got = comp.coeff_of(expected.exponent_at(off));
                worst = std::max(worst, std::abs(got - want) / scale);
            }
            // and nothing else may survive
            for (auto& [off, got] : comp.terms()) {
                const Cx want = expected.coeff_of(comp.exponent_at(off));
                if (want == Cx{0, 0}) worst = std::max(worst, std::abs(got) / scale);
            }
        }
    }
    return worst;
}

} // namespace diracfac
