#include <catch2/catch.hpp>

#include <cmath>

#include "diracfac/frac_operator.hpp"
#include "diracfac/gamma.hpp"
#include "diracfac/monomial.hpp"
#include "diracfac/random.hpp"

using namespace diracfac;

namespace {

// Test-local Simpson rule; deliberately independent of the library's
// quadrature machinery.
template <class F>
double simpson(F&& f, double a, double b, int intervals) {
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

// Gamma(2/3) oracle: int_0^inf t^{-1/3} e^{-t} dt with the singular piece
// regularized by t = u^3.
double gamma_two_thirds_oracle() {
    const double head = simpson([](double u) { return 3.0 * u * std::exp(-u * u * u); }, 0.0, 1.0, 20000);
    const double tail =
        simpson([](double t) { return std::pow(t, -1.0 / 3.0) * std::exp(-t); }, 1.0, 60.0, 200000);
    return head + tail;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST_CASE("gamma classical values") {
    CHECK(rel_err(gamma_fn(0.5), std::sqrt(kPi)) <= 1e-15);
    CHECK(rel_err(gamma_fn(5.0), 24.0) <= 1e-14);
    CHECK(rel_err(gamma_fn(10.0), 362880.0) <= 1e-14);
    CHECK(rel_err(gamma_fn(1.5), 0.88622692545275801365) <= 1e-14);
    CHECK(rel_err(gamma_fn(1.0 / 3.0), 2.6789385347077476337) <= 1e-14);
    // reflection below 1/2
    CHECK(rel_err(gamma_fn(-0.5), -2.0 * std::sqrt(kPi)) <= 1e-14);
}

TEST_CASE("gamma(2/3) against the quadrature oracle") {
    const double oracle = gamma_two_thirds_oracle();
    CHECK(rel_err(gamma_fn(2.0 / 3.0), oracle) <= 1e-12);
    CHECK(rel_err(gamma_fn(2.0 / 3.0), 1.3541179394264004169) <= 1e-14);
}

TEST_CASE("gamma relative accuracy across (0, 30]") {
    for (int i = 1; i <= 300; ++i) {
        const double x = 0.1 * i;
        if (is_gamma_pole(x)) continue;
        CHECK(rel_err(gamma_fn(x), std::tgamma(x)) <= 1e-13);
    }
}

TEST_CASE("gamma poles raise the dedicated signal") {
    CHECK_THROWS_AS(gamma_fn(0.0), GammaPoleError);
    CHECK_THROWS_AS(gamma_fn(-3.0), GammaPoleError);
    CHECK(is_gamma_pole(-2.0));
    CHECK_FALSE(is_gamma_pole(-2.5));
    CHECK(rel_err(log_gamma(101.0), std::lgamma(101.0)) <= 1e-14);
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
}

TEST_CASE("frac_deriv on displayed examples") {
    const FracOrder half{1, 2};

    // D^{1/2} 1 = x^{-1/2} / sqrt(pi)
    const MonomialExpansion one = MonomialExpansion::monomial(Rational(0));
    const MonomialExpansion d_half = frac_deriv(one, half);
    REQUIRE(d_half.terms().size() == 1);
    CHECK(d_half.base() == Rational(-1, 2));
    CHECK(std::abs(d_half.coeff_of(Rational(-1, 2)) - Cx{1.0 / std::sqrt(kPi), 0}) <= 1e-15);
    CHECK(std::abs(d_half.coeff_of(Rational(-1, 2)).real() - 0.5641895835477563) <= 1e-15);

    // D^{1/3} 1 = x^{-1/3} / Gamma(2/3)
    const MonomialExpansion d_third = frac_deriv(one, FracOrder{1, 3});
    CHECK(std::abs(d_third.coeff_of(Rational(-1, 3)) - Cx{1.0 / gamma_fn(2.0 / 3.0), 0}) <= 1e-15);

    // integer order reduces to the classical derivative
    const MonomialExpansion x2 = MonomialExpansion::monomial(Rational(2));
    const MonomialExpansion dx2 = frac_deriv(x2, FracOrder{1, 1});
    CHECK(std::abs(dx2.coeff_of(Rational(1)) - Cx{2, 0}) <= 1e-15);

    // half derivative applied twice to x gives exactly 1
    const MonomialExpansion x1 = MonomialExpansion::monomial(Rational(1));
    const MonomialExpansion dd = frac_deriv(frac_deriv(x1, half), half);
    REQUIRE(dd.terms().size() == 1);
    CHECK(std::abs(dd.coeff_of(Rational(0)) - Cx{1, 0}) <= 1e-14);

    // constants are annihilated through the denominator pole
    const MonomialExpansion dd0 = frac_deriv(frac_deriv(one, half), half);
    CHECK(dd0.empty());

    // a nonzero term landing at exponent <= -1 is a domain error
    const MonomialExpansion shallow = MonomialExpansion::monomial(Rational(-1, 2));
    CHECK_THROWS_AS(frac_deriv(shallow, FracOrder{3, 4}), std::domain_error);
}

TEST_CASE("frac_deriv semigroup property away from poles") {
    SplitMix64 rng(5);
    int tested = 0;
    while (tested < 50) {
        const long long mu_num = static_cast<long long>(rng.next_unit() * 46) - 10; // mu in (-10/12, 3)
        const long long n1 = 1 + static_cast<long long>(rng.next_unit() * 11);
        const long long n2 = 1 + static_cast<long long>(rng.next_unit() * 11);
        const Rational mu(mu_num, 12), nu1(n1, 12), nu2(n2, 12);
        if (mu <= Rational(-1) || !(mu - nu1 - nu2 > Rational(-1))) continue;
        // skip draws whose intermediate or final gamma-ratio hits a pole
        const Rational mid = mu - nu1 + Rational(1);
        const Rational fin = mu - nu1 - nu2 + Rational(1);
        if ((mid.is_integer() && mid.num <= 0) || (fin.is_integer() && fin.num <= 0)) continue;
        ++tested;

        const MonomialExpansion f = MonomialExpansion::monomial(mu);
        const MonomialExpansion two_step = frac_deriv(frac_deriv(f, FracOrder{nu1}), FracOrder{nu2});
        const MonomialExpansion one_step = frac_deriv(f, FracOrder{nu1 + nu2});

        REQUIRE(two_step.terms().size() == 1);
        REQUIRE(one_step.terms().size() == 1);
        const Cx a = two_step.coeff_of(mu - nu1 - nu2);
        const Cx b = one_step.coeff_of(mu - nu1 - nu2);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    }
}

TEST_CASE("frac_deriv linearity") {
    SplitMix64 rng(8);
    const Cx alpha = rng.next_in_disk(2.0), beta = rng.next_in_disk(2.0);
    MonomialExpansion f = MonomialExpansion::monomial(Rational(1, 2), Cx{1, 0});
    f.add_term(3, Cx{0.5, -0.25}); // + c x^{1/2 + 3/2} on the q=2 grid
    const MonomialExpansion g = MonomialExpansion::monomial(Rational(2), Cx{-1, 2});

    const FracOrder nu{1, 3};
    const MonomialExpansion lhs = frac_deriv(alpha * f + beta * g, nu);
    const MonomialExpansion rhs = alpha * frac_deriv(f, nu) + beta * frac_deriv(g, nu);
    for (auto& [off, c] : rhs.terms()) {
        CHECK(std::abs(lhs.coeff_of(rhs.exponent_at(off)) - c) <= 1e-14);
    }
}

TEST_CASE("frac_deriv integer orders match falling factorials") {
    for (const Rational mu : {Rational(1, 2), Rational(2), Rational(37, 10)}) {
        for (int m = 1; m <= 3; ++m) {
            if (mu - Rational(m) <= Rational(-1)) continue;
            const MonomialExpansion d =
                frac_deriv(MonomialExpansion::monomial(mu), FracOrder{m, 1});
            double falling = 1.0;
            for (int i = 0; i < m; ++i) falling *= mu.as_double() - i;
            CHECK(std::abs(d.coeff_of(mu - Rational(m)).real() - falling) <=
                  1e-13 * std::abs(falling));
        }
    }
}

TEST_CASE("assemble_operator reproduces the displayed matrices") {
    // O_1/2 with (j,k) = (3,2), a = 1, x = 1:
    //   (1/sqrt(pi)) [[1, -i sqrt(pi)], [i sqrt(pi), -1]]
    const OperatorMatrix o32 = assemble_operator(OperatorKind::half, 1.0, 3, 2);
    const CMatrix m = evaluate_operator(o32, 1.0);
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    CHECK(std::abs(m(0, 0) - Cx{inv_sqrt_pi, 0}) <= 1e-15);
    CHECK(std::abs(m(0, 1) - Cx{0, -1}) <= 1e-15);
    CHECK(std::abs(m(1, 0) - Cx{0, 1}) <= 1e-15);
    CHECK(std::abs(m(1, 1) + Cx{inv_sqrt_pi, 0}) <= 1e-15);

    // O_1/2 with (j,k) = (1,2), a = 0: (1/sqrt(pi x)) [[0,1],[1,0]]
    const OperatorMatrix o12 = assemble_operator(OperatorKind::half, 0.0, 1, 2);
    const CMatrix m2 = evaluate_operator(o12, 2.0);
    const double w = 1.0 / std::sqrt(kPi * 2.0);
    CHECK(std::abs(m2(0, 0)) == 0.0);
    CHECK(std::abs(m2(0, 1) - Cx{w, 0}) <= 1e-15);
    CHECK(std::abs(m2(1, 0) - Cx{w, 0}) <= 1e-15);

    // O_1/3 with a = 1, x = 1: entries 1/Gamma(2/3) + eps_m in the displayed
    // positions
    const OperatorMatrix o3 = assemble_operator(OperatorKind::third, 1.0);
    const CMatrix m3 = evaluate_operator(o3, 1.0);
    const UnityRoots eps = unity_roots(3);
    const double g23 = 1.0 / gamma_fn(2.0 / 3.0);
    CHECK(std::abs(m3(0, 1) - (Cx{g23, 0} + eps.root(1))) <= 1e-15);
    CHECK(std::abs(m3(1, 2) - (Cx{g23, 0} + eps.root(2))) <= 1e-15);
    CHECK(std::abs(m3(2, 0) - (Cx{g23 + 1.0, 0})) <= 1e-15);
    CHECK(std::abs(m3(0, 0)) == 0.0);

    CHECK_THROWS_AS(assemble_operator(OperatorKind::half, 1.0, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(assemble_operator(OperatorKind::half, -1.0), std::domain_error);
    CHECK_THROWS_AS(evaluate_operator(o3, 0.0), std::domain_error);
}

TEST_CASE("operator_power_check: the matrix root squares back to d/dx + a") {
    const std::vector<Rational> exponents = {Rational(1, 2), Rational(1), Rational(2),
                                             Rational(37, 10)};
    CHECK(operator_power_check(OperatorKind::half, 0.0, 2, exponents) <= 1e-12);
    CHECK(operator_power_check(OperatorKind::half, 1.0, 2, exponents) <= 1e-12);
    CHECK(operator_power_check(OperatorKind::third, 0.0, 3, exponents) <= 1e-12);
    CHECK(operator_power_check(OperatorKind::third, 2.0, 3, exponents) <= 1e-12);

    // sqrt(d/dx) applied twice to x is exactly d/dx x = 1
    CHECK(operator_power_check(OperatorKind::half, 0.0, 2, {Rational(1)}) <= 1e-14);
    // and the constant is annihilated through the Gamma(0) pole, which is
    // counted so callers can flag the convention
    std::size_t poles = 0;
    CHECK(operator_power_check(OperatorKind::half, 0.0, 2, {Rational(0)}, &poles) == 0.0);
    CHECK(poles > 0);
    // cubic case with a shift, mu = 1/3
    CHECK(operator_power_check(OperatorKind::third, 2.0, 3, {Rational(1, 3)}) <= 1e-12);

    CHECK_THROWS_AS(operator_power_check(OperatorKind::half, 0.0, 3, {Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("monomial expansion guards") {
    CHECK_THROWS_AS(MonomialExpansion(Rational(-3, 2), 2), std::domain_error);
    CHECK_THROWS_AS(MonomialExpansion(Rational(0), 0), std::invalid_argument);
    MonomialExpansion e(Rational(0), 2);
    CHECK_THROWS_AS(e.add_term(-1, Cx{1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(e.add_term(0, Cx{std::nan(""), 0}), std::invalid_argument);

    // evaluate: x^{1/2} + 2 x at x = 4 is 2 + 8
    MonomialExpansion f = MonomialExpansion::monomial(Rational(1, 2));
    f.add_term(1, Cx{2, 0});
    CHECK(std::abs(f.evaluate(4.0) - Cx{10, 0}) <= 1e-13);
}
