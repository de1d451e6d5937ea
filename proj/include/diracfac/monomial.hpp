#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "diracfac/gamma.hpp"
#include "diracfac/matrix.hpp"
#include "diracfac/rational.hpp"

namespace diracfac {

/// A fractional-derivative order nu as an exact rational.
struct FracOrder {
    Rational nu;

    FracOrder(long long num, long long den) : nu(num, den) {}
    explicit FracOrder(Rational r) : nu(r) {}
};

/// Finite complex combination  sum_k c_k x^{mu0 + k/q}  on a rational
/// exponent grid with base mu0 > -1 and step 1/q.  This is the domain on
/// which the gamma-ratio derivative rule acts term by term.
class MonomialExpansion {
public:
    MonomialExpansion(Rational base, long long grid_den) : base_(base), grid_den_(grid_den) {
        if (grid_den < 1) throw std::invalid_argument("MonomialExpansion: grid denominator must be >= 1");
        if (base <= Rational(-1)) throw std::domain_error("MonomialExpansion: base exponent must be > -1");
    }

    /// Single term c * x^exponent.
    static MonomialExpansion monomial(Rational exponent, Cx coeff = Cx{1, 0}) {
        MonomialExpansion e(exponent, exponent.den);
        e.add_term(0, coeff);
        return e;
    }

    Rational base() const { return base_; }
    long long grid_den() const { return grid_den_; }
    const std::map<long long, Cx>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Rational exponent_at(long long offset) const {
        return base_ + Rational(offset, grid_den_);
    }

    void add_term(long long offset, Cx coeff) {
        if (offset < 0) throw std::invalid_argument("MonomialExpansion: negative offset");
        if (!is_finite(coeff)) throw std::invalid_argument("MonomialExpansion: non-finite coefficient");
        Cx& c = terms_[offset];
        c += coeff;
        if (c == Cx{0, 0}) terms_.erase(offset);
    }

    MonomialExpansion& operator+=(const MonomialExpansion& other) {
        MonomialExpansion merged = on_common_grid(other);
        for (auto& [off, c] : merged.terms_) add_term_on(merged.base_, merged.grid_den_, off, c);
        return *this;
    }

    MonomialExpansion& operator*=(Cx s) {
        if (s == Cx{0, 0}) {
            terms_.clear();
            return *this;
        }
        for (auto& [off, c] : terms_) c *= s;
        return *this;
    }

    friend MonomialExpansion operator*(Cx s, MonomialExpansion e) { return e *= s; }
    friend MonomialExpansion operator+(MonomialExpansion a, const MonomialExpansion& b) { return a += b; }

    Cx evaluate(double x) const {
        Cx v{0, 0};
        for (auto& [off, c] : terms_) v += c * std::pow(x, exponent_at(off).as_double());
        return v;
    }

    /// Max |coefficient| over all terms.
    double max_coeff() const {
        double m = 0.0;
        for (auto& [off, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Coefficient of x^exponent (zero if the term is absent or off-grid).
    Cx coeff_of(Rational exponent) const {
        const Rational delta = exponent - base_;
        if (grid_den_ % delta.den != 0) return Cx{0, 0};
        const long long scaled_num = delta.num * (grid_den_ / delta.den);
        if (scaled_num < 0) return Cx{0, 0};
        auto it = terms_.find(scaled_num);
        return it == terms_.end() ? Cx{0, 0} : it->second;
    }

private:
    // Re-express other's terms on a grid that also fits *this (updates *this
    // base/grid if needed) and return other regridded.
    MonomialExpansion on_common_grid(const MonomialExpansion& other) {
        const long long q = std::lcm(grid_den_, other.grid_den_);
        // common base: the smaller of the two bases so offsets stay >= 0
        const Rational new_base = std::min(base_, other.base_);
        regrid(new_base, q);
        MonomialExpansion o = other;
        o.regrid(new_base, q);
        return o;
    }

    void regrid(Rational new_base, long long q) {
        if (q % grid_den_ != 0)
            throw std::invalid_argument("MonomialExpansion: incompatible grid refinement");
        std::map<long long, Cx> moved;
        for (auto& [off, c] : terms_) {
            const Rational expo = exponent_at(off);
            const Rational delta = expo - new_base;
            // delta = m / q exactly by construction
            moved[delta.num * (q / delta.den)] = c;
        }
        base_ = new_base;
        grid_den_ = q;
        terms_ = std::move(moved);
    }

    void add_term_on(Rational b, long long q, long long off, Cx c) {
        const Rational expo = b + Rational(off, q);
        const Rational delta = expo - base_;
        add_term(delta.num * (grid_den_ / delta.den), c);
    }

    Rational base_;
    long long grid_den_;
    std::map<long long, Cx> terms_;
};

/// Riemann-Liouville derivative of order nu on a monomial expansion:
/// term by term,
///   x^mu  ->  [Gamma(mu+1) / Gamma(mu-nu+1)] x^{mu-nu},
/// extended by continuity in 1/Gamma: a pole in the denominator makes the
/// coefficient an exact zero (this is how constants are annihilated by the
/// half-derivative applied twice).  A nonzero term landing at an exponent
/// <= -1 is a domain error.  `poles_hit`, when given, counts the terms the
/// pole convention zeroed out, so callers can flag that the convention fired.
inline MonomialExpansion frac_deriv(const MonomialExpansion& expansion, const FracOrder& order,
                                    std::size_t* poles_hit = nullptr) {
    const Rational nu = order.nu;
    const long long q = std::lcm(expansion.grid_den(), nu.den);

    Rational out_base = expansion.base() - nu;
    bool have_base = false;
    std::map<Rational, Cx> out_terms; // exponent -> coefficient

    for (auto& [off, c] : expansion.terms()) {
        const Rational mu = expansion.exponent_at(off);
        const Rational denom_arg = mu - nu + Rational(1);
        if (denom_arg.is_integer() && denom_arg.num <= 0) { // 1/Gamma pole: exact zero
            if (poles_hit) ++*poles_hit;
            continue;
        }
        const Rational target = mu - nu;
        if (target <= Rational(-1))
            throw std::domain_error("frac_deriv: exponent underflow (result exponent <= -1)");
        const double ratio = gamma_fn(mu.as_double() + 1.0) / gamma_fn(denom_arg.as_double());
        out_terms[target] = c * ratio;
        if (!have_base || target < out_base) {
            out_base = target;
            have_base = true;
        }
    }

    if (!have_base) return MonomialExpansion(Rational(0), q); // everything was annihilated
    MonomialExpansion out(out_base, q);
    for (auto& [expo, c] : out_terms) {
        const Rational delta = expo - out_base;
        out.add_term(delta.num * (q / delta.den), c);
    }
    return out;
}

} // namespace diracfac
