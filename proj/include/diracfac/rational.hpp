#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace diracfac {

/// Exact rational on 64-bit integers, always normalized (den > 0, gcd 1).
/// Used for the exponent grids of monomial expansions, where pole detection
/// must be exact rather than floating.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;

    Rational(long long n, long long d = 1) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const long long g = std::gcd(n < 0 ? -n : n, d);
        num = g ? n / g : 0;
        den = g ? d / g : 1;
    }

    bool is_integer() const { return den == 1; }
    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
    friend Rational operator-(Rational a) { return Rational(-a.num, a.den); }

    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(Rational a, Rational b) { return b < a; }
    friend bool operator>=(Rational a, Rational b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace diracfac
