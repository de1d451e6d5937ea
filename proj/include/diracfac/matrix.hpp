#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace diracfac {

using Cx = std::complex<double>;

inline bool is_finite(Cx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense row-major complex matrix.  Everything in this library lives at desk
/// scale (dimensions of a few to a few dozen), so there is no sparsity, no
/// decompositions, just plain value-semantic arithmetic.
class CMatrix {
public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Cx{0.0, 0.0}) {}

    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Cx{1.0, 0.0};
        return m;
    }

    /// Builds from a row-major entry list.  Rejects size mismatches and
    /// non-finite entries (the one place raw data enters the library).
    static CMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Cx> entries) {
        if (entries.size() != rows * cols)
            throw std::invalid_argument("CMatrix: entry count does not match rows*cols");
        for (Cx z : entries)
            if (!is_finite(z)) throw std::invalid_argument("CMatrix: non-finite entry");
        CMatrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.entries_ = std::move(entries);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Cx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    Cx operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Cx>& entries() const { return entries_; }

    bool same_shape(const CMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    CMatrix& operator+=(const CMatrix& other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
        return *this;
    }

    CMatrix& operator-=(const CMatrix& other) {
        require_same_shape(other);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
        return *this;
    }

    CMatrix& operator*=(Cx s) {
        for (Cx& z : entries_) z *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(Cx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(CMatrix a, Cx s) { return a *= s; }

private:
    void require_same_shape(const CMatrix& other) const {
        if (!same_shape(other))
            throw std::invalid_argument("CMatrix: shape mismatch in elementwise operation");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cx> entries_;
};

inline CMatrix mat_mul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions do not match");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Cx aik = a(i, k);
            if (aik == Cx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mat_mul(a, b); }

/// a*b - b*a for square matrices of equal dimension.
inline CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("commutator: requires square matrices of equal dimension");
    return mat_mul(a, b) - mat_mul(b, a);
}

inline CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("anticommutator: requires square matrices of equal dimension");
    return mat_mul(a, b) + mat_mul(b, a);
}

inline double frobenius_norm(const CMatrix& a) {
    double s = 0.0;
    for (Cx z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

/// Non-negative integer matrix power by repeated multiplication; the
/// exponents here never exceed single digits.
inline CMatrix mat_pow(const CMatrix& a, unsigned n) {
    if (!a.is_square()) throw std::invalid_argument("mat_pow: requires a square matrix");
    CMatrix r = CMatrix::identity(a.rows());
    for (unsigned i = 0; i < n; ++i) r = mat_mul(r, a);
    return r;
}

/// Matrix exponential by scaling-and-squaring: halve until the Frobenius
/// norm is <= 0.5, run the Taylor series to machine tail, square back up.
inline CMatrix mat_exp(const CMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("mat_exp: requires a square matrix");
    const std::size_t n = a.rows();

    int squarings = 0;
    double scale = 1.0;
    const double norm = frobenius_norm(a);
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }

    CMatrix x = a;
    x *= Cx{scale, 0.0};

    CMatrix sum = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    for (int k = 1; k <= 40; ++k) {
        term = mat_mul(term, x);
        term *= Cx{1.0 / k, 0.0};
        sum += term;
        if (frobenius_norm(term) <= 1e-20 * frobenius_norm(sum)) break;
    }

    for (int i = 0; i < squarings; ++i) sum = mat_mul(sum, sum);
    return sum;
}

/// max_ij |a_ij - b_ij|
inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b))
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

} // namespace diracfac
