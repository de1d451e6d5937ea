#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "diracfac/matrix.hpp"
#include "diracfac/roots.hpp"

namespace diracfac {

enum class FamilyName { sigma, quaternion, lambda, phi, chi, tau };

inline std::string to_string(FamilyName name) {
    switch (name) {
        case FamilyName::sigma: return "sigma";
        case FamilyName::quaternion: return "quaternion";
        case FamilyName::lambda: return "lambda";
        case FamilyName::phi: return "phi";
        case FamilyName::chi: return "chi";
        case FamilyName::tau: return "tau";
    }
    throw std::invalid_argument("unknown family name");
}

inline FamilyName family_from_string(const std::string& s) {
    if (s == "sigma") return FamilyName::sigma;
    if (s == "quaternion") return FamilyName::quaternion;
    if (s == "lambda") return FamilyName::lambda;
    if (s == "phi") return FamilyName::phi;
    if (s == "chi") return FamilyName::chi;
    if (s == "tau") return FamilyName::tau;
    throw std::invalid_argument("unknown family name: " + s);
}

/// A named, ordered set of d x d matrices with a declared factorization
/// order n.  Every member M satisfies M^n = I, except the quaternion units
/// which satisfy M^2 = -I.
struct FactorFamily {
    FamilyName name;
    int order = 0;
    std::size_t dim = 0;
    std::vector<CMatrix> members;
};

// -- Pauli matrices and the 2x2 blocks of the quartic family ----------------

inline CMatrix pauli(int j) {
    switch (j) {
        case 1:
            return CMatrix::from_entries(2, 2, {Cx{0, 0}, Cx{1, 0}, Cx{1, 0}, Cx{0, 0}});
        case 2:
            return CMatrix::from_entries(2, 2, {Cx{0, 0}, Cx{0, -1}, Cx{0, 1}, Cx{0, 0}});
        case 3:
            return CMatrix::from_entries(2, 2, {Cx{1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{-1, 0}});
        default:
            throw std::invalid_argument("pauli: index must be 1, 2, or 3");
    }
}

inline CMatrix sigma_plus() {
    return CMatrix::from_entries(2, 2, {Cx{0, 0}, Cx{1, 0}, Cx{0, 0}, Cx{0, 0}});
}

inline CMatrix sigma_minus() {
    return CMatrix::from_entries(2, 2, {Cx{0, 0}, Cx{0, 0}, Cx{1, 0}, Cx{0, 0}});
}

inline CMatrix s_block() {
    return CMatrix::from_entries(2, 2, {Cx{0, -1}, Cx{0, 0}, Cx{0, 0}, Cx{1, 0}});
}

/// Assembles [[a, b], [c, d]] from 2x2 blocks into a 4x4 matrix.
inline CMatrix block_2x2(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
    CMatrix m(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = a(i, j);
            m(i, j + 2) = b(i, j);
            m(i + 2, j) = c(i, j);
            m(i + 2, j + 2) = d(i, j);
        }
    return m;
}

// -- The general two-member construction for arbitrary n --------------------

/// First general factor: the n-cycle with unit entries (row r feeds from
/// row r+1, corner wraps around).
inline CMatrix tau1(int n) {
    CMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r + 1 < n; ++r) m(r, r + 1) = Cx{1, 0};
    m(n - 1, 0) = Cx{1, 0};
    return m;
}

/// Second general factor: same cycle with the k-th root of unity in row k.
/// For even n the whole matrix carries an extra phase exp(i pi / n); this is
/// what closes the n-th power back to +I (the root product is -1 for even n)
/// and it reproduces sigma_2 at n = 2 and the quartic chi_2 at n = 4.
inline CMatrix tau2(int n) {
    const UnityRoots eps = unity_roots(n);
    CMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int r = 0; r + 1 < n; ++r) m(r, r + 1) = eps.root(r + 1);
    m(n - 1, 0) = eps.root(0);
    if (n % 2 == 0) {
        const double angle = kPi / n;
        m *= Cx{std::cos(angle), std::sin(angle)};
    }
    return m;
}

// -- Family construction -----------------------------------------------------

/// Builds one of the displayed factor families.  `n` is consulted only for
/// tau (the general construction); it must be >= 2 there.
inline FactorFamily build_family(FamilyName name, int n = 0) {
    FactorFamily f;
    f.name = name;
    switch (name) {
        case FamilyName::sigma: {
            f.order = 2;
            f.dim = 2;
            f.members = {pauli(1), pauli(2), pauli(3)};
            return f;
        }
        case FamilyName::quaternion: {
            // -i sigma_j: the sign that closes i j k = -I with the standard
            // sigma_2 convention (+i sigma_j lands on the mirror algebra
            // with i j k = +I).
            f.order = 2;
            f.dim = 2;
            const Cx mi{0, -1};
            f.members = {mi * pauli(1), mi * pauli(2), mi * pauli(3)};
            return f;
        }
        case FamilyName::lambda: {
            const UnityRoots eps = unity_roots(3);
            const Cx e0 = eps.root(0), e1 = eps.root(1), e2 = eps.root(2);
            const Cx z{0, 0};
            f.order = 3;
            f.dim = 3;
            f.members = {
                CMatrix::from_entries(3, 3, {z, e0, z, z, z, e0, e0, z, z}),
                CMatrix::from_entries(3, 3, {z, e1, z, z, z, e2, e0, z, z}),
                CMatrix::from_entries(3, 3, {e1, z, z, z, e2, z, z, z, e0}),
            };
            return f;
        }
        case FamilyName::phi: {
            const UnityRoots eps = unity_roots(3);
            const Cx e1 = eps.root(1), e2 = eps.root(2);
            const Cx z{0, 0}, one{1, 0};
            f.order = 3;
            f.dim = 3;
            f.members = {
                CMatrix::from_entries(3, 3, {z, z, e1, e2, z, z, z, one, z}),
                CMatrix::from_entries(3, 3, {z, z, one, one, z, z, z, one, z}),
                CMatrix::from_entries(3, 3, {e2, z, z, z, e1, z, z, z, one}),
            };
            return f;
        }
        case FamilyName::chi: {
            const CMatrix sp = sigma_plus(), sm = sigma_minus(), s = s_block();
            const CMatrix z2(2, 2);
            const Cx i{0, 1};
            const double angle = kPi / 4.0;
            const Cx phase{std::cos(angle), std::sin(angle)};
            f.order = 4;
            f.dim = 4;
            f.members = {
                block_2x2(sp, sm, sm, sp),
                phase * block_2x2(i * sp, Cx{-1, 0} * sm, sm, -i * sp),
                block_2x2(z2, s, Cx{-1, 0} * s, z2),
            };
            return f;
        }
        case FamilyName::tau: {
            if (n < 2) throw std::invalid_argument("build_family: tau requires n >= 2");
            f.order = n;
            f.dim = static_cast<std::size_t>(n);
            f.members = {tau1(n), tau2(n)};
            return f;
        }
    }
    throw std::invalid_argument("build_family: unknown family name");
}

/// Frobenius residual of the defining power identity for each member:
/// ||M^n - I|| in general, ||M^2 + I|| for the quaternion units.
inline std::vector<double> member_power_residuals(const FactorFamily& f) {
    std::vector<double> out;
    out.reserve(f.members.size());
    const CMatrix id = CMatrix::identity(f.dim);
    for (const CMatrix& m : f.members) {
        if (f.name == FamilyName::quaternion)
            out.push_back(frobenius_norm(mat_pow(m, 2) + id));
        else
            out.push_back(frobenius_norm(mat_pow(m, static_cast<unsigned>(f.order)) - id));
    }
    return out;
}

/// Max Frobenius residual over the four quaternion identities
/// i^2 = j^2 = k^2 = ijk = -I.
inline double quaternion_family_check() {
    const FactorFamily q = build_family(FamilyName::quaternion);
    const CMatrix id = CMatrix::identity(2);
    double worst = 0.0;
    for (const CMatrix& m : q.members)
        worst = std::max(worst, frobenius_norm(mat_pow(m, 2) + id));
    const CMatrix ijk = q.members[0] * q.members[1] * q.members[2];
    worst = std::max(worst, frobenius_norm(ijk + id));
    return worst;
}

} // namespace diracfac
