#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diracfac/families.hpp"
#include "diracfac/json.hpp"
#include "diracfac/random.hpp"
#include "diracfac/words.hpp"

namespace diracfac {

/// One named identity with its residual.  `expect_large` inverts the pass
/// sense (used for the commutator-output triple, which must FAIL the word
/// identities); `required = false` marks checks that are reported but do not
/// gate the verdict.
struct IdentityCheck {
    std::string name;
    double residual = 0.0;
    double threshold = 1e-10;
    bool required = true;
    bool expect_large = false;

    bool ok() const { return expect_large ? residual > threshold : residual <= threshold; }
};

struct FamilyReport {
    FamilyName family;
    int order = 0;
    std::vector<IdentityCheck> identities;
    int trials = 0;
    std::uint64_t seed = 0;
    bool passed = false;

    void finalize() {
        passed = true;
        for (const IdentityCheck& c : identities)
            if (c.required && !c.ok()) passed = false;
    }
};

namespace detail {

inline std::string member_label(FamilyName family, std::size_t idx, int n) {
    if (family == FamilyName::quaternion) {
        const char* q[] = {"i", "j", "k"};
        return q[idx];
    }
    std::string base = to_string(family) + std::to_string(idx + 1);
    if (family == FamilyName::tau) base = "tau" + std::to_string(idx + 1) + "(" + std::to_string(n) + ")";
    return base;
}

/// Max residual of the two-term factorization over seeded random complex
/// coefficient draws with |c| <= 2.
inline double random_factorization_residual(const std::vector<CMatrix>& members, int n, int trials,
                                            SplitMix64& rng) {
    double worst = 0.0;
    for (int s = 0; s < trials; ++s) {
        std::vector<Cx> coeffs;
        coeffs.reserve(members.size());
        for (std::size_t m = 0; m < members.size(); ++m) coeffs.push_back(rng.next_in_disk(2.0));
        worst = std::max(worst, check_factorization(members, n, coeffs));
    }
    return worst;
}

inline void append_power_and_word_checks(FamilyReport& rep, const FactorFamily& fam, int n) {
    const std::vector<double> powers = member_power_residuals(fam);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        const std::string rhs = fam.name == FamilyName::quaternion ? "=-I" : "=I";
        rep.identities.push_back({member_label(fam.name, i, n) + "^" + std::to_string(fam.order) + rhs,
                                  powers[i], 1e-12});
    }
    for (const WordIdentityResidual& w : check_word_identities(fam, fam.order)) {
        const std::size_t a = static_cast<std::size_t>(fam.order) - w.copies_of_k;
        std::string name = "words(" + member_label(fam.name, w.j, n) + "^" + std::to_string(a) + "," +
                           member_label(fam.name, w.k, n) + "^" + std::to_string(w.copies_of_k) + ")";
        rep.identities.push_back({std::move(name), w.residual, 1e-12});
    }
}

} // namespace detail

/// Runs the identity suite for one family and returns the report.
/// `n` is consulted for tau only; `override_tol`, when positive, replaces
/// every pass threshold (floored at 1e-15) except the inverted rejection
/// check, whose threshold stays at 1e-6.
inline FamilyReport verify_family(FamilyName name, int n = 3, int trials = 100,
                                  std::uint64_t seed = 42, double override_tol = 0.0) {
    const FactorFamily fam = build_family(name, n);
    SplitMix64 rng(seed);
    FamilyReport rep;
    rep.family = name;
    rep.order = fam.order;
    rep.trials = trials;
    rep.seed = seed;

    detail::append_power_and_word_checks(rep, fam, n);

    switch (name) {
        case FamilyName::sigma: {
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t k = j + 1; k < 3; ++k) {
                    const double r = detail::random_factorization_residual(
                        {fam.members[j], fam.members[k]}, 2, trials, rng);
                    rep.identities.push_back({"factor2(sigma" + std::to_string(j + 1) + ",sigma" +
                                                  std::to_string(k + 1) + ")",
                                              r, 1e-10});
                }
            const double r3 = detail::random_factorization_residual(fam.members, 2, trials, rng);
            rep.identities.push_back({"factor3(sigma1,sigma2,sigma3)", r3, 1e-10});
            break;
        }
        case FamilyName::quaternion: {
            const CMatrix id = CMatrix::identity(2);
            const char* labels[] = {"i^2=-I", "j^2=-I", "k^2=-I"};
            for (std::size_t m = 0; m < 3; ++m)
                rep.identities.push_back({labels[m], frobenius_norm(mat_pow(fam.members[m], 2) + id), 1e-14});
            rep.identities.push_back(
                {"ijk=-I", frobenius_norm(fam.members[0] * fam.members[1] * fam.members[2] + id), 1e-14});
            double worst = 0.0;
            for (int s = 0; s < trials; ++s) {
                const double a = 4.0 * rng.next_unit() - 2.0;
                const double b = 4.0 * rng.next_unit() - 2.0;
                const double c = 4.0 * rng.next_unit() - 2.0;
                const CMatrix q = Cx{a, 0} * fam.members[0] + Cx{b, 0} * fam.members[1] +
                                  Cx{c, 0} * fam.members[2];
                worst = std::max(worst,
                                 frobenius_norm(mat_pow(q, 2) + Cx{a * a + b * b + c * c, 0} * id));
            }
            rep.identities.push_back({"(ai+bj+ck)^2=-(a^2+b^2+c^2)I", worst, 1e-12});
            break;
        }
        case FamilyName::lambda: {
            const double r2 = detail::random_factorization_residual(
                {fam.members[0], fam.members[1]}, 3, trials, rng);
            rep.identities.push_back({"factor2(lambda1,lambda2)", r2, 1e-10});
            const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (const auto& p : perms) {
                const double r = detail::random_factorization_residual(
                    {fam.members[p[0]], fam.members[p[1]], fam.members[p[2]]}, 3, trials, rng);
                rep.identities.push_back({"factor3(lambda" + std::to_string(p[0] + 1) + ",lambda" +
                                              std::to_string(p[1] + 1) + ",lambda" +
                                              std::to_string(p[2] + 1) + ")",
                                          r, 1e-10});
            }
            break;
        }
        case FamilyName::phi: {
            const UnityRoots eps = unity_roots(3);
            const Cx pref = eps.root(1) - Cx{1, 0};
            const Cx z{0, 0}, one{1, 0};
            const CMatrix r12 = CMatrix::from_entries(
                3, 3, {z, one, z, z, z, eps.root(1), eps.root(2), z, z});
            const CMatrix r23 = CMatrix::from_entries(
                3, 3, {z, z, eps.root(2), eps.root(1), z, z, z, one, z});
            rep.identities.push_back(
                {"[phi1,phi2]=(eps1-1)R12",
                 frobenius_norm(commutator(fam.members[0], fam.members[1]) - pref * r12), 1e-14});
            rep.identities.push_back(
                {"[phi1,phi3]=(eps1-1)phi2",
                 frobenius_norm(commutator(fam.members[0], fam.members[2]) - pref * fam.members[1]),
                 1e-14});
            rep.identities.push_back(
                {"[phi2,phi3]=(eps1-1)R23",
                 frobenius_norm(commutator(fam.members[1], fam.members[2]) - pref * r23), 1e-14});

            const double r3 = detail::random_factorization_residual(fam.members, 3, trials, rng);
            rep.identities.push_back({"factor3(phi1,phi2,phi3)", r3, 1e-10});

            // The commutator outputs themselves must NOT form a cubic triple.
            FactorFamily rhs;
            rhs.name = FamilyName::phi;
            rhs.order = 3;
            rhs.dim = 3;
            rhs.members = {r12, fam.members[1], r23};
            double max_word = 0.0;
            for (const WordIdentityResidual& w : check_word_identities(rhs, 3))
                max_word = std::max(max_word, w.residual);
            max_word = std::max(max_word, frobenius_norm(three_way_cross_sum(r12, fam.members[1], r23)));
            IdentityCheck reject{"commutator_rhs_triple_rejected", max_word, 1e-6};
            reject.expect_large = true;
            rep.identities.push_back(reject);
            break;
        }
        case FamilyName::chi: {
            rep.identities.push_back(
                {"[chi1,chi2]=sqrt(2)chi3",
                 frobenius_norm(commutator(fam.members[0], fam.members[1]) -
                                Cx{std::sqrt(2.0), 0} * fam.members[2]),
                 1e-14});
            const double r2 = detail::random_factorization_residual(
                {fam.members[0], fam.members[1]}, 4, trials, rng);
            rep.identities.push_back({"factor2(chi1,chi2)", r2, 1e-10});
            // Reported but non-gating: only the two-term quartic
            // factorization is required of this family.
            const double r3 = detail::random_factorization_residual(fam.members, 4, trials, rng);
            IdentityCheck three{"factor3(chi1,chi2,chi3)", r3, 1e-10};
            three.required = false;
            rep.identities.push_back(three);
            break;
        }
        case FamilyName::tau: {
            const double r2 = detail::random_factorization_residual(fam.members, fam.order, trials, rng);
            rep.identities.push_back(
                {"factor2(tau1(" + std::to_string(n) + "),tau2(" + std::to_string(n) + "))", r2, 1e-10});
            break;
        }
    }

    if (override_tol > 0.0) {
        const double tol = std::max(override_tol, 1e-15);
        for (IdentityCheck& c : rep.identities)
            if (!c.expect_large) c.threshold = tol;
    }
    rep.finalize();
    return rep;
}

/// {family, order, identities: [{name, residual}], passed}
inline JsonValue report_to_json(const FamilyReport& rep) {
    JsonValue identities = JsonValue::array();
    for (const IdentityCheck& c : rep.identities) {
        JsonValue item = JsonValue::object();
        item.set("name", c.name);
        item.set("residual", c.residual);
        identities.push_back(std::move(item));
    }
    JsonValue v = JsonValue::object();
    v.set("family", to_string(rep.family));
    v.set("order", rep.order);
    v.set("identities", std::move(identities));
    v.set("passed", rep.passed);
    return v;
}

} // namespace diracfac
