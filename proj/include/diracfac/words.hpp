#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "diracfac/families.hpp"
#include "diracfac/matrix.hpp"

namespace diracfac {

/// A multiset of family members, member index -> multiplicity.  The word sum
/// of a multiset is the sum of all distinct orderings (words) of its
/// elements, each word read as a matrix product.
struct WordMultiset {
    std::map<std::size_t, std::size_t> assignments;

    std::size_t length() const {
        std::size_t n = 0;
        for (auto& [idx, mult] : assignments) n += mult;
        return n;
    }
};

inline constexpr std::size_t kMaxWordLength = 8;

/// Sum over all distinct orderings of the multiset of the corresponding
/// matrix products.  The number of words is multinomial(L; multiplicities).
inline CMatrix word_sum(const std::vector<CMatrix>& members, const WordMultiset& multiset) {
    std::vector<std::size_t> word;
    for (auto& [idx, mult] : multiset.assignments) {
        if (idx >= members.size()) throw std::invalid_argument("word_sum: member index out of range");
        if (mult == 0) throw std::invalid_argument("word_sum: multiplicities must be >= 1");
        word.insert(word.end(), mult, idx);
    }
    if (word.empty()) throw std::invalid_argument("word_sum: empty multiset");
    if (word.size() > kMaxWordLength) throw std::length_error("word_sum: word length guard exceeded");

    const std::size_t d = members[word[0]].rows();
    CMatrix sum(d, d);
    std::sort(word.begin(), word.end());
    do {
        CMatrix prod = members[word[0]];
        for (std::size_t s = 1; s < word.size(); ++s) prod = mat_mul(prod, members[word[s]]);
        sum += prod;
    } while (std::next_permutation(word.begin(), word.end()));
    return sum;
}

inline CMatrix word_sum(const FactorFamily& family, const WordMultiset& multiset) {
    return word_sum(family.members, multiset);
}

/// Frobenius residual of the n-th root factorization identity
///   (sum_m c_m M_m)^n = (sum_m c_m^n) I.
/// A vanishing residual is exactly what lets the linear combination act as
/// the n-th root of the sum of the c_m^n.
inline double check_factorization(const std::vector<CMatrix>& members, int n,
                                  const std::vector<Cx>& coefficients) {
    if (members.empty()) throw std::invalid_argument("check_factorization: no members");
    if (coefficients.size() != members.size())
        throw std::invalid_argument("check_factorization: one coefficient per member required");
    const std::size_t d = members[0].rows();
    for (const CMatrix& m : members)
        if (!m.is_square() || m.rows() != d)
            throw std::invalid_argument("check_factorization: members must be square, equal dimension");

    CMatrix combo(d, d);
    for (std::size_t m = 0; m < members.size(); ++m) combo += coefficients[m] * members[m];

    Cx scalar{0, 0};
    for (Cx c : coefficients) {
        Cx cn{1, 0};
        for (int i = 0; i < n; ++i) cn *= c;
        scalar += cn;
    }

    return frobenius_norm(mat_pow(combo, static_cast<unsigned>(n)) - scalar * CMatrix::identity(d));
}

/// Passing threshold for check_factorization, scaled by coefficient size and
/// dimension to absorb the floating point of the repeated products.
inline double factorization_tolerance(int n, const std::vector<Cx>& coefficients, std::size_t dim) {
    double cmax = 0.0;
    for (Cx c : coefficients) cmax = std::max(cmax, std::abs(c));
    return 1e-10 * (1.0 + std::pow(cmax, n)) * static_cast<double>(dim);
}

struct WordIdentityResidual {
    std::size_t j = 0;
    std::size_t k = 0;
    std::size_t copies_of_k = 0; // m in the multiset {M_j: n-m, M_k: m}
    double residual = 0.0;
};

/// For every unordered member pair (j, k) and every mixed split m = 1..n-1,
/// the residual of word_sum({M_j: n-m, M_k: m}).  All residuals vanishing is
/// the telescoping criterion: the n-th power of a two-term combination keeps
/// only the pure-power words.
inline std::vector<WordIdentityResidual> check_word_identities(const FactorFamily& family, int n) {
    if (n != family.order)
        throw std::invalid_argument("check_word_identities: n must match the family order");
    if (family.members.size() < 2)
        throw std::invalid_argument("check_word_identities: family needs at least two members");

    std::vector<WordIdentityResidual> out;
    for (std::size_t j = 0; j < family.members.size(); ++j)
        for (std::size_t k = j + 1; k < family.members.size(); ++k)
            for (std::size_t m = 1; m < static_cast<std::size_t>(n); ++m) {
                WordMultiset ms;
                ms.assignments[j] = static_cast<std::size_t>(n) - m;
                ms.assignments[k] = m;
                out.push_back({j, k, m, frobenius_norm(word_sum(family, ms))});
            }
    return out;
}

/// Sum over all orderings of one copy of each of three matrices; its
/// vanishing is the cross condition a three-term factorization needs on top
/// of the pairwise word identities.
inline CMatrix three_way_cross_sum(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
    return a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a;
}

} // namespace diracfac
