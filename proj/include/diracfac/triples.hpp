#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "diracfac/matrix.hpp"
#include "diracfac/roots.hpp"
#include "diracfac/words.hpp"

namespace diracfac {

/// One verified cubic triple: three distinct generalized permutation
/// matrices whose pairwise mixed word sums and three-way cross sum vanish,
/// so  (A M0 + B M1 + C M2)^3 = (A^3 + B^3 + C^3) I.
struct TripleCertificate {
    std::array<CMatrix, 3> matrices;
    int order = 3;
    std::vector<std::pair<std::string, double>> checks;
    bool passed = false;
};

/// A generalized permutation candidate: row r has its single nonzero entry
/// omega^exps[r] at column perm[r], omega = exp(i 2 pi / 3).
struct TripleCandidate {
    std::array<int, 3> perm;
    std::array<int, 3> exps;
    CMatrix matrix;
    bool diagonal = false;
    std::size_t id = 0;
};

struct TripleCatalog {
    std::vector<TripleCandidate> candidates;   // unital candidates (M^3 = I), scan order
    std::size_t search_space = 0;              // all generalized permutation candidates
    std::vector<TripleCertificate> triples;    // passing triples, deterministic order
    std::map<std::string, std::size_t> counts; // one entry per counting convention
};

inline constexpr double kTripleTolerance = 1e-10;

namespace detail {

inline std::vector<std::array<int, 3>> s3_permutations() {
    return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

inline CMatrix candidate_matrix(const std::array<int, 3>& perm, const std::array<int, 3>& exps,
                                const UnityRoots& eps) {
    CMatrix m(3, 3);
    for (int r = 0; r < 3; ++r) m(r, perm[r]) = eps.root(exps[r]);
    return m;
}

/// Canonical member key under scaling by cube roots of unity: shift all
/// exponents so row 0 carries exponent 0.
inline std::array<int, 7> member_phase_key(const TripleCandidate& c) {
    const int shift = c.exps[0];
    std::array<int, 7> key{};
    for (int r = 0; r < 3; ++r) key[r] = c.perm[r];
    for (int r = 0; r < 3; ++r) key[3 + r] = ((c.exps[r] - shift) % 3 + 3) % 3;
    key[6] = 0;
    return key;
}

inline std::array<int, 7> member_key(const TripleCandidate& c, int extra_shift) {
    std::array<int, 7> key{};
    for (int r = 0; r < 3; ++r) key[r] = c.perm[r];
    for (int r = 0; r < 3; ++r) key[3 + r] = ((c.exps[r] + extra_shift) % 3 + 3) % 3;
    key[6] = 0;
    return key;
}

} // namespace detail

/// Exhaustive catalog of the cubic triples.
///
/// Search space: 3x3 generalized permutation matrices with cube-root-of-unity
/// entries (6 permutation patterns x 27 entry choices = 162 candidates).
/// Candidates with M^3 = I are kept; every triple of distinct survivors is
/// tested for (a) all pairwise mixed word sums vanishing and (b) the
/// three-way cross sum over the 6 orderings vanishing.
///
/// What counts as one triple is a convention (ordered vs unordered, diagonal
/// members allowed, identification of triples differing only by per-member
/// root-of-unity phases), so the catalog reports every convention side by
/// side rather than picking one.
inline TripleCatalog enumerate_triples(int n) {
    if (n != 3) throw std::invalid_argument("enumerate_triples: only the cubic catalog is supported");

    const UnityRoots eps = unity_roots(3);
    const CMatrix id3 = CMatrix::identity(3);
    TripleCatalog catalog;

    for (const auto& perm : detail::s3_permutations()) {
        const bool diag = (perm[0] == 0 && perm[1] == 1 && perm[2] == 2);
        for (int e0 = 0; e0 < 3; ++e0)
            for (int e1 = 0; e1 < 3; ++e1)
                for (int e2 = 0; e2 < 3; ++e2) {
                    ++catalog.search_space;
                    TripleCandidate c;
                    c.perm = perm;
                    c.exps = {e0, e1, e2};
                    c.matrix = detail::candidate_matrix(perm, c.exps, eps);
                    c.diagonal = diag;
                    if (frobenius_norm(mat_pow(c.matrix, 3) - id3) > 1e-12) continue;
                    c.id = catalog.candidates.size();
                    catalog.candidates.push_back(std::move(c));
                }
    }

    const auto& cands = catalog.candidates;

    // Pairwise validity, cached: both mixed word sums ({j:2,k:1}, {j:1,k:2})
    // must vanish.
    const std::size_t nc = cands.size();
    std::vector<std::vector<double>> pair_residual(nc, std::vector<double>(nc, 0.0));
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = i + 1; j < nc; ++j) {
            const std::vector<CMatrix> pair = {cands[i].matrix, cands[j].matrix};
            WordMultiset m21, m12;
            m21.assignments[0] = 2;
            m21.assignments[1] = 1;
            m12.assignments[0] = 1;
            m12.assignments[1] = 2;
            const double r = std::max(frobenius_norm(word_sum(pair, m21)),
                                      frobenius_norm(word_sum(pair, m12)));
            pair_residual[i][j] = pair_residual[j][i] = r;
        }

    std::set<std::vector<std::array<int, 7>>> member_phase_orbits;
    std::set<std::vector<std::array<int, 7>>> member_phase_orbits_diag;
    std::set<std::vector<std::array<int, 7>>> global_phase_classes;
    std::size_t unordered = 0, with_diagonal = 0, two_diagonal = 0;

    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = i + 1; j < nc; ++j) {
            if (pair_residual[i][j] > kTripleTolerance) continue;
            for (std::size_t k = j + 1; k < nc; ++k) {
                if (pair_residual[i][k] > kTripleTolerance) continue;
                if (pair_residual[j][k] > kTripleTolerance) continue;
                const double cross = frobenius_norm(
                    three_way_cross_sum(cands[i].matrix, cands[j].matrix, cands[k].matrix));
                if (cross > kTripleTolerance) continue;

                TripleCertificate cert;
                cert.matrices = {cands[i].matrix, cands[j].matrix, cands[k].matrix};
                cert.order = 3;
                const CMatrix& mi = cands[i].matrix;
                const CMatrix& mj = cands[j].matrix;
                const CMatrix& mk = cands[k].matrix;
                cert.checks = {
                    {"M0^3=I", frobenius_norm(mat_pow(mi, 3) - id3)},
                    {"M1^3=I", frobenius_norm(mat_pow(mj, 3) - id3)},
                    {"M2^3=I", frobenius_norm(mat_pow(mk, 3) - id3)},
                    {"pair01", pair_residual[i][j]},
                    {"pair02", pair_residual[i][k]},
                    {"pair12", pair_residual[j][k]},
                    {"cross_sum", cross},
                };
                cert.passed = true;
                for (const auto& [name, res] : cert.checks)
                    if (res > kTripleTolerance) cert.passed = false;
                catalog.triples.push_back(std::move(cert));

                ++unordered;
                const int ndiag = int(cands[i].diagonal) + int(cands[j].diagonal) + int(cands[k].diagonal);
                if (ndiag > 0) ++with_diagonal;
                if (ndiag > 1) ++two_diagonal;

                std::vector<std::array<int, 7>> orbit_key = {detail::member_phase_key(cands[i]),
                                                             detail::member_phase_key(cands[j]),
                                                             detail::member_phase_key(cands[k])};
                std::sort(orbit_key.begin(), orbit_key.end());
                member_phase_orbits.insert(orbit_key);
                if (ndiag > 0) member_phase_orbits_diag.insert(orbit_key);

                std::vector<std::array<int, 7>> global_key;
                for (int t = 0; t < 3; ++t) {
                    std::vector<std::array<int, 7>> key = {detail::member_key(cands[i], t),
                                                           detail::member_key(cands[j], t),
                                                           detail::member_key(cands[k], t)};
                    std::sort(key.begin(), key.end());
                    if (t == 0 || key < global_key) global_key = key;
                }
                global_phase_classes.insert(global_key);
            }
        }

    catalog.counts["unordered"] = unordered;
    catalog.counts["ordered"] = unordered * 6;
    catalog.counts["unordered_with_diagonal"] = with_diagonal;
    catalog.counts["unordered_no_diagonal"] = unordered - with_diagonal;
    catalog.counts["unordered_two_diagonal"] = two_diagonal;
    catalog.counts["member_phase_orbits"] = member_phase_orbits.size();
    catalog.counts["member_phase_orbits_with_diagonal"] = member_phase_orbits_diag.size();
    catalog.counts["member_phase_orbits_no_diagonal"] =
        member_phase_orbits.size() - member_phase_orbits_diag.size();
    catalog.counts["global_phase_classes"] = global_phase_classes.size();
    return catalog;
}

/// True if some certificate's matrices coincide entrywise (within tol) with
/// the given triple in any order.
inline bool catalog_contains(const TripleCatalog& catalog, const std::array<CMatrix, 3>& triple,
                             double tol = 1e-14) {
    std::array<int, 3> idx = {0, 1, 2};
    for (const TripleCertificate& cert : catalog.triples) {
        std::array<int, 3> p = idx;
        std::sort(p.begin(), p.end());
        do {
            bool all = true;
            for (int s = 0; s < 3 && all; ++s)
                all = cert.matrices[s].same_shape(triple[p[s]]) &&
                      max_abs_diff(cert.matrices[s], triple[p[s]]) <= tol;
            if (all) return true;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return false;
}

} // namespace diracfac
