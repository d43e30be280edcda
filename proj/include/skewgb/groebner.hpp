#pragma once

#include <optional>
#include <vector>

#include "skewgb/division.hpp"

namespace skewgb {

/// The syzygy data of a subset S of a basis: the lcm X_S of the leading
/// monomials, the shifts gamma_i with gamma_i + beta_i = exp(X_S), the row
/// sigma^{gamma_i}(lc(g_i)) c_{gamma_i, beta_i}, and its generating
/// coefficient syzygies B_S.
struct SubsetData {
    std::vector<int> subset;  // indices into S (0-based)
    ModMonomial lcm;          // X_S
    std::vector<Exponent> beta;
    std::vector<Exponent> gamma;
    std::vector<RingElem> row;
    std::vector<std::vector<RingElem>> generators;  // B_S
};

/// A completed basis with both transformation matrices: coordinates of each
/// basis element over the inputs (h_cols, so g_i = sum_j h_cols[i][j] f_j)
/// and of each input over the basis (q_cols, so f_j = sum_i q_cols[j][i] g_i).
struct GBResult {
    std::vector<ModVector> basis;
    std::vector<std::vector<SkewPoly>> h_cols;  // size t, entries in A^s
    std::vector<std::vector<SkewPoly>> q_cols;  // size s, entries in A^t
};

/// B_S for theta = 0, or absent when the leading monomials of S have mixed
/// indices (X_S = 0). Requires a quasi-commutative bijective algebra.
std::optional<SubsetData> compute_BF(const std::vector<ModVector>& S, const OrderSpec& order);

/// Buchberger-style completion for quasi-commutative bijective extensions.
/// New elements are appended unnormalized, inputs stay in place, and both
/// transformation matrices are produced; the identities G^T = H^T F^T and
/// F^T = Q^T G^T are re-validated before returning.
GBResult buchberger(const std::vector<ModVector>& F, const OrderSpec& order);

/// The completion criterion: every coefficient syzygy of every shared-index
/// subset yields a combination sum b_i x^{gamma_i} g_i that reduces to zero
/// by G. Singleton subsets are skipped (their syzygy module over a domain
/// is zero).
bool is_groebner(const std::vector<ModVector>& G, const OrderSpec& order);

/// Membership via reduction: the quotient combination over G when the
/// remainder is zero, absent otherwise. G must be a Groebner basis.
std::optional<std::vector<SkewPoly>> member(const ModVector& f, const std::vector<ModVector>& G,
                                            const OrderSpec& order);
std::optional<std::vector<SkewPoly>> member(const ModVector& f, const GBResult& gb,
                                            const OrderSpec& order);

}  // namespace skewgb
