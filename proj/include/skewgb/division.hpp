#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewgb/modvector.hpp"

namespace skewgb {

/// One multi-divisor reduction step: h' = h - sum_{j in J} r_j x^{alpha_j} f_j
/// with alpha_j + exp(lm(f_j)) = exp(lm(h)) and
/// lc(h) = sum_j r_j sigma^{alpha_j}(lc(f_j)) c_{alpha_j, f_j}.
struct ReductionStep {
    std::vector<int> divisors;       // indices into F (0-based)
    std::vector<RingElem> coeffs;    // r_j
    std::vector<Exponent> shifts;    // alpha_j
    std::vector<RingElem> c_alphas;  // c_{alpha_j, f_j}
};

struct DivisionResult {
    std::vector<SkewPoly> quotients;
    ModVector remainder;
};

/// A single reduction step of f by F, or absent when f is reduced (zero, no
/// divisor's leading monomial divides lm(f), or the leading-coefficient
/// equation has no solution in R).
///
/// Divisor selection is deterministic: candidates whose leading coefficient
/// alone solves the equation are tried first, ordered by descending lm(f_j)
/// with ties by input position; otherwise the combined equation over all
/// divisors goes to ideal_solve.
std::optional<std::pair<ModVector, ReductionStep>> reduce_step(const ModVector& f,
                                                               const std::vector<ModVector>& F,
                                                               const OrderSpec& order);

/// Applies a recorded step to an arbitrary vector (used for step replay).
ModVector apply_step(const ModVector& f, const std::vector<ModVector>& F,
                     const ReductionStep& step);

/// Full division: f = sum_i quotients_i F_i + remainder, the remainder
/// reduced w.r.t. F, and lm(f) = max{lm(lm(q_i) lm(F_i)), lm(remainder)}.
DivisionResult division(const ModVector& f, const std::vector<ModVector>& F,
                        const OrderSpec& order);

/// Iterated reduction with the quotient combination; same algorithm as
/// division().
std::pair<ModVector, std::vector<SkewPoly>> reduce_full(const ModVector& f,
                                                        const std::vector<ModVector>& F,
                                                        const OrderSpec& order);

}  // namespace skewgb
