#pragma once

#include <optional>
#include <vector>

#include "skewgb/groebner.hpp"

namespace skewgb {

/// An index set closed under "leading monomial divides the set's lcm",
/// with the lcm and the per-member shift data.
struct SaturatedSubset {
    std::vector<int> indices;  // ascending, 0-based
    ModMonomial lcm;           // X_J
    std::vector<Exponent> beta;
    std::vector<Exponent> gamma;
};

/// Coefficient column: an element of A^t (or A^s), one polynomial per row.
using CoeffColumn = std::vector<SkewPoly>;

/// The full output of the syzygy pipeline.
struct SyzygyMatrices {
    std::vector<ModVector> F;                  // inputs
    std::vector<ModVector> G;                  // completed basis
    std::vector<std::vector<SkewPoly>> h_cols; // G over F, as in GBResult
    std::vector<std::vector<SkewPoly>> q_cols; // F over G
    std::vector<CoeffColumn> z_leading;        // Z(L_G), columns in A^t
    std::vector<CoeffColumn> p;                // P, division quotients of the Z(L_G) combinations
    std::vector<CoeffColumn> z_basis;          // Z(G) = Z(L_G) - P
    std::vector<CoeffColumn> z_module;         // Z(F), columns in A^s
};

/// Saturation of J with respect to the leading monomials, or absent when the
/// members' indices are mixed (X_J = 0).
std::optional<SaturatedSubset> saturate(const std::vector<int>& J,
                                        const std::vector<ModMonomial>& lms);

/// Homogeneous generators of Syz(L_G) via saturated subsets: one column
/// sum_j b_j x^{gamma_j} e_j per row_syzygies generator of each saturated
/// subset. Zero columns and duplicate saturations are dropped.
std::vector<CoeffColumn> syz_leading(const std::vector<ModVector>& G, const OrderSpec& order);

/// Lifts Syz(L_G) to Syz(G): divides each combination sum z_j g_j by G and
/// returns Z(L_G) - P. P is reported through p_out when non-null.
std::vector<CoeffColumn> syz_basis(const GBResult& gb, const OrderSpec& order,
                                   std::vector<CoeffColumn>* p_out = nullptr,
                                   std::vector<CoeffColumn>* zlg_out = nullptr);

/// The full pipeline: completion, Z(L_G), Z(G), and the assembled
/// Z(F) = [(Z(G)^T H^T)^T | I_s - (Q^T H^T)^T] with zero and duplicate
/// columns dropped. Every retained column annihilates F^T (re-validated).
SyzygyMatrices syz_module(const std::vector<ModVector>& F, const OrderSpec& order);

/// sum_i a_i F_i.
ModVector apply_presentation(const std::vector<ModVector>& F, const CoeffColumn& a);

}  // namespace skewgb
