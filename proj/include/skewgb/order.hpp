#pragma once

#include <optional>
#include <vector>

#include "skewgb/error.hpp"

namespace skewgb {

/// Exponent vector of a standard monomial x1^a1 ... xn^an.
using Exponent = std::vector<int>;

int exp_degree(const Exponent& a);
Exponent exp_add(const Exponent& a, const Exponent& b);
/// Componentwise a - b; requires b <= a.
Exponent exp_sub(const Exponent& a, const Exponent& b);
bool exp_leq(const Exponent& a, const Exponent& b);  // componentwise
Exponent exp_max(const Exponent& a, const Exponent& b);
bool exp_is_zero(const Exponent& a);

/// A monomial of the free module A^m: a standard monomial together with a
/// basis index in 1..m.
struct ModMonomial {
    Exponent exp;
    int index = 1;

    bool operator==(const ModMonomial& o) const { return index == o.index && exp == o.exp; }
    bool operator!=(const ModMonomial& o) const { return !(*this == o); }
    // storage order for term maps; unrelated to the monomial order
    bool operator<(const ModMonomial& o) const {
        if (index != o.index) return index < o.index;
        return exp < o.exp;
    }
};

enum class Cmp { LT, EQ, GT };

enum class ModuleOrder { TOP, TOPREV };

/// A degree-compatible order selection: deglex on Mon(A) with a precedence
/// permutation of the variables, and TOP or TOPREV on Mon(A^m) with a basis
/// direction. POT-style orders are excluded (not degree compatible).
struct OrderSpec {
    /// Variable positions (0-based), most significant first.
    std::vector<int> precedence;
    ModuleOrder module_order = ModuleOrder::TOPREV;
    /// Basis indices (1-based) listed in direction order; with the default
    /// e1..em direction, TOPREV makes e1 the top basis vector and TOP makes
    /// em the top one.
    std::vector<int> basis_dir;
};

/// deglex with the natural variable precedence x1 > x2 > ... and the
/// e1..em basis direction.
OrderSpec default_order(int nvars, int rank, ModuleOrder mo = ModuleOrder::TOPREV,
                        bool reverse_basis = false);

/// Degree first, ties broken lexicographically along the precedence list.
Cmp cmp_mon(const OrderSpec& order, const Exponent& a, const Exponent& b);

/// Monomial comparison first; equal monomials are ordered by basis index
/// along the direction list (descending for TOP, ascending for TOPREV).
Cmp cmp_modmon(const OrderSpec& order, const ModMonomial& a, const ModMonomial& b);

/// The shift theta with theta + exp(a) = exp(b) when a divides b
/// (same index, componentwise <=); absent otherwise.
std::optional<Exponent> divides(const ModMonomial& a, const ModMonomial& b);

/// Componentwise max with the shared index; absent when the indices differ
/// (the lcm-is-zero convention).
std::optional<ModMonomial> lcm_mod(const ModMonomial& a, const ModMonomial& b);

}  // namespace skewgb
