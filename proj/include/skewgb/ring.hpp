#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewgb/error.hpp"
#include "skewgb/rational.hpp"

namespace skewgb {

/// The two supported coefficient rings: QQ and the univariate polynomial
/// ring QQ[t] over a named base variable.
enum class RingKind { Rationals, Polynomials };

struct RingSpec {
    RingKind kind = RingKind::Rationals;
    std::string base_var;  // set only for Polynomials

    bool operator==(const RingSpec& o) const { return kind == o.kind && base_var == o.base_var; }
};

/// An element of the coefficient ring. Stored as a coefficient list indexed
/// by degree in the base variable; canonical form has no trailing zeros, the
/// zero element is the empty list, and Rationals-kind elements have degree
/// <= 0.
class RingElem {
public:
    RingElem() = default;  // zero of Rationals kind

    static RingElem zero(RingKind k);
    static RingElem one(RingKind k);
    static RingElem constant(RingKind k, Rational v);
    /// t^power (Polynomials kind only).
    static RingElem variable_power(int power = 1, Rational coeff = Rational(1));
    /// coeffs[k] is the coefficient of t^k.
    static RingElem from_coeffs(std::vector<Rational> coeffs);

    RingKind kind() const { return kind_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Unit of the ring: any nonzero rational (degree-0 element).
    bool is_unit() const { return c_.size() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    const Rational& leading_coeff() const;
    /// Value of a constant element (zero allowed).
    Rational constant_value() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const RingElem& o) const { return kind_ == o.kind_ && c_ == o.c_; }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

private:
    RingKind kind_ = RingKind::Rationals;
    std::vector<Rational> c_;

    void normalize();
    friend RingElem ring_add(const RingElem&, const RingElem&);
    friend RingElem ring_sub(const RingElem&, const RingElem&);
    friend RingElem ring_mul(const RingElem&, const RingElem&);
    friend RingElem ring_neg(const RingElem&);
    friend RingElem ring_scale(const Rational&, const RingElem&);
};

RingElem ring_add(const RingElem& a, const RingElem& b);
RingElem ring_sub(const RingElem& a, const RingElem& b);
RingElem ring_mul(const RingElem& a, const RingElem& b);
RingElem ring_neg(const RingElem& a);
RingElem ring_scale(const Rational& s, const RingElem& a);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return ring_add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return ring_sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return ring_mul(a, b); }
inline RingElem operator-(const RingElem& a) { return ring_neg(a); }

/// Quotient and remainder of polynomial long division (b nonzero).
std::pair<RingElem, RingElem> ring_divmod(const RingElem& a, const RingElem& b);

/// Exact quotient a / b, or absent when b does not divide a.
/// try_divide(0, 0) = 0.
std::optional<RingElem> try_divide(const RingElem& a, const RingElem& b);

struct ExtGcd {
    RingElem g, u, v;  // g = u*a + v*b
};

/// Extended gcd. g is monic for polynomials and lies in {0, 1} for
/// rationals; gcd_ext(0, 0) = (0, 0, 0).
ExtGcd gcd_ext(const RingElem& a, const RingElem& b);

/// Decides membership of `target` in the ideal generated by `gens` and, on
/// success, returns one solution (b_1, ..., b_m) with target = sum b_i gens_i.
/// Deterministic: over QQ the first nonzero generator receives target/gen;
/// over QQ[t] the Bezout coefficients of the left-to-right gcd chain are
/// scaled by target/g.
std::optional<std::vector<RingElem>> ideal_solve(const RingElem& target,
                                                 const std::vector<RingElem>& gens);

/// A finite generating set of { b in R^m : sum b_j row_j = 0 }.
///
/// Unimodular column reduction: zero entries contribute plain unit vectors;
/// the nonzero entries are folded left to right through the extended Euclid
/// chain with monic gcds and a raw first pivot, emitting one generator per
/// combination step. For a two-entry row (a, b) this yields (b/g, -a/g).
std::vector<std::vector<RingElem>> row_syzygies(const std::vector<RingElem>& row);

}  // namespace skewgb
