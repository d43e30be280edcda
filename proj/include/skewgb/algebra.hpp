#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "skewgb/order.hpp"
#include "skewgb/ring.hpp"

namespace skewgb {

/// sigma_i as an affine endomorphism of the base ring: sigma(t) = a*t + b
/// with a a nonzero rational and b a constant. Identity when the base is QQ.
struct AffineMap {
    Rational a = 1;
    Rational b = 0;
    bool is_identity() const { return a == 1 && b == 0; }
};

/// The degree-<=1 tail of a commutation relation: an element of
/// R + R x1 + ... + R xn.
struct LinearTail {
    RingElem constant;
    std::vector<RingElem> linear;  // linear[i] is the coefficient of x_{i+1}

    bool is_zero() const;
};

/// x_j x_i = c * x_i x_j + tail, stored for i < j.
struct PairRelation {
    RingElem c;
    LinearTail tail;
};

using TermMap = std::map<Exponent, RingElem>;

/// A presentation of a sigma-PBW extension A = sigma(R)<x1, ..., xn>.
/// Immutable after construction and shared through SpecHandle; the product
/// memo tolerates concurrent lookups and idempotent inserts.
class AlgebraSpec {
public:
    RingSpec base;
    std::vector<std::string> vars;
    std::vector<AffineMap> sigma;  // per variable; identity entries for a QQ base
    std::vector<RingElem> delta;   // delta_i(t) per variable; zero for a QQ base
    std::map<std::pair<int, int>, PairRelation> relations;  // keyed (i, j), 0-based, i < j
    bool quasi_commutative = false;
    bool bijective = false;
    std::string name;  // display label (preset descriptor or file path)

    AlgebraSpec() = default;
    AlgebraSpec(const AlgebraSpec&) = delete;
    AlgebraSpec& operator=(const AlgebraSpec&) = delete;

    int nvars() const { return static_cast<int>(vars.size()); }
    /// Relation data for a pair i < j; pairs without a stored entry commute
    /// (c = 1, zero tail).
    PairRelation pair_relation(int i, int j) const;
    RingElem ring_zero() const { return RingElem::zero(base.kind); }
    RingElem ring_one() const { return RingElem::one(base.kind); }

    // memo for standard-form products x^alpha x^beta, keyed (alpha, beta)
    bool memo_lookup(const Exponent& a, const Exponent& b, TermMap& out) const;
    void memo_store(const Exponent& a, const Exponent& b, const TermMap& value) const;

private:
    mutable std::mutex memo_mu_;
    mutable std::map<std::pair<Exponent, Exponent>, TermMap> memo_;
};

using SpecHandle = std::shared_ptr<const AlgebraSpec>;

/// An element of A in standard form: a finite map from exponents to nonzero
/// coefficients of R. The zero polynomial is the empty map.
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(SpecHandle spec) : spec_(std::move(spec)) {}

    static SkewPoly zero(SpecHandle spec) { return SkewPoly(std::move(spec)); }
    static SkewPoly one(SpecHandle spec);
    static SkewPoly constant(SpecHandle spec, RingElem c);
    static SkewPoly monomial(SpecHandle spec, Exponent e);
    static SkewPoly term(SpecHandle spec, RingElem c, Exponent e);

    const SpecHandle& spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for zero
    /// Accumulates c at exponent e, dropping the entry when it cancels.
    void add_term(const Exponent& e, const RingElem& c);
    void add(const SkewPoly& other);

    bool operator==(const SkewPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

private:
    SpecHandle spec_;
    TermMap terms_;
};

// ---- normal-form arithmetic -------------------------------------------

/// sigma_i applied to a ring element (affine substitution).
RingElem sigma_apply(const AlgebraSpec& spec, int var, const RingElem& r);
/// sigma^alpha = sigma_1^{a1} o ... o sigma_n^{an}.
RingElem sigma_alpha(const AlgebraSpec& spec, const Exponent& alpha, const RingElem& r);
/// The sigma_i-derivation determined by delta_i(t).
RingElem delta_apply(const AlgebraSpec& spec, int var, const RingElem& r);

/// Standard form of x^alpha * r: sigma^alpha(r) x^alpha plus a tail of
/// degree < |alpha|.
SkewPoly mono_times_ring(const SpecHandle& spec, const Exponent& alpha, const RingElem& r);

/// Standard form of x^alpha * x^beta (memoized per spec).
SkewPoly mono_times_mono(const SpecHandle& spec, const Exponent& alpha, const Exponent& beta);

struct MonoProduct {
    RingElem c;     // c_{alpha,beta}, nonzero
    SkewPoly tail;  // p_{alpha,beta}, zero or of degree < |alpha + beta|
};

/// Splits mono_times_mono into the leading constant and the tail.
MonoProduct c_of(const SpecHandle& spec, const Exponent& alpha, const Exponent& beta);

SkewPoly poly_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly poly_sub(const SkewPoly& f, const SkewPoly& g);
SkewPoly poly_neg(const SkewPoly& f);
SkewPoly poly_left_scale(const RingElem& r, const SkewPoly& f);
SkewPoly poly_mul(const SkewPoly& f, const SkewPoly& g);

inline SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) { return poly_add(f, g); }
inline SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) { return poly_sub(f, g); }
inline SkewPoly operator-(const SkewPoly& f) { return poly_neg(f); }
inline SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) { return poly_mul(f, g); }

/// Leading data of a SkewPoly under the base order; absent for zero.
std::optional<std::pair<Exponent, RingElem>> poly_leading(const SkewPoly& f, const OrderSpec& order);

// ---- presentation checks ----------------------------------------------

/// Checks the presentation axioms: nonzero relation constants, flag
/// consistency, affine sigma data, and associativity probes
/// (x_k x_j) x_i = x_k (x_j x_i) for i < j < k plus the same probe against
/// the base-ring generator. Returns human-readable diagnostics; empty means
/// all checks passed.
std::vector<std::string> validate_spec(const SpecHandle& spec);

// ---- preset catalog -----------------------------------------------------

/// q-Heisenberg algebra h_n(q) over QQ with variables x1..xn, y1..yn, z1..zn.
SpecHandle preset_heisenberg(int n, const Rational& q);
/// Multiplicative Weyl analogue O_n(lambda_ji) over QQ[x1] with variables
/// x2..xn; lambdas ordered (2,1), (3,1), (3,2), (4,1), ...
SpecHandle preset_multiplicative_weyl(int n, const std::vector<Rational>& lambdas);
/// Additive Weyl analogue A_n(q1..qn): for n = 1 over QQ[x1] with variable
/// y1 (sigma(x1) = q x1, delta(x1) = 1); for n >= 2 over QQ with variables
/// x1..xn, y1..yn and relations y_i x_i = q_i x_i y_i + 1.
SpecHandle preset_additive_weyl(int n, const std::vector<Rational>& qs);
/// Shift-operator algebra S_h over QQ[t] with variable x; sigma(t) = t - h.
SpecHandle preset_shift(const Rational& h);

}  // namespace skewgb
