#pragma once

#include <map>
#include <optional>

#include "skewgb/algebra.hpp"

namespace skewgb {

/// An element of the free module A^m: a finite map from module monomials to
/// nonzero coefficients of R. The zero vector is the empty map.
class ModVector {
public:
    using Terms = std::map<ModMonomial, RingElem>;

    ModVector() = default;
    ModVector(SpecHandle spec, int rank);

    static ModVector zero(SpecHandle spec, int rank) { return ModVector(std::move(spec), rank); }
    static ModVector term(SpecHandle spec, int rank, RingElem c, ModMonomial m);
    /// The basis vector e_k (1-based).
    static ModVector basis(SpecHandle spec, int rank, int k);

    const SpecHandle& spec() const { return spec_; }
    int rank() const { return rank_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ModMonomial& m, const RingElem& c);
    void add(const ModVector& other);

    bool operator==(const ModVector& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const ModVector& o) const { return !(*this == o); }

private:
    SpecHandle spec_;
    int rank_ = 0;
    Terms terms_;
};

ModVector vec_add(const ModVector& f, const ModVector& g);
ModVector vec_sub(const ModVector& f, const ModVector& g);
ModVector vec_neg(const ModVector& f);
ModVector vec_left_scale(const RingElem& r, const ModVector& f);
/// Left action of A: q * f computed componentwise through the rewriting
/// engine.
ModVector poly_times_vector(const SkewPoly& q, const ModVector& f);
/// r x^alpha * f, the shape every reduction step subtracts.
ModVector shifted_term_times_vector(const RingElem& r, const Exponent& alpha, const ModVector& f);

inline ModVector operator+(const ModVector& f, const ModVector& g) { return vec_add(f, g); }
inline ModVector operator-(const ModVector& f, const ModVector& g) { return vec_sub(f, g); }
inline ModVector operator-(const ModVector& f) { return vec_neg(f); }

struct Leading {
    ModMonomial lm;
    RingElem lc;
};

/// The order-greatest term of f; absent for the zero vector (the lm(0) = 0
/// marker, which compares below every monomial).
std::optional<Leading> leading(const ModVector& f, const OrderSpec& order);

/// SkewPoly of the component k (1-based): the coefficients of monomials
/// X e_k.
SkewPoly component(const ModVector& f, int k);

}  // namespace skewgb
