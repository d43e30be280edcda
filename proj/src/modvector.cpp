#include "skewgb/modvector.hpp"

namespace skewgb {

ModVector::ModVector(SpecHandle spec, int rank) : spec_(std::move(spec)), rank_(rank) {
    if (rank_ < 1) throw ContractViolation("module rank must be >= 1");
}

ModVector ModVector::term(SpecHandle spec, int rank, RingElem c, ModMonomial m) {
    ModVector v(std::move(spec), rank);
    if (m.index < 1 || m.index > rank) throw ContractViolation("basis index outside 1..rank");
    if (static_cast<int>(m.exp.size()) != v.spec_->nvars())
        throw ContractViolation("exponent length does not match the algebra");
    if (!c.is_zero()) v.terms_.emplace(std::move(m), std::move(c));
    return v;
}

ModVector ModVector::basis(SpecHandle spec, int rank, int k) {
    RingKind kind = spec->base.kind;
    int n = spec->nvars();
    return term(std::move(spec), rank, RingElem::one(kind), ModMonomial{Exponent(n, 0), k});
}

void ModVector::add_term(const ModMonomial& m, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

void ModVector::add(const ModVector& other) {
    if (spec_ != other.spec_ || rank_ != other.rank_)
        throw ContractViolation("mixed specs or ranks in vector arithmetic");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
}

ModVector vec_add(const ModVector& f, const ModVector& g) {
    ModVector out = f;
    out.add(g);
    return out;
}

ModVector vec_sub(const ModVector& f, const ModVector& g) { return vec_add(f, vec_neg(g)); }

ModVector vec_neg(const ModVector& f) {
    ModVector out(f.spec(), f.rank());
    for (const auto& [m, c] : f.terms()) out.add_term(m, -c);
    return out;
}

ModVector vec_left_scale(const RingElem& r, const ModVector& f) {
    ModVector out(f.spec(), f.rank());
    if (r.is_zero()) return out;
    for (const auto& [m, c] : f.terms()) out.add_term(m, r * c);
    return out;
}

ModVector poly_times_vector(const SkewPoly& q, const ModVector& f) {
    if (q.spec() != f.spec()) throw ContractViolation("mixed specs in module product");
    const SpecHandle& spec = f.spec();
    ModVector out(spec, f.rank());
    for (const auto& [a, r] : q.terms()) {
        for (const auto& [m, d] : f.terms()) {
            SkewPoly mid = mono_times_ring(spec, a, d);
            for (const auto& [mu, u] : mid.terms()) {
                SkewPoly prod = mono_times_mono(spec, mu, m.exp);
                for (const auto& [e, c] : prod.terms())
                    out.add_term(ModMonomial{e, m.index}, (r * u) * c);
            }
        }
    }
    return out;
}

ModVector shifted_term_times_vector(const RingElem& r, const Exponent& alpha, const ModVector& f) {
    SkewPoly t = SkewPoly::term(f.spec(), r, alpha);
    return poly_times_vector(t, f);
}

std::optional<Leading> leading(const ModVector& f, const OrderSpec& order) {
    if (f.is_zero()) return std::nullopt;
    const ModMonomial* best = nullptr;
    for (const auto& [m, c] : f.terms()) {
        if (!best || cmp_modmon(order, m, *best) == Cmp::GT) best = &m;
    }
    return Leading{*best, f.terms().at(*best)};
}

SkewPoly component(const ModVector& f, int k) {
    SkewPoly out(f.spec());
    for (const auto& [m, c] : f.terms())
        if (m.index == k) out.add_term(m.exp, c);
    return out;
}

}  // namespace skewgb
