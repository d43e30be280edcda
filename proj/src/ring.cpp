#include "skewgb/ring.hpp"

#include <algorithm>

namespace skewgb {

namespace {

void check_same_kind(const RingElem& a, const RingElem& b, const char* op) {
    if (a.kind() != b.kind())
        throw ContractViolation(std::string("mixed ring kinds in ") + op);
}

}  // namespace

void RingElem::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (kind_ == RingKind::Rationals && c_.size() > 1)
        throw ContractViolation("rational ring element with positive degree");
}

RingElem RingElem::zero(RingKind k) {
    RingElem e;
    e.kind_ = k;
    return e;
}

RingElem RingElem::one(RingKind k) { return constant(k, Rational(1)); }

RingElem RingElem::constant(RingKind k, Rational v) {
    RingElem e;
    e.kind_ = k;
    if (v != 0) e.c_.push_back(std::move(v));
    return e;
}

RingElem RingElem::variable_power(int power, Rational coeff) {
    if (power < 0) throw ContractViolation("negative power of the base variable");
    RingElem e;
    e.kind_ = RingKind::Polynomials;
    if (coeff != 0) {
        e.c_.assign(power + 1, Rational(0));
        e.c_.back() = std::move(coeff);
    }
    return e;
}

RingElem RingElem::from_coeffs(std::vector<Rational> coeffs) {
    RingElem e;
    e.kind_ = RingKind::Polynomials;
    e.c_ = std::move(coeffs);
    e.normalize();
    return e;
}

Rational RingElem::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

const Rational& RingElem::leading_coeff() const {
    if (c_.empty()) throw ContractViolation("leading coefficient of zero");
    return c_.back();
}

Rational RingElem::constant_value() const {
    if (c_.size() > 1) throw ContractViolation("constant_value of a non-constant element");
    return c_.empty() ? Rational(0) : c_[0];
}

RingElem ring_add(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b, "add");
    RingElem r;
    r.kind_ = a.kind_;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
}

RingElem ring_sub(const RingElem& a, const RingElem& b) { return ring_add(a, ring_neg(b)); }

RingElem ring_neg(const RingElem& a) {
    RingElem r = a;
    for (auto& c : r.c_) c = -c;
    return r;
}

RingElem ring_scale(const Rational& s, const RingElem& a) {
    if (s == 0) return RingElem::zero(a.kind());
    RingElem r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

RingElem ring_mul(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b, "mul");
    RingElem r;
    r.kind_ = a.kind_;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.normalize();
    return r;
}

std::pair<RingElem, RingElem> ring_divmod(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b, "divmod");
    if (b.is_zero()) throw ContractViolation("division by zero ring element");
    std::vector<Rational> rem(a.coeffs());
    std::vector<Rational> quot;
    const int db = b.degree();
    const Rational& lb = b.leading_coeff();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= db) quot.assign(dr - db + 1, Rational(0));
    while (dr >= db) {
        Rational q = rem[dr] / lb;
        quot[dr - db] = q;
        for (int k = 0; k <= db; ++k) rem[dr - db + k] -= q * b.coeff(k);
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        dr = static_cast<int>(rem.size()) - 1;
    }
    RingElem qe, re;
    if (a.kind() == RingKind::Rationals) {
        qe = RingElem::constant(RingKind::Rationals, quot.empty() ? Rational(0) : quot[0]);
        re = RingElem::constant(RingKind::Rationals, rem.empty() ? Rational(0) : rem[0]);
    } else {
        qe = RingElem::from_coeffs(std::move(quot));
        re = RingElem::from_coeffs(std::move(rem));
    }
    return {qe, re};
}

std::optional<RingElem> try_divide(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b, "divide");
    if (b.is_zero()) {
        if (a.is_zero()) return RingElem::zero(a.kind());
        return std::nullopt;
    }
    auto [q, r] = ring_divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

ExtGcd gcd_ext(const RingElem& a, const RingElem& b) {
    check_same_kind(a, b, "gcd");
    const RingKind k = a.kind();
    RingElem old_r = a, r = b;
    RingElem old_u = RingElem::one(k), u = RingElem::zero(k);
    RingElem old_v = RingElem::zero(k), v = RingElem::one(k);
    while (!r.is_zero()) {
        RingElem q = ring_divmod(old_r, r).first;
        RingElem next = old_r - q * r;
        old_r = r;
        r = next;
        next = old_u - q * u;
        old_u = u;
        u = next;
        next = old_v - q * v;
        old_v = v;
        v = next;
    }
    if (old_r.is_zero()) return {old_r, RingElem::zero(k), RingElem::zero(k)};
    // Monic normalization (for rationals this lands on g = 1).
    Rational inv = Rational(1) / old_r.leading_coeff();
    return {ring_scale(inv, old_r), ring_scale(inv, old_u), ring_scale(inv, old_v)};
}

std::optional<std::vector<RingElem>> ideal_solve(const RingElem& target,
                                                 const std::vector<RingElem>& gens) {
    if (gens.empty()) throw ContractViolation("ideal_solve with no generators");
    const RingKind k = target.kind();
    for (const auto& g : gens) check_same_kind(target, g, "ideal_solve");

    std::vector<RingElem> sol(gens.size(), RingElem::zero(k));
    if (target.is_zero()) return sol;

    if (k == RingKind::Rationals) {
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!gens[i].is_zero()) {
                sol[i] = *try_divide(target, gens[i]);
                return sol;
            }
        }
        return std::nullopt;  // all generators zero, target nonzero
    }

    // QQ[t]: fold the gcd chain left to right, keeping Bezout coefficients.
    RingElem g = gens[0];
    std::vector<RingElem> bez(gens.size(), RingElem::zero(k));
    bez[0] = RingElem::one(k);
    for (size_t j = 1; j < gens.size(); ++j) {
        ExtGcd e = gcd_ext(g, gens[j]);
        for (auto& c : bez) c = e.u * c;
        bez[j] = bez[j] + e.v;
        g = e.g;
    }
    auto q = try_divide(target, g);
    if (!q) return std::nullopt;
    for (size_t j = 0; j < gens.size(); ++j) sol[j] = *q * bez[j];
    return sol;
}

std::vector<std::vector<RingElem>> row_syzygies(const std::vector<RingElem>& row) {
    std::vector<std::vector<RingElem>> gens;
    if (row.empty()) return gens;
    const RingKind k = row[0].kind();
    for (const auto& r : row) check_same_kind(row[0], r, "row_syzygies");

    auto unit = [&](size_t i) {
        std::vector<RingElem> e(row.size(), RingElem::zero(k));
        e[i] = RingElem::one(k);
        return e;
    };

    std::vector<size_t> nz;
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero())
            gens.push_back(unit(i));
        else
            nz.push_back(i);
    }
    if (nz.size() < 2) return gens;  // a single nonzero entry over a domain has no syzygy

    // Running invariant: g = sum_i col[i] * row[i]. The first pivot is kept
    // raw; every combination step normalizes the gcd monic, so the step-j
    // generator is (row_j / g_new) * col - (g_old / g_new) * e_j.
    RingElem g = row[nz[0]];
    std::vector<RingElem> col = unit(nz[0]);
    for (size_t t = 1; t < nz.size(); ++t) {
        const size_t j = nz[t];
        ExtGcd e = gcd_ext(g, row[j]);
        RingElem fj = *try_divide(row[j], e.g);
        RingElem fg = *try_divide(g, e.g);
        std::vector<RingElem> gen(row.size(), RingElem::zero(k));
        for (size_t i = 0; i < row.size(); ++i) gen[i] = fj * col[i];
        gen[j] = gen[j] - fg;
        gens.push_back(std::move(gen));
        for (auto& c : col) c = e.u * c;
        col[j] = col[j] + e.v;
        g = e.g;
    }
    return gens;
}

}  // namespace skewgb
