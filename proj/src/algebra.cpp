#include "skewgb/algebra.hpp"

#include <algorithm>

namespace skewgb {

bool LinearTail::is_zero() const {
    if (!constant.is_zero()) return false;
    for (const auto& c : linear)
        if (!c.is_zero()) return false;
    return true;
}

PairRelation AlgebraSpec::pair_relation(int i, int j) const {
    if (!(0 <= i && i < j && j < nvars())) throw ContractViolation("bad relation pair");
    auto it = relations.find({i, j});
    if (it != relations.end()) return it->second;
    PairRelation r;
    r.c = ring_one();
    r.tail.constant = ring_zero();
    r.tail.linear.assign(vars.size(), ring_zero());
    return r;
}

bool AlgebraSpec::memo_lookup(const Exponent& a, const Exponent& b, TermMap& out) const {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find({a, b});
    if (it == memo_.end()) return false;
    out = it->second;
    return true;
}

void AlgebraSpec::memo_store(const Exponent& a, const Exponent& b, const TermMap& value) const {
    std::lock_guard<std::mutex> lock(memo_mu_);
    memo_.emplace(std::make_pair(a, b), value);
}

SkewPoly SkewPoly::one(SpecHandle spec) {
    RingKind k = spec->base.kind;
    return constant(std::move(spec), RingElem::one(k));
}

SkewPoly SkewPoly::constant(SpecHandle spec, RingElem c) {
    SkewPoly f(std::move(spec));
    if (!c.is_zero()) f.terms_.emplace(Exponent(f.spec_->nvars(), 0), std::move(c));
    return f;
}

SkewPoly SkewPoly::monomial(SpecHandle spec, Exponent e) {
    RingElem one = RingElem::one(spec->base.kind);
    return term(std::move(spec), std::move(one), std::move(e));
}

SkewPoly SkewPoly::term(SpecHandle spec, RingElem c, Exponent e) {
    SkewPoly f(std::move(spec));
    if (static_cast<int>(e.size()) != f.spec_->nvars())
        throw ContractViolation("exponent length does not match the algebra");
    if (!c.is_zero()) f.terms_.emplace(std::move(e), std::move(c));
    return f;
}

int SkewPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
    return d;
}

void SkewPoly::add_term(const Exponent& e, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

void SkewPoly::add(const SkewPoly& other) {
    if (spec_ != other.spec_) throw ContractViolation("mixed algebra specs");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
}

// ---- sigma and delta ----------------------------------------------------

RingElem sigma_apply(const AlgebraSpec& spec, int var, const RingElem& r) {
    if (spec.base.kind == RingKind::Rationals) return r;
    const AffineMap& m = spec.sigma[var];
    if (m.is_identity() || r.is_constant()) return r;
    // r(a*t + b) by Horner
    RingElem at_b = RingElem::from_coeffs({m.b, m.a});
    RingElem res = RingElem::zero(RingKind::Polynomials);
    for (int k = r.degree(); k >= 0; --k)
        res = res * at_b + RingElem::constant(RingKind::Polynomials, r.coeff(k));
    return res;
}

RingElem sigma_alpha(const AlgebraSpec& spec, const Exponent& alpha, const RingElem& r) {
    if (static_cast<int>(alpha.size()) != spec.nvars())
        throw ContractViolation("exponent length does not match the algebra");
    if (spec.base.kind == RingKind::Rationals || r.is_constant()) return r;
    // Compose the affine maps left to right: M := M o sigma_i^{alpha_i},
    // then substitute once.
    Rational A = 1, B = 0;
    for (int i = 0; i < spec.nvars(); ++i) {
        const AffineMap& m = spec.sigma[i];
        for (int k = 0; k < alpha[i]; ++k) {
            B = A * m.b + B;
            A = A * m.a;
        }
    }
    if (A == 1 && B == 0) return r;
    RingElem at_b = RingElem::from_coeffs({B, A});
    RingElem res = RingElem::zero(RingKind::Polynomials);
    for (int k = r.degree(); k >= 0; --k)
        res = res * at_b + RingElem::constant(RingKind::Polynomials, r.coeff(k));
    return res;
}

RingElem delta_apply(const AlgebraSpec& spec, int var, const RingElem& r) {
    if (spec.base.kind == RingKind::Rationals) return RingElem::zero(RingKind::Rationals);
    const RingElem& d = spec.delta[var];
    if (d.is_zero() || r.is_constant()) return RingElem::zero(RingKind::Polynomials);
    // delta(t^k) = sigma(t) delta(t^{k-1}) + d t^{k-1}
    RingElem st = RingElem::from_coeffs({spec.sigma[var].b, spec.sigma[var].a});
    RingElem dk = RingElem::zero(RingKind::Polynomials);  // delta(t^0)
    RingElem res = RingElem::zero(RingKind::Polynomials);
    RingElem tk = RingElem::one(RingKind::Polynomials);  // t^{k-1} below
    for (int k = 1; k <= r.degree(); ++k) {
        dk = st * dk + d * tk;
        tk = tk * RingElem::variable_power(1);
        res = res + RingElem::constant(RingKind::Polynomials, r.coeff(k)) * dk;
    }
    return res;
}

// ---- rewriting engine ---------------------------------------------------
//
// Products are normalized by moving one generator at a time. mono_times_ring
// walks the coefficient through the monomial with x_i r = sigma_i(r) x_i +
// delta_i(r); mono_times_var crosses a single right-hand variable past the
// monomial's last letter using the stored pair relation. Every recursive
// sub-product has strictly smaller total degree, which is the termination
// measure.

SkewPoly mono_times_ring(const SpecHandle& spec, const Exponent& alpha, const RingElem& r) {
    if (static_cast<int>(alpha.size()) != spec->nvars())
        throw ContractViolation("exponent length does not match the algebra");
    SkewPoly out(spec);
    if (r.is_zero()) return out;
    if (spec->base.kind == RingKind::Rationals || r.is_constant() || exp_is_zero(alpha)) {
        out.add_term(alpha, r);
        return out;
    }
    int i = 0;
    while (alpha[i] == 0) ++i;
    Exponent rest = alpha;
    rest[i] -= 1;
    SkewPoly sub = mono_times_ring(spec, rest, r);
    for (const auto& [g, c] : sub.terms()) {
        Exponent up = g;
        up[i] += 1;
        out.add_term(up, sigma_apply(*spec, i, c));
        out.add_term(g, delta_apply(*spec, i, c));
    }
    return out;
}

namespace {

SkewPoly poly_times_var(const SkewPoly& f, int var);

// x^theta * x_j in standard form.
SkewPoly mono_times_var(const SpecHandle& spec, const Exponent& theta, int j) {
    int K = -1;
    for (int i = spec->nvars() - 1; i >= 0; --i) {
        if (theta[i] > 0) {
            K = i;
            break;
        }
    }
    if (K <= j) {  // x_j slots in at the end
        Exponent up = theta;
        up[j] += 1;
        return SkewPoly::monomial(spec, up);
    }
    Exponent head = theta;
    head[K] -= 1;
    PairRelation rel = spec->pair_relation(j, K);
    // x^theta x_j = (x^head * c) x_j x_K + x^head * tail
    SkewPoly out = poly_times_var(poly_times_var(mono_times_ring(spec, head, rel.c), j), K);
    out.add(mono_times_ring(spec, head, rel.tail.constant));
    for (int l = 0; l < spec->nvars(); ++l) {
        if (rel.tail.linear.empty() || rel.tail.linear[l].is_zero()) continue;
        out.add(poly_times_var(mono_times_ring(spec, head, rel.tail.linear[l]), l));
    }
    return out;
}

SkewPoly poly_times_var(const SkewPoly& f, int var) {
    SkewPoly out(f.spec());
    for (const auto& [e, c] : f.terms()) {
        SkewPoly piece = mono_times_var(f.spec(), e, var);
        for (const auto& [pe, pc] : piece.terms()) out.add_term(pe, c * pc);
    }
    return out;
}

}  // namespace

SkewPoly mono_times_mono(const SpecHandle& spec, const Exponent& alpha, const Exponent& beta) {
    if (alpha.size() != beta.size() || static_cast<int>(alpha.size()) != spec->nvars())
        throw ContractViolation("exponent length does not match the algebra");
    if (exp_is_zero(alpha)) return SkewPoly::monomial(spec, beta);
    if (exp_is_zero(beta)) return SkewPoly::monomial(spec, alpha);
    TermMap cached;
    if (spec->memo_lookup(alpha, beta, cached)) {
        SkewPoly out(spec);
        for (auto& [e, c] : cached) out.add_term(e, c);
        return out;
    }
    SkewPoly f = SkewPoly::monomial(spec, alpha);
    for (int j = 0; j < spec->nvars(); ++j)
        for (int k = 0; k < beta[j]; ++k) f = poly_times_var(f, j);
    spec->memo_store(alpha, beta, f.terms());
    return f;
}

MonoProduct c_of(const SpecHandle& spec, const Exponent& alpha, const Exponent& beta) {
    SkewPoly prod = mono_times_mono(spec, alpha, beta);
    Exponent full = exp_add(alpha, beta);
    MonoProduct out{spec->ring_zero(), SkewPoly(spec)};
    for (const auto& [e, c] : prod.terms()) {
        if (e == full)
            out.c = c;
        else
            out.tail.add_term(e, c);
    }
    if (out.c.is_zero()) throw InternalError("c_{alpha,beta} vanished; presentation is inconsistent");
    return out;
}

SkewPoly poly_add(const SkewPoly& f, const SkewPoly& g) {
    if (f.spec() != g.spec()) throw ContractViolation("mixed algebra specs");
    SkewPoly out = f;
    out.add(g);
    return out;
}

SkewPoly poly_sub(const SkewPoly& f, const SkewPoly& g) { return poly_add(f, poly_neg(g)); }

SkewPoly poly_neg(const SkewPoly& f) {
    SkewPoly out(f.spec());
    for (const auto& [e, c] : f.terms()) out.add_term(e, -c);
    return out;
}

SkewPoly poly_left_scale(const RingElem& r, const SkewPoly& f) {
    SkewPoly out(f.spec());
    if (r.is_zero()) return out;
    for (const auto& [e, c] : f.terms()) out.add_term(e, r * c);
    return out;
}

SkewPoly poly_mul(const SkewPoly& f, const SkewPoly& g) {
    if (f.spec() != g.spec()) throw ContractViolation("mixed algebra specs");
    const SpecHandle& spec = f.spec();
    SkewPoly out(spec);
    for (const auto& [a, r] : f.terms()) {
        for (const auto& [b, s] : g.terms()) {
            // (r x^a)(s x^b) = r (x^a s) x^b
            SkewPoly mid = mono_times_ring(spec, a, s);
            for (const auto& [m, u] : mid.terms()) {
                SkewPoly prod = mono_times_mono(spec, m, b);
                for (const auto& [e, c] : prod.terms()) out.add_term(e, (r * u) * c);
            }
        }
    }
    return out;
}

std::optional<std::pair<Exponent, RingElem>> poly_leading(const SkewPoly& f,
                                                          const OrderSpec& order) {
    if (f.is_zero()) return std::nullopt;
    const Exponent* best = nullptr;
    for (const auto& [e, c] : f.terms()) {
        if (!best || cmp_mon(order, e, *best) == Cmp::GT) best = &e;
    }
    return std::make_pair(*best, f.terms().at(*best));
}

// ---- validation ---------------------------------------------------------

std::vector<std::string> validate_spec(const SpecHandle& spec) {
    std::vector<std::string> diags;
    const AlgebraSpec& s = *spec;
    const int n = s.nvars();

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s.vars[i] == s.vars[j]) diags.push_back("duplicate variable name " + s.vars[i]);
    if (s.base.kind == RingKind::Polynomials) {
        for (int i = 0; i < n; ++i)
            if (s.vars[i] == s.base.base_var)
                diags.push_back("extension variable shadows the base variable " + s.base.base_var);
        if (static_cast<int>(s.sigma.size()) != n || static_cast<int>(s.delta.size()) != n) {
            diags.push_back("sigma/delta tables do not cover every variable");
            return diags;
        }
    }

    bool structurally_ok = true;
    for (const auto& [ij, rel] : s.relations) {
        auto [i, j] = ij;
        if (!(0 <= i && i < j && j < n)) {
            diags.push_back("relation key out of range");
            structurally_ok = false;
            continue;
        }
        if (rel.c.is_zero()) {
            diags.push_back("relation constant c for (" + s.vars[i] + ", " + s.vars[j] +
                            ") is zero; every c_{i,j} must be nonzero");
            structurally_ok = false;
        }
        if (!rel.tail.linear.empty() && static_cast<int>(rel.tail.linear.size()) != n) {
            diags.push_back("relation tail has the wrong arity");
            structurally_ok = false;
        }
    }

    bool tails_zero = true, deltas_zero = true;
    for (const auto& [ij, rel] : s.relations)
        if (!rel.tail.is_zero()) tails_zero = false;
    if (s.base.kind == RingKind::Polynomials) {
        for (const auto& d : s.delta)
            if (!d.is_zero()) deltas_zero = false;
    }
    if (s.quasi_commutative && !(tails_zero && deltas_zero))
        diags.push_back("quasi_commutative flag set but some delta or relation tail is nonzero");

    bool sigmas_invertible = true, cs_unit = true;
    if (s.base.kind == RingKind::Polynomials)
        for (const auto& m : s.sigma)
            if (m.a == 0) sigmas_invertible = false;
    for (const auto& [ij, rel] : s.relations)
        if (!rel.c.is_unit()) cs_unit = false;
    if (s.bijective && !(sigmas_invertible && cs_unit))
        diags.push_back("bijective flag set but some sigma is not invertible or some c_{i,j} is not a unit");

    if (!structurally_ok) return diags;

    // Associativity probes. A consistent presentation normalizes both
    // bracketings to the same standard form.
    auto var_mono = [&](int i) {
        Exponent e(n, 0);
        e[i] = 1;
        return SkewPoly::monomial(spec, e);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                SkewPoly lhs = (var_mono(k) * var_mono(j)) * var_mono(i);
                SkewPoly rhs = var_mono(k) * (var_mono(j) * var_mono(i));
                if (lhs != rhs)
                    diags.push_back("associativity probe failed on (" + s.vars[k] + " " + s.vars[j] +
                                    ") " + s.vars[i]);
            }
        }
    }
    if (s.base.kind == RingKind::Polynomials) {
        SkewPoly t = SkewPoly::constant(spec, RingElem::variable_power(1));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                SkewPoly lhs = (var_mono(j) * var_mono(i)) * t;
                SkewPoly rhs = var_mono(j) * (var_mono(i) * t);
                if (lhs != rhs)
                    diags.push_back("associativity probe failed on (" + s.vars[j] + " " + s.vars[i] +
                                    ") " + s.base.base_var);
            }
        }
    }
    return diags;
}

// ---- presets ------------------------------------------------------------

namespace {

std::string rat_label(const Rational& q) {
    std::string s = q.str();
    return s;
}

}  // namespace

SpecHandle preset_heisenberg(int n, const Rational& q) {
    if (n < 1) throw ContractViolation("h_n requires n >= 1");
    if (q == 0) throw ContractViolation("h_n(q) requires q != 0");
    auto spec = std::make_shared<AlgebraSpec>();
    spec->base.kind = RingKind::Rationals;
    const int N = 3 * n;
    for (int i = 1; i <= n; ++i) spec->vars.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) spec->vars.push_back("y" + std::to_string(i));
    for (int i = 1; i <= n; ++i) spec->vars.push_back("z" + std::to_string(i));
    auto zero = RingElem::zero(RingKind::Rationals);
    auto rel = [&](int i, int j, const Rational& c, int tail_var) {
        PairRelation r;
        r.c = RingElem::constant(RingKind::Rationals, c);
        r.tail.constant = zero;
        r.tail.linear.assign(N, zero);
        if (tail_var >= 0) r.tail.linear[tail_var] = RingElem::one(RingKind::Rationals);
        spec->relations[{i, j}] = std::move(r);
    };
    for (int i = 0; i < n; ++i) {
        rel(i, n + i, q, -1);            // y_i x_i = q x_i y_i
        rel(i, 2 * n + i, 1 / q, n + i); // z_i x_i = q^{-1} x_i z_i + y_i
        rel(n + i, 2 * n + i, q, -1);    // z_i y_i = q y_i z_i
    }
    spec->quasi_commutative = false;
    spec->bijective = true;
    spec->name = "h" + std::to_string(n) + "(" + rat_label(q) + ")";
    return spec;
}

SpecHandle preset_multiplicative_weyl(int n, const std::vector<Rational>& lambdas) {
    if (n < 2) throw ContractViolation("O_n requires n >= 2");
    if (static_cast<int>(lambdas.size()) != n * (n - 1) / 2)
        throw ContractViolation("O_n expects n(n-1)/2 lambda parameters");
    for (const auto& l : lambdas)
        if (l == 0) throw ContractViolation("O_n lambdas must be nonzero");
    auto spec = std::make_shared<AlgebraSpec>();
    spec->base.kind = RingKind::Polynomials;
    spec->base.base_var = "x1";
    const int N = n - 1;  // extension variables x2..xn
    for (int i = 2; i <= n; ++i) spec->vars.push_back("x" + std::to_string(i));
    spec->sigma.assign(N, AffineMap{});
    spec->delta.assign(N, RingElem::zero(RingKind::Polynomials));
    // lambda_{ji} listed for j = 2..n, i = 1..j-1
    size_t pos = 0;
    std::string label;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i, ++pos) {
            if (!label.empty()) label += ",";
            label += rat_label(lambdas[pos]);
            if (i == 1) {
                spec->sigma[j - 2].a = lambdas[pos];  // x_j x_1 = lambda_{j1} x_1 x_j
            } else {
                PairRelation r;
                r.c = RingElem::constant(RingKind::Polynomials, lambdas[pos]);
                r.tail.constant = RingElem::zero(RingKind::Polynomials);
                r.tail.linear.assign(N, RingElem::zero(RingKind::Polynomials));
                spec->relations[{i - 2, j - 2}] = std::move(r);
            }
        }
    }
    spec->quasi_commutative = true;
    spec->bijective = true;
    spec->name = "O" + std::to_string(n) + "(" + label + ")";
    return spec;
}

SpecHandle preset_additive_weyl(int n, const std::vector<Rational>& qs) {
    if (n < 1) throw ContractViolation("A_n requires n >= 1");
    if (static_cast<int>(qs.size()) != n) throw ContractViolation("A_n expects n parameters");
    for (const auto& q : qs)
        if (q == 0) throw ContractViolation("A_n parameters must be nonzero");
    auto spec = std::make_shared<AlgebraSpec>();
    std::string label;
    for (const auto& q : qs) {
        if (!label.empty()) label += ",";
        label += rat_label(q);
    }
    if (n == 1) {
        spec->base.kind = RingKind::Polynomials;
        spec->base.base_var = "x1";
        spec->vars = {"y1"};
        spec->sigma = {AffineMap{qs[0], 0}};                    // sigma(x1) = q x1
        spec->delta = {RingElem::one(RingKind::Polynomials)};   // delta(x1) = 1
        spec->quasi_commutative = false;
        spec->bijective = true;
    } else {
        spec->base.kind = RingKind::Rationals;
        const int N = 2 * n;
        for (int i = 1; i <= n; ++i) spec->vars.push_back("x" + std::to_string(i));
        for (int i = 1; i <= n; ++i) spec->vars.push_back("y" + std::to_string(i));
        for (int i = 0; i < n; ++i) {
            PairRelation r;
            r.c = RingElem::constant(RingKind::Rationals, qs[i]);
            r.tail.constant = RingElem::one(RingKind::Rationals);  // y_i x_i = q_i x_i y_i + 1
            r.tail.linear.assign(N, RingElem::zero(RingKind::Rationals));
            spec->relations[{i, n + i}] = std::move(r);
        }
        spec->quasi_commutative = false;
        spec->bijective = true;
    }
    spec->name = "A" + std::to_string(n) + "(" + label + ")";
    return spec;
}

SpecHandle preset_shift(const Rational& h) {
    auto spec = std::make_shared<AlgebraSpec>();
    spec->base.kind = RingKind::Polynomials;
    spec->base.base_var = "t";
    spec->vars = {"x"};
    spec->sigma = {AffineMap{1, -h}};  // sigma(t) = t - h
    spec->delta = {RingElem::zero(RingKind::Polynomials)};
    spec->quasi_commutative = true;
    spec->bijective = true;
    spec->name = "S" + std::string("h(") + rat_label(h) + ")";
    return spec;
}

}  // namespace skewgb
