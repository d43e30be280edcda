// Acceptance suite: reproduces the worked division, completion and syzygy
// examples exactly (all arithmetic is exact rational; every comparison is
// exact equality) and runs the randomized property suites. One line per
// criterion; the process exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "skewgb/cli.hpp"
#include "skewgb/syzygy.hpp"
#include "test_util.hpp"

using namespace skewgb;
using namespace skewgb::testutil;
using namespace skewgb::fixtures;

namespace {

struct Criterion {
    std::vector<std::string> failures;
    long cases = 0;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok) failures.push_back(what);
    }
};

int g_failed = 0;

void run(int number, const std::string& label, double limit_seconds,
         const std::function<void(Criterion&)>& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = c.failures.empty() && (limit_seconds <= 0 || secs < limit_seconds);
    std::printf("[%s] criterion %d: %s (%ld checks, %.3f s%s)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), c.cases, secs,
                limit_seconds > 0 ? (" < " + std::to_string((int)limit_seconds) + " s limit").c_str()
                                  : "");
    if (!ok) {
        ++g_failed;
        for (size_t i = 0; i < c.failures.size() && i < 8; ++i)
            std::printf("       - %s\n", c.failures[i].c_str());
        if (limit_seconds > 0 && secs >= limit_seconds) std::printf("       - time limit exceeded\n");
    }
}

ModVector expand(const std::vector<ModVector>& F, const std::vector<SkewPoly>& q, ModVector base) {
    for (size_t i = 0; i < F.size(); ++i)
        if (!q[i].is_zero()) base.add(poly_times_vector(q[i], F[i]));
    return base;
}

// ---- criterion 1: the division example ------------------------------------

void criterion1(Criterion& c) {
    DivisionExample ex;
    std::vector<ModVector> F{ex.f1, ex.f2};
    DivisionResult res = division(ex.f, F, ex.order);

    c.expect(expand(F, res.quotients, res.remainder) == ex.f, "f = q1 f1 + q2 f2 + h identity");
    c.expect(!reduce_step(res.remainder, F, ex.order).has_value(), "remainder reduced w.r.t. F");
    // max-formula
    std::optional<ModMonomial> mx;
    auto consider = [&](const ModMonomial& m) {
        if (!mx || cmp_modmon(ex.order, m, *mx) == Cmp::GT) mx = m;
    };
    for (size_t i = 0; i < F.size(); ++i) {
        if (res.quotients[i].is_zero()) continue;
        auto lq = poly_leading(res.quotients[i], ex.order);
        Leading lf = *leading(F[i], ex.order);
        consider(ModMonomial{exp_add(lq->first, lf.lm.exp), lf.lm.index});
    }
    if (!res.remainder.is_zero()) consider(leading(res.remainder, ex.order)->lm);
    c.expect(mx && *mx == leading(ex.f, ex.order)->lm, "division max formula");
    // frozen default selection rule
    c.expect(res.quotients[0].is_zero(), "q1 = 0 under the default rule");
    c.expect(res.quotients[1] == ex.q2, "q2 = xz - 1/2 y under the default rule");
    c.expect(res.remainder == ex.h, "remainder equals the printed value exactly");
    // the printed triple reconstructs f independently
    ModVector printed = ex.h;
    printed.add(poly_times_vector(ex.q2, ex.f2));
    c.expect(printed == ex.f, "printed (q1, q2, h) reconstructs f");
}

// ---- criterion 2: the completion example ----------------------------------

void criterion2(Criterion& c) {
    CompletionExample ex;
    std::vector<ModVector> F{ex.f1, ex.f2};
    GBResult gb = buchberger(F, ex.order);
    c.expect(gb.basis.size() == 3, "exactly three basis elements");
    if (gb.basis.size() == 3) {
        c.expect(gb.basis[0] == ex.f1 && gb.basis[1] == ex.f2, "inputs retained in place");
        c.expect(gb.basis[2] == ex.f3,
                 "third element equals 12 x2 x3^2 e2 - 9/4 x1 x2^2 e2 exactly");
    }
    c.expect(is_groebner(gb.basis, ex.order), "is_groebner accepts the result");
    GBResult again = buchberger(gb.basis, ex.order);
    c.expect(again.basis.size() == gb.basis.size(), "a second completion pass adds nothing");
}

// ---- criterion 3: the syzygy example --------------------------------------

void criterion3(Criterion& c) {
    CompletionExample ex;
    SyzygyMatrices syz = syz_module({ex.f1, ex.f2}, ex.order);

    c.expect(syz.z_leading.size() == 1, "Z(L_G) has one column");
    if (syz.z_leading.size() == 1) {
        c.expect(syz.z_leading[0][0] == SkewPoly::term(ex.spec, tp(4, 1, 0), {0, 1}) &&
                     syz.z_leading[0][1] == SkewPoly::term(ex.spec, tp(-9, 4, 1), {1, 0}) &&
                     syz.z_leading[0][2].is_zero(),
                 "Z(L_G) = (4 x3, -9/4 x1 x2, 0)^T");
    }
    c.expect(syz.p.size() == 1, "P has one column");
    if (syz.p.size() == 1) {
        c.expect(syz.p[0][0].is_zero() && syz.p[0][1].is_zero() &&
                     syz.p[0][2] == SkewPoly::one(ex.spec),
                 "P = (0, 0, 1)^T");
    }
    c.expect(syz.z_basis.size() == 1, "Z(G) has one column");
    if (syz.z_basis.size() == 1) {
        c.expect(syz.z_basis[0][0] == SkewPoly::term(ex.spec, tp(4, 1, 0), {0, 1}) &&
                     syz.z_basis[0][1] == SkewPoly::term(ex.spec, tp(-9, 4, 1), {1, 0}) &&
                     syz.z_basis[0][2] == SkewPoly::constant(ex.spec, tp(-1, 1, 0)),
                 "Z(G) = (4 x3, -9/4 x1 x2, -1)^T");
    }
    // H and Q equal the worked matrices
    c.expect(syz.h_cols.size() == 3 && syz.h_cols[0][0] == SkewPoly::one(ex.spec) &&
                 syz.h_cols[0][1].is_zero() && syz.h_cols[1][0].is_zero() &&
                 syz.h_cols[1][1] == SkewPoly::one(ex.spec) &&
                 syz.h_cols[2][0] == SkewPoly::term(ex.spec, tp(4, 1, 0), {0, 1}) &&
                 syz.h_cols[2][1] == SkewPoly::term(ex.spec, tp(-9, 4, 1), {1, 0}),
             "H equals the worked matrix");
    c.expect(syz.q_cols.size() == 2 && syz.q_cols[0][0] == SkewPoly::one(ex.spec) &&
                 syz.q_cols[0][1].is_zero() && syz.q_cols[0][2].is_zero() &&
                 syz.q_cols[1][0].is_zero() && syz.q_cols[1][1] == SkewPoly::one(ex.spec) &&
                 syz.q_cols[1][2].is_zero(),
             "Q equals the worked matrix");
    c.expect(syz.z_module.empty(), "Z(F) is empty");

    // the freeness note is reported
    SessionConfig cfg;
    cfg.algebra = "preset:o3(2,1/2,3)";
    cfg.rank = 2;
    Report rep = run_command("syzygy", cfg,
                             {"x1^2*x2^2*e1 + x2*x3*e2", "2*x1*x2*x3*e1 + x2*e2"});
    bool noted = false;
    for (const auto& l : rep.lines)
        if (l.find("Syz(F) = 0") != std::string::npos) noted = true;
    c.expect(rep.exit_code == kOk && noted, "CLI reports Syz(F) = 0 (module is free)");
}

// ---- criterion 4: randomized property suite --------------------------------

void criterion4(Criterion& c) {
    std::vector<SpecHandle> presets = {
        preset_heisenberg(1, Rational(2)),
        preset_multiplicative_weyl(3, {Rational(2), Rational(1, 2), Rational(3)}),
        preset_additive_weyl(2, {Rational(2), Rational(3)}),
    };
    for (const auto& spec : presets) {
        Rng rng(0x5eed0 + spec->nvars());
        OrderSpec order = default_order(spec->nvars(), 2);
        const int n = spec->nvars();
        long preset_cases = 0;
        for (int it = 0; it < 1000; ++it) {
            // normal-form shape
            Exponent a = rnd_exp(rng, n, 4);
            Exponent b = rnd_exp(rng, n, 4);
            RingElem r = rnd_ring_nonzero(rng, spec->base.kind, 2);
            SkewPoly p = mono_times_ring(spec, a, r);
            SkewPoly tail = p - SkewPoly::term(spec, sigma_alpha(*spec, a, r), a);
            bool shape = tail.is_zero() || tail.total_degree() < exp_degree(a);
            if (spec->quasi_commutative) shape = shape && tail.is_zero();
            MonoProduct mp = c_of(spec, a, b);
            bool shape2 = mp.tail.is_zero() ||
                          mp.tail.total_degree() < exp_degree(a) + exp_degree(b);
            if (spec->quasi_commutative) shape2 = shape2 && mp.tail.is_zero();
            c.expect(shape && shape2 && !mp.c.is_zero(), "normal-form shape");
            ++preset_cases;

            // twist-constant coherence identities
            Exponent th = rnd_exp(rng, n, 4), ga = rnd_exp(rng, n, 4), be = rnd_exp(rng, n, 4);
            RingElem cc = rnd_ring(rng, spec->base.kind, 2);
            RingElem c_ga_be = c_of(spec, ga, be).c;
            RingElem c_th_gabe = c_of(spec, th, exp_add(ga, be)).c;
            RingElem c_th_ga = c_of(spec, th, ga).c;
            RingElem c_thga_be = c_of(spec, exp_add(th, ga), be).c;
            c.expect(sigma_alpha(*spec, th, c_ga_be) * c_th_gabe == c_th_ga * c_thga_be,
                     "first twist coherence identity");
            c.expect(sigma_alpha(*spec, th, sigma_alpha(*spec, ga, cc)) * c_th_ga ==
                         c_th_ga * sigma_alpha(*spec, exp_add(th, ga), cc),
                     "second twist coherence identity");
            preset_cases += 2;

            if (it % 5 == 0) {  // associativity on random triples
                SkewPoly f = rnd_poly(rng, spec, 2, 3, 1);
                SkewPoly g = rnd_poly(rng, spec, 2, 3, 1);
                SkewPoly h = rnd_poly(rng, spec, 2, 3, 1);
                c.expect(poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h)),
                         "multiplication associativity");
                ++preset_cases;
            }
            if (it % 5 == 1) {  // division contract + strict descent
                ModVector f = rnd_vec(rng, spec, 2, 3, 4, 1);
                std::vector<ModVector> F;
                int nf = uniform(rng, 1, 2);
                for (int i = 0; i < nf; ++i) F.push_back(rnd_vec_nonzero(rng, spec, 2, 2, 3, 1));
                DivisionResult res = division(f, F, order);
                c.expect(expand(F, res.quotients, res.remainder) == f, "division identity");
                c.expect(!reduce_step(res.remainder, F, order).has_value(),
                         "division remainder reduced");
                // strict descent of every step
                ModVector h2 = f;
                bool descent = true;
                int guard = 0;
                while (auto st = reduce_step(h2, F, order)) {
                    if (!st->first.is_zero() &&
                        cmp_modmon(order, leading(h2, order)->lm, leading(st->first, order)->lm) !=
                            Cmp::GT)
                        descent = false;
                    h2 = st->first;
                    if (++guard > 5000) {
                        descent = false;
                        break;
                    }
                }
                c.expect(descent, "strict lm-descent of every reduction step");
                if (!f.is_zero()) {
                    std::optional<ModMonomial> mx;
                    auto consider = [&](const ModMonomial& m) {
                        if (!mx || cmp_modmon(order, m, *mx) == Cmp::GT) mx = m;
                    };
                    for (size_t i = 0; i < F.size(); ++i) {
                        if (res.quotients[i].is_zero()) continue;
                        auto lq = poly_leading(res.quotients[i], order);
                        Leading lf = *leading(F[i], order);
                        consider(ModMonomial{exp_add(lq->first, lf.lm.exp), lf.lm.index});
                    }
                    if (!res.remainder.is_zero()) consider(leading(res.remainder, order)->lm);
                    c.expect(mx && *mx == leading(f, order)->lm, "division max formula");
                }
                preset_cases += 3;
            }
        }
        if (preset_cases < 1000)
            c.failures.push_back("fewer than 1000 cases for preset " + spec->name);
    }
}

// ---- criterion 5: Groebner soundness suite ----------------------------------

void criterion5(Criterion& c) {
    CompletionExample ex;
    std::vector<ModVector> F{ex.f1, ex.f2};
    GBResult gb = buchberger(F, ex.order);
    Rng rng(0xacce55);

    for (int it = 0; it < 100; ++it) {
        ModVector f = ModVector::zero(ex.spec, 2);
        for (const auto& g : F) f.add(poly_times_vector(rnd_poly(rng, ex.spec, 2, 2, 2), g));
        auto comb = member(f, gb, ex.order);
        c.expect(comb.has_value(), "member accepts an A-combination of the generators");
        if (comb) c.expect(expand(gb.basis, *comb, ModVector::zero(ex.spec, 2)) == f,
                           "combination reconstructs the input exactly");
    }

    std::vector<ModMonomial> basis_lms;
    for (const auto& g : gb.basis) basis_lms.push_back(leading(g, ex.order)->lm);
    int rejected = 0, guard = 0;
    while (rejected < 20 && ++guard < 100000) {
        ModVector v = rnd_vec_nonzero(rng, ex.spec, 2, 2, 4, 2);
        ModMonomial lm = leading(v, ex.order)->lm;
        bool divisible = false;
        for (const auto& m : basis_lms)
            if (divides(m, lm)) divisible = true;
        if (divisible) continue;
        ++rejected;
        c.expect(!member(v, gb, ex.order).has_value(),
                 "member rejects a vector with an irreducible leading monomial");
    }
    c.expect(rejected == 20, "generated 20 rejection witnesses");
}

// ---- criterion 6: syzygy annihilation suite ----------------------------------

void criterion6(Criterion& c) {
    auto o3 = preset_multiplicative_weyl(3, {Rational(2), Rational(1, 2), Rational(3)});
    auto sh = preset_shift(Rational(1));
    Rng rng(0x5a5a);
    for (int it = 0; it < 25; ++it) {
        const SpecHandle& spec = (it % 2 == 0) ? o3 : sh;
        int rank = uniform(rng, 1, 3);
        int s = uniform(rng, 1, 3);
        OrderSpec order = default_order(spec->nvars(), rank);
        std::vector<ModVector> F;
        for (int i = 0; i < s; ++i) F.push_back(rnd_vec_nonzero(rng, spec, rank, 2, 3, 1));
        SyzygyMatrices syz = syz_module(F, order);

        std::vector<ModVector> lt;
        for (const auto& g : syz.G) {
            Leading l = *leading(g, order);
            lt.push_back(ModVector::term(spec, rank, l.lc, l.lm));
        }
        for (const auto& col : syz.z_leading)
            c.expect(apply_presentation(lt, col).is_zero(), "Z(L_G) column annihilates L_G");
        for (const auto& col : syz.z_basis)
            c.expect(apply_presentation(syz.G, col).is_zero(), "Z(G) column annihilates G");
        for (const auto& col : syz.z_module)
            c.expect(apply_presentation(F, col).is_zero(), "Z(F) column annihilates F");

        // both assembly blocks annihilate F, before assembly
        const size_t t = syz.G.size();
        for (const auto& z : syz.z_basis) {
            CoeffColumn a(F.size(), SkewPoly::zero(spec));
            for (size_t i = 0; i < t; ++i)
                for (size_t j = 0; j < F.size(); ++j) a[j] = a[j] + poly_mul(z[i], syz.h_cols[i][j]);
            c.expect(apply_presentation(F, a).is_zero(), "(Z(G)^T H^T)^T F^T = 0");
        }
        for (size_t k = 0; k < F.size(); ++k) {
            CoeffColumn a(F.size(), SkewPoly::zero(spec));
            a[k] = SkewPoly::one(spec);
            for (size_t i = 0; i < t; ++i)
                for (size_t j = 0; j < F.size(); ++j)
                    a[j] = a[j] - poly_mul(syz.q_cols[k][i], syz.h_cols[i][j]);
            c.expect(apply_presentation(F, a).is_zero(), "(I_s - Q^T H^T)^T F^T = 0");
        }
    }
}

}  // namespace

int main() {
    run(1, "division example in h1(2), frozen default rule, exact remainder", 1.0, criterion1);
    run(2, "completion example in O3(2,1/2,3), exact third element", 1.0, criterion2);
    run(3, "syzygy example: Z(L_G), Z(G), P, H, Q exact; Syz(F) = 0", 1.0, criterion3);
    run(4, "property suite (>= 1000 cases per preset, exact)", 0, criterion4);
    run(5, "Groebner soundness: 100 members accepted, 20 non-members rejected", 0, criterion5);
    run(6, "syzygy annihilation on 25 random quasi-commutative inputs", 300.0, criterion6);
    return g_failed;
}
