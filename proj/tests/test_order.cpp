#include <doctest.h>

#include "skewgb/modvector.hpp"
#include "test_util.hpp"

using namespace skewgb;
using namespace skewgb::testutil;

namespace {

SpecHandle o3() { return preset_multiplicative_weyl(3, {Rational(2), Rational(1, 2), Rational(3)}); }
SpecHandle h1() { return preset_heisenberg(1, Rational(2)); }

RingElem t(int num, int den, int power) { return RingElem::variable_power(power, Rational(num, den)); }

}  // namespace

TEST_CASE("cmp_mon deglex") {
    OrderSpec o3v = default_order(3, 3);
    SUBCASE("degree decides first") {
        CHECK(cmp_mon(o3v, {2, 1, 1}, {1, 2, 0}) == Cmp::GT);  // x^2yz vs xy^2
    }
    SUBCASE("lex tie-break along the precedence") {
        OrderSpec o2v = default_order(2, 2);  // x2 > x3 for the O3 variables
        CHECK(cmp_mon(o2v, {1, 1}, {2, 0}) == Cmp::LT);  // x2x3 < x2^2
    }
    SUBCASE("reflexive equality") {
        Exponent a{1, 2, 0};
        CHECK(cmp_mon(o3v, a, a) == Cmp::EQ);
    }
    SUBCASE("precedence permutation changes the tie-break") {
        OrderSpec rev = default_order(2, 1);
        rev.precedence = {1, 0};  // x3 > x2
        CHECK(cmp_mon(rev, {1, 1}, {2, 0}) == Cmp::GT);
    }
}

TEST_CASE("cmp_modmon TOP and TOPREV") {
    OrderSpec ord = default_order(3, 3);  // TOPREV e1 > e2 > e3
    SUBCASE("monomial decides first") {
        CHECK(cmp_modmon(ord, {{2, 1, 1}, 1}, {{0, 2, 1}, 2}) == Cmp::GT);
    }
    SUBCASE("TOPREV tie-break prefers the smaller index") {
        CHECK(cmp_modmon(ord, {{1, 0, 0}, 1}, {{1, 0, 0}, 2}) == Cmp::GT);
    }
    SUBCASE("TOP tie-break prefers the larger index") {
        OrderSpec top = default_order(3, 3, ModuleOrder::TOP);
        CHECK(cmp_modmon(top, {{1, 0, 0}, 1}, {{1, 0, 0}, 2}) == Cmp::LT);
        CHECK(cmp_modmon(top, {{1, 0, 0}, 3}, {{1, 0, 0}, 2}) == Cmp::GT);
    }
    SUBCASE("reversed basis direction flips the tie-break") {
        OrderSpec rev = default_order(3, 3, ModuleOrder::TOPREV, true);  // e3 > e2 > e1
        CHECK(cmp_modmon(rev, {{1, 0, 0}, 1}, {{1, 0, 0}, 2}) == Cmp::LT);
    }
    SUBCASE("within the same index, degree decides") {
        OrderSpec o2 = default_order(2, 2);
        CHECK(cmp_modmon(o2, {{1, 2}, 2}, {{1, 0}, 2}) == Cmp::GT);  // x2x3^2 e2 > x2 e2
    }
}

TEST_CASE("divides and lcm") {
    SUBCASE("x2x3 e1 into x2^2x3 e1 leaves (1,0)") {
        auto th = divides(ModMonomial{{1, 1}, 1}, ModMonomial{{2, 1}, 1});
        REQUIRE(th);
        CHECK(*th == Exponent{1, 0});
    }
    SUBCASE("index mismatch") {
        CHECK(!divides(ModMonomial{{0, 0}, 1}, ModMonomial{{1, 1}, 2}));
        CHECK(!lcm_mod(ModMonomial{{1, 0}, 1}, ModMonomial{{0, 1}, 2}));
    }
    SUBCASE("self division and lcm") {
        ModMonomial a{{2, 1}, 1};
        auto th = divides(a, a);
        REQUIRE(th);
        CHECK(exp_is_zero(*th));
        auto l = lcm_mod(a, a);
        REQUIRE(l);
        CHECK(*l == a);
    }
    SUBCASE("componentwise max") {
        auto l = lcm_mod(ModMonomial{{2, 0}, 1}, ModMonomial{{1, 1}, 1});
        REQUIRE(l);
        CHECK(*l == ModMonomial{{2, 1}, 1});
    }
}

TEST_CASE("leading data") {
    OrderSpec ord = default_order(3, 3);
    auto spec = h1();
    SUBCASE("worked division example input") {
        ModVector f(spec, 3);
        f.add_term({{2, 1, 1}, 1}, RingElem::one(RingKind::Rationals));
        f.add_term({{0, 2, 1}, 2}, RingElem::one(RingKind::Rationals));
        f.add_term({{1, 0, 1}, 1}, RingElem::one(RingKind::Rationals));
        f.add_term({{0, 0, 2}, 3}, RingElem::one(RingKind::Rationals));
        Leading l = *leading(f, ord);
        CHECK(l.lm == ModMonomial{{2, 1, 1}, 1});
        CHECK(l.lc == RingElem::one(RingKind::Rationals));
    }
    SUBCASE("zero vector has the zero marker") {
        CHECK(!leading(ModVector::zero(spec, 3), ord));
    }
    SUBCASE("f3 of the completed basis") {
        auto o = o3();
        OrderSpec ord2 = default_order(2, 2);
        ModVector f3(o, 2);
        f3.add_term({{1, 2}, 2}, t(12, 1, 0));
        f3.add_term({{2, 0}, 2}, t(-9, 4, 1));
        Leading l = *leading(f3, ord2);
        CHECK(l.lm == ModMonomial{{1, 2}, 2});
        CHECK(l.lc == t(12, 1, 0));
    }
}

TEST_CASE("order laws on random monomials") {
    Rng rng(20240816);
    OrderSpec ord = default_order(3, 3);
    for (int it = 0; it < 400; ++it) {
        ModMonomial a{rnd_exp(rng, 3, 5), uniform(rng, 1, 3)};
        ModMonomial b{rnd_exp(rng, 3, 5), uniform(rng, 1, 3)};
        ModMonomial c{rnd_exp(rng, 3, 5), uniform(rng, 1, 3)};
        Cmp ab = cmp_modmon(ord, a, b), ba = cmp_modmon(ord, b, a);
        // totality and antisymmetry
        CHECK((ab == Cmp::EQ) == (a == b));
        if (ab == Cmp::GT) CHECK(ba == Cmp::LT);
        if (ab == Cmp::LT) CHECK(ba == Cmp::GT);
        // transitivity
        if (ab != Cmp::LT && cmp_modmon(ord, b, c) != Cmp::LT) CHECK(cmp_modmon(ord, a, c) != Cmp::LT);
        // degree compatibility
        if (exp_degree(a.exp) > exp_degree(b.exp)) CHECK(ab == Cmp::GT);
    }
}

TEST_CASE("order respects left multiplication by monomials") {
    Rng rng(20240817);
    for (const auto& spec : {h1(), o3()}) {
        const int n = spec->nvars();
        OrderSpec ord = default_order(n, 2);
        for (int it = 0; it < 200; ++it) {
            Exponent ga = rnd_exp(rng, n, 3);
            ModMonomial a{rnd_exp(rng, n, 3), uniform(rng, 1, 2)};
            ModMonomial b{rnd_exp(rng, n, 3), uniform(rng, 1, 2)};
            // lm(x^g x^a) e_i >= x^a e_i, with the product normalized
            // through the engine
            auto lift = poly_leading(mono_times_mono(spec, ga, a.exp), ord);
            REQUIRE(lift);
            ModMonomial lifted{lift->first, a.index};
            CHECK(lifted.exp == exp_add(ga, a.exp));
            CHECK(cmp_modmon(ord, lifted, a) != Cmp::LT);
            // monotone under left multiplication
            if (cmp_modmon(ord, a, b) != Cmp::LT) {
                ModMonomial la{exp_add(ga, a.exp), a.index};
                ModMonomial lb{exp_add(ga, b.exp), b.index};
                CHECK(cmp_modmon(ord, la, lb) != Cmp::LT);
            }
            // lm(x^a g) = x^{a + exp(lm g)}
            SkewPoly g = rnd_poly_nonzero(rng, spec, 3, 3);
            auto lg = poly_leading(g, ord);
            SkewPoly prod = poly_mul(SkewPoly::monomial(spec, ga), g);
            auto lp = poly_leading(prod, ord);
            REQUIRE(lp);
            CHECK(lp->first == exp_add(ga, lg->first));
        }
    }
}
