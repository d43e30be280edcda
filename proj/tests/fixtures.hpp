#pragma once

// Shared worked-example fixtures: the division example in h1(2) and the
// completion/syzygy example in O3(2, 1/2, 3).

#include "skewgb/modvector.hpp"

namespace skewgb::fixtures {

inline RingElem rr(int num, int den = 1) {
    return RingElem::constant(RingKind::Rationals, Rational(num, den));
}
inline RingElem tp(int num, int den, int power) {
    return RingElem::variable_power(power, Rational(num, den));
}

// ---- h1(2) division example: f = q1 f1 + q2 f2 + h ------------------------

struct DivisionExample {
    SpecHandle spec = preset_heisenberg(1, Rational(2));
    OrderSpec order = default_order(3, 3);  // deglex x > y > z, TOPREV e1 > e2 > e3
    ModVector f{spec, 3}, f1{spec, 3}, f2{spec, 3};
    ModVector h1{spec, 3};  // after the first step
    ModVector h{spec, 3};   // final remainder
    SkewPoly q2{spec};      // x z - 1/2 y (and q1 = 0)

    DivisionExample() {
        f.add_term({{2, 1, 1}, 1}, rr(1));   // x^2 y z e1
        f.add_term({{0, 2, 1}, 2}, rr(1));   // y^2 z e2
        f.add_term({{1, 0, 1}, 1}, rr(1));   // x z e1
        f.add_term({{0, 0, 2}, 3}, rr(1));   // z^2 e3

        f1.add_term({{1, 0, 1}, 1}, rr(1));  // x z e1
        f1.add_term({{1, 0, 0}, 3}, rr(1));  // x e3
        f1.add_term({{0, 1, 0}, 2}, rr(1));  // y e2

        f2.add_term({{1, 1, 0}, 1}, rr(1));  // x y e1
        f2.add_term({{0, 0, 1}, 2}, rr(1));  // z e2
        f2.add_term({{0, 0, 1}, 3}, rr(1));  // z e3

        h1.add_term({{1, 2, 0}, 1}, rr(-1));  // -x y^2 e1
        h1.add_term({{1, 0, 2}, 2}, rr(-1));  // -x z^2 e2
        h1.add_term({{1, 0, 2}, 3}, rr(-1));  // -x z^2 e3
        h1.add_term({{0, 2, 1}, 2}, rr(1));   // y^2 z e2
        h1.add_term({{1, 0, 1}, 1}, rr(1));   // x z e1
        h1.add_term({{0, 0, 2}, 3}, rr(1));   // z^2 e3

        h.add_term({{1, 0, 2}, 2}, rr(-1));    // -x z^2 e2
        h.add_term({{1, 0, 2}, 3}, rr(-1));    // -x z^2 e3
        h.add_term({{0, 2, 1}, 2}, rr(1));     // y^2 z e2
        h.add_term({{1, 0, 1}, 1}, rr(1));     // x z e1
        h.add_term({{0, 1, 1}, 2}, rr(1, 2));  // 1/2 y z e2
        h.add_term({{0, 1, 1}, 3}, rr(1, 2));  // 1/2 y z e3
        h.add_term({{0, 0, 2}, 3}, rr(1));     // z^2 e3

        q2.add_term({1, 0, 1}, rr(1));
        q2.add_term({0, 1, 0}, rr(-1, 2));
    }
};

// ---- O3(2, 1/2, 3) completion example --------------------------------------

struct CompletionExample {
    SpecHandle spec = preset_multiplicative_weyl(3, {Rational(2), Rational(1, 2), Rational(3)});
    OrderSpec order = default_order(2, 2);  // deglex x2 > x3, TOPREV e1 > e2
    ModVector f1{spec, 2}, f2{spec, 2}, f3{spec, 2};

    CompletionExample() {
        f1.add_term({{2, 0}, 1}, tp(1, 1, 2));  // x1^2 x2^2 e1
        f1.add_term({{1, 1}, 2}, tp(1, 1, 0));  // x2 x3 e2

        f2.add_term({{1, 1}, 1}, tp(2, 1, 1));  // 2 x1 x2 x3 e1
        f2.add_term({{1, 0}, 2}, tp(1, 1, 0));  // x2 e2

        f3.add_term({{1, 2}, 2}, tp(12, 1, 0));  // 12 x2 x3^2 e2
        f3.add_term({{2, 0}, 2}, tp(-9, 4, 1));  // -9/4 x1 x2^2 e2
    }
};

}  // namespace skewgb::fixtures
