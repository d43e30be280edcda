#pragma once

#include <string>

#include "skewgb/modvector.hpp"
#include "skewgb/syzygy.hpp"

namespace skewgb {

// ---- canonical rendering ------------------------------------------------
// Rationals print as p/q with the denominator omitted when 1. Ring elements
// print as sums of c*t^k in decreasing k with ^1 and unit coefficients
// suppressed and the sign attached to the coefficient. Polynomials and
// vectors print their terms in decreasing monomial order; module monomials
// render as x1^a1*x2^a2*...*e<k> with zero exponents omitted.

std::string to_string(const Rational& q);
std::string render_ring(const RingSpec& spec, const RingElem& e);
std::string render_mono(const AlgebraSpec& spec, const Exponent& e);
std::string render_modmon(const AlgebraSpec& spec, const ModMonomial& m);
std::string render_poly(const SkewPoly& f, const OrderSpec& order);
std::string render_vector(const ModVector& f, const OrderSpec& order);
/// "(p1, p2, ..., pt)"
std::string render_column(const CoeffColumn& col, const OrderSpec& order);

// ---- parsing --------------------------------------------------------------

Rational parse_rational(const std::string& text);

/// Parses a vector expression: a sum of signed terms, each term a
/// '*'-separated product of rationals, variable powers (base and extension
/// variables in any order; normalized through the rewriting engine) and
/// exactly one trailing basis symbol e<k>.
ModVector parse_vector(const std::string& text, const SpecHandle& spec, int rank);

/// Parses the sectioned presentation format ([ring], [variables],
/// [sigma.<var>], [delta.<var>], [relation.<xj>.<xi>], [flags]) and
/// validates it; diagnostics are fatal.
SpecHandle parse_algebra(const std::string& text);

/// Resolves "preset:<name>(<args>)" against the compiled-in catalog
/// (h<n>, o<n>, a<n>, sh) or reads and parses a presentation file.
SpecHandle load_algebra(const std::string& source);

}  // namespace skewgb
