#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skewgb {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator; zero is 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_negative(const Rational& q) { return q.sign() < 0; }

}  // namespace skewgb
