#ifndef CLAW_RATIONAL_HPP
#define CLAW_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace claw {

// Exact arithmetic for symbolic work. Floating point appears only in eval().
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

/// q^k with an integer exponent, exact. Throws on 0^negative.
Rational rational_pow(const Rational& q, int k);

} // namespace claw

#endif // CLAW_RATIONAL_HPP
