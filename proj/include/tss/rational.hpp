#ifndef TSS_RATIONAL_HPP
#define TSS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace tss {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& q) { return q.sign(); }

Integer floor_of(const Rational& q);

// b^e for integer e (negative allowed; b must be nonzero then).
Rational pow_rational(const Rational& base, long exponent);

// Exact n-th root when it exists (n >= 1). Negative bases only for odd n.
std::optional<Rational> nth_root_exact(const Rational& value, unsigned n);

// Generalized binomial coefficient C(r, n) = r(r-1)...(r-n+1)/n!.
Rational binomial_coefficient(const Rational& r, unsigned n);

Integer factorial(unsigned n);

std::string to_string(const Rational& q);

}  // namespace tss

#endif  // TSS_RATIONAL_HPP
