#include "tss/rational.hpp"

#include "tss/error.hpp"

#include <sstream>

namespace tss {

Integer floor_of(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  Integer quot = num / den;
  if (num < 0 && quot * den != num) --quot;
  return quot;
}

Rational pow_rational(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base.is_zero()) {
    if (exponent < 0) fail(errc::division_by_zero, "0 cannot be raised to a negative power");
    return Rational(0);
  }
  unsigned long mag = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1
                                   : static_cast<unsigned long>(exponent);
  Rational acc(1);
  Rational cur = base;
  while (mag != 0) {
    if (mag & 1u) acc *= cur;
    cur *= cur;
    mag >>= 1u;
  }
  if (exponent < 0) acc = Rational(1) / acc;
  return acc;
}

namespace {

// Exact integer n-th root of a non-negative integer, if one exists.
std::optional<Integer> integer_nth_root(const Integer& value, unsigned n) {
  if (value < 0) return std::nullopt;
  if (value == 0 || value == 1 || n == 1) return value;
  Integer lo = 0;
  Integer hi = 1;
  while (boost::multiprecision::pow(hi, n) < value) hi <<= 1;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, n) < value)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (boost::multiprecision::pow(lo, n) == value) return lo;
  return std::nullopt;
}

}  // namespace

std::optional<Rational> nth_root_exact(const Rational& value, unsigned n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return value;
  bool negative = value < 0;
  if (negative && n % 2 == 0) return std::nullopt;
  Rational mag = negative ? Rational(-value) : value;
  auto root_num = integer_nth_root(numerator(mag), n);
  if (!root_num) return std::nullopt;
  auto root_den = integer_nth_root(denominator(mag), n);
  if (!root_den) return std::nullopt;
  Rational result(*root_num, *root_den);
  if (negative) result = -result;
  return result;
}

Rational binomial_coefficient(const Rational& r, unsigned n) {
  Rational acc(1);
  for (unsigned k = 0; k < n; ++k) {
    acc *= (r - Rational(k));
    acc /= Rational(k + 1);
  }
  return acc;
}

Integer factorial(unsigned n) {
  Integer acc(1);
  for (unsigned k = 2; k <= n; ++k) acc *= k;
  return acc;
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

}  // namespace tss
