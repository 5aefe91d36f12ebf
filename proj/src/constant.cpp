#include "tss/constant.hpp"

#include "tss/error.hpp"

#include <algorithm>
#include <limits>

namespace tss {

// ---------------------------------------------------------------------------
// ExpCombination

ExpCombination ExpCombination::of_rational(const Rational& q) {
  ExpCombination c;
  if (!q.is_zero()) c.parts_.push_back({Rational(0), q});
  return c;
}

ExpCombination ExpCombination::exp_of(const Rational& r) {
  ExpCombination c;
  c.parts_.push_back({r, Rational(1)});
  return c;
}

ExpCombination ExpCombination::from_parts(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.exponent < b.exponent; });
  ExpCombination c;
  for (auto& p : parts) {
    if (!c.parts_.empty() && c.parts_.back().exponent == p.exponent) {
      c.parts_.back().coefficient += p.coefficient;
      if (c.parts_.back().coefficient.is_zero()) c.parts_.pop_back();
    } else if (!p.coefficient.is_zero()) {
      c.parts_.push_back(std::move(p));
    }
  }
  return c;
}

bool ExpCombination::is_rational() const {
  return parts_.empty() || (parts_.size() == 1 && parts_[0].exponent.is_zero());
}

Rational ExpCombination::rational_value() const {
  if (parts_.empty()) return Rational(0);
  return parts_[0].coefficient;
}

std::optional<ExpCombination::Part> ExpCombination::single_part() const {
  if (parts_.size() == 1) return parts_[0];
  return std::nullopt;
}

ExpCombination ExpCombination::add(const ExpCombination& other) const {
  std::vector<Part> merged = parts_;
  merged.insert(merged.end(), other.parts_.begin(), other.parts_.end());
  return from_parts(std::move(merged));
}

ExpCombination ExpCombination::negate() const {
  ExpCombination c;
  c.parts_ = parts_;
  for (auto& p : c.parts_) p.coefficient = -p.coefficient;
  return c;
}

ExpCombination ExpCombination::multiply(const ExpCombination& other) const {
  std::vector<Part> products;
  products.reserve(parts_.size() * other.parts_.size());
  for (const auto& a : parts_)
    for (const auto& b : other.parts_)
      products.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
  return from_parts(std::move(products));
}

ExpCombination ExpCombination::scale_by_term(const Rational& coeff,
                                             const Rational& exponent) const {
  std::vector<Part> parts;
  parts.reserve(parts_.size());
  for (const auto& p : parts_)
    parts.push_back({p.exponent + exponent, p.coefficient * coeff});
  return from_parts(std::move(parts));
}

bool ExpCombination::operator==(const ExpCombination& other) const {
  if (parts_.size() != other.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].exponent != other.parts_[i].exponent ||
        parts_[i].coefficient != other.parts_[i].coefficient)
      return false;
  return true;
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval mul_pos(const Interval& a, const Interval& b) {
  return {a.lo * b.lo, a.hi * b.hi};  // all endpoints positive
}

Interval pow_pos(const Interval& a, const Integer& k) {
  Interval acc{Rational(1), Rational(1)};
  Interval cur = a;
  Integer e = k;
  while (e > 0) {
    if ((e & 1) != 0) acc = mul_pos(acc, cur);
    cur = mul_pos(cur, cur);
    e >>= 1;
  }
  return acc;
}

// Enclosure of e^s for 0 <= s <= 1, from the degree-(n-1) Taylor polynomial;
// the tail is below 2 s^n / n! because the term ratio stays under 1/2.
Interval exp_unit_interval(const Rational& s, unsigned precision) {
  unsigned n = std::max(precision, 4u);
  Rational sum(1);
  Rational term(1);
  for (unsigned k = 1; k < n; ++k) {
    term *= s;
    term /= Rational(k);
    sum += term;
  }
  Rational tail = term * s / Rational(n) * Rational(2);
  return {sum, sum + tail};
}

// Enclosure of e^r for arbitrary rational r.
Interval exp_interval(const Rational& r, unsigned precision) {
  if (r.is_zero()) return {Rational(1), Rational(1)};
  if (r < 0) {
    Interval inv = exp_interval(Rational(-r), precision);
    return {Rational(1) / inv.hi, Rational(1) / inv.lo};
  }
  Integer k = floor_of(r);
  Rational frac = r - Rational(k);
  Interval unit = exp_unit_interval(frac, precision);
  if (k.is_zero()) return unit;
  Interval e1 = exp_unit_interval(Rational(1), precision);
  return mul_pos(pow_pos(e1, k), unit);
}

}  // namespace

std::pair<Rational, Rational> ExpCombination::interval(unsigned precision) const {
  Rational lo(0), hi(0);
  for (const auto& p : parts_) {
    Interval e = exp_interval(p.exponent, precision);
    if (p.coefficient > 0) {
      lo += p.coefficient * e.lo;
      hi += p.coefficient * e.hi;
    } else {
      lo += p.coefficient * e.hi;
      hi += p.coefficient * e.lo;
    }
  }
  return {lo, hi};
}

int ExpCombination::sign() const {
  if (parts_.empty()) return 0;
  bool any_pos = false, any_neg = false;
  for (const auto& p : parts_) (p.coefficient > 0 ? any_pos : any_neg) = true;
  if (!any_neg) return 1;
  if (!any_pos) return -1;
  // Mixed signs: refine until the enclosure excludes zero. Terminates since
  // the value is provably nonzero (nonempty part list).
  for (unsigned precision = 8;; precision *= 2) {
    auto [lo, hi] = interval(precision);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

// ---------------------------------------------------------------------------
// ExpRational

ExpRational::ExpRational(ExpCombination num, ExpCombination den) {
  if (den.is_zero()) fail(errc::division_by_zero, "exp-rational with zero denominator");
  // Scale so the denominator's top term is 1 * e^0.
  const auto& top = den.parts().back();
  Rational inv_coeff = Rational(1) / top.coefficient;
  Rational shift = -top.exponent;
  num_ = num.scale_by_term(inv_coeff, shift);
  den_ = den.scale_by_term(inv_coeff, shift);
}

int ExpRational::sign() const { return num_.sign() * den_.sign(); }

bool ExpRational::is_rational_value() const {
  if (den_.is_rational()) return num_.is_rational();
  // q * den / den: parallel part lists with a constant coefficient ratio.
  if (num_.parts().size() != den_.parts().size() || num_.is_zero()) return false;
  const Rational ratio = num_.parts()[0].coefficient / den_.parts()[0].coefficient;
  for (std::size_t i = 0; i < num_.parts().size(); ++i) {
    if (num_.parts()[i].exponent != den_.parts()[i].exponent) return false;
    if (num_.parts()[i].coefficient != den_.parts()[i].coefficient * ratio) return false;
  }
  return true;
}

Rational ExpRational::rational_value() const {
  if (den_.is_rational()) return num_.rational_value() / den_.rational_value();
  return num_.parts()[0].coefficient / den_.parts()[0].coefficient;
}

ExpRational ExpRational::add(const ExpRational& o) const {
  return ExpRational(num_.multiply(o.den_).add(o.num_.multiply(den_)),
                     den_.multiply(o.den_));
}

ExpRational ExpRational::negate() const { return ExpRational(num_.negate(), den_); }

ExpRational ExpRational::multiply(const ExpRational& o) const {
  return ExpRational(num_.multiply(o.num_), den_.multiply(o.den_));
}

ExpRational ExpRational::inverse() const {
  if (num_.is_zero()) fail(errc::division_by_zero, "inverse of zero constant");
  return ExpRational(den_, num_);
}

bool ExpRational::equals(const ExpRational& o) const {
  return num_.multiply(o.den_) == o.num_.multiply(den_);
}

// ---------------------------------------------------------------------------
// Constant

namespace {

ExpRational promote(const Constant& c) {
  if (c.is_rational())
    return ExpRational(ExpCombination::of_rational(c.rational()),
                       ExpCombination::of_rational(1));
  return c.exp_rational();
}

}  // namespace

Constant::Constant(const ExpRational& e) {
  if (e.is_rational_value())
    value_ = e.rational_value();
  else
    value_ = e;
}

bool Constant::is_zero() const {
  if (is_rational()) return rational().is_zero();
  return exp_rational().is_zero();
}

int Constant::sign() const {
  if (is_rational()) return sign_of(rational());
  return exp_rational().sign();
}

const Rational& Constant::rational() const { return std::get<Rational>(value_); }

const ExpRational& Constant::exp_rational() const { return std::get<ExpRational>(value_); }

Constant Constant::operator-() const {
  if (is_rational()) return Constant(Rational(-rational()));
  return Constant(exp_rational().negate());
}

Constant Constant::operator+(const Constant& o) const {
  if (is_rational() && o.is_rational()) return Constant(rational() + o.rational());
  return Constant(promote(*this).add(promote(o)));
}

Constant Constant::operator-(const Constant& o) const { return *this + (-o); }

Constant Constant::operator*(const Constant& o) const {
  if (is_rational() && o.is_rational()) return Constant(rational() * o.rational());
  return Constant(promote(*this).multiply(promote(o)));
}

Constant Constant::operator/(const Constant& o) const { return *this * o.inverse(); }

Constant Constant::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero constant");
  if (is_rational()) return Constant(Rational(1) / rational());
  return Constant(exp_rational().inverse());
}

bool Constant::operator==(const Constant& o) const {
  if (is_rational() && o.is_rational()) return rational() == o.rational();
  return (*this - o).is_zero();
}

// ---------------------------------------------------------------------------
// Field capabilities

const char* field_name(FieldKind kind) {
  return kind == FieldKind::rationals ? "rational" : "exprational";
}

int const_sign(const Constant& c) { return c.sign(); }

bool const_exp_supported(const Constant& c, FieldKind field) {
  if (c.is_zero()) return true;
  return field == FieldKind::exp_rationals && c.is_rational();
}

Constant const_exp(const Constant& c, FieldKind field) {
  if (c.is_zero()) return Constant(1);
  if (field == FieldKind::exp_rationals && c.is_rational()) {
    return Constant(ExpRational(ExpCombination::exp_of(c.rational()),
                                ExpCombination::of_rational(1)));
  }
  fail(errc::constant_exp_unsupported,
       std::string("the ") + field_name(field) +
           " constant field does not support exp at this value" +
           (field == FieldKind::rationals ? " (try --field exprational)" : ""));
}

namespace {

// Writes c as e^r if it has that exact form (numerator a single part with
// coefficient 1 after reduction against the denominator's single part).
std::optional<Rational> as_pure_exp(const Constant& c) {
  if (c.is_rational()) {
    if (c.rational() == 1) return Rational(0);
    return std::nullopt;
  }
  const ExpRational& e = c.exp_rational();
  auto num = e.num().single_part();
  auto den = e.den().single_part();
  if (!num || !den) return std::nullopt;
  if (num->coefficient != den->coefficient) return std::nullopt;
  return num->exponent - den->exponent;
}

}  // namespace

bool const_log_supported(const Constant& c, FieldKind field) {
  if (c.sign() <= 0) return false;
  auto r = as_pure_exp(c);
  if (!r) return false;
  return r->is_zero() || field == FieldKind::exp_rationals;
}

Constant const_log(const Constant& c, FieldKind field) {
  if (c.sign() <= 0) fail(errc::not_positive, "log of a non-positive constant");
  if (auto r = as_pure_exp(c)) {
    if (r->is_zero()) return Constant(0);
    if (field == FieldKind::exp_rationals) return Constant(*r);
  }
  fail(errc::constant_log_unsupported,
       std::string("the ") + field_name(field) +
           " constant field does not support log at this value");
}

namespace {

std::optional<long> to_long(const Integer& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    return std::nullopt;
  return v.convert_to<long>();
}

}  // namespace

Constant const_pow(const Constant& c, const Rational& exponent, FieldKind field) {
  Integer num = numerator(exponent);
  Integer den = denominator(exponent);
  std::optional<long> num_l = to_long(num);
  if (!num_l) fail(errc::bad_argument, "exponent too large");
  if (den == 1) {
    long e = *num_l;
    if (c.is_rational()) return Constant(pow_rational(c.rational(), e));
    Constant acc(1);
    Constant base = e < 0 ? c.inverse() : c;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) acc = acc * base;
    return acc;
  }
  std::optional<long> den_l = to_long(den);
  if (!den_l || *den_l > 64) fail(errc::bad_argument, "root index too large");
  unsigned root = static_cast<unsigned>(*den_l);
  if (c.is_rational()) {
    if (auto r = nth_root_exact(c.rational(), root)) {
      return Constant(pow_rational(*r, *num_l));
    }
  }
  if (auto r = as_pure_exp(c); r && field == FieldKind::exp_rationals) {
    // (e^r)^(p/q) = e^(r p / q), exact in this field.
    return const_exp(Constant(Rational(*r * exponent)), field);
  }
  fail(errc::constant_capability_missing,
       std::string("the ") + field_name(field) +
           " constant field cannot take an exact power " + to_string(exponent) +
           " of this value");
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::constant_exp_unsupported: return "ConstantExpUnsupported";
    case errc::constant_log_unsupported: return "ConstantLogUnsupported";
    case errc::constant_capability_missing: return "ConstantCapabilityMissing";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::indeterminate_pivot: return "IndeterminatePivot";
    case errc::indeterminate_sign: return "IndeterminateSign";
    case errc::indeterminate_cube_membership: return "IndeterminateCubeMembership";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::argument_not_bounded: return "ArgumentNotBounded";
    case errc::constant_outside_domain: return "ConstantOutsideDomain";
    case errc::not_positive: return "NotPositive";
    case errc::not_positive_unit: return "NotPositiveUnit";
    case errc::invalid_split: return "InvalidSplit";
    case errc::emission_order: return "EmissionOrder";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::syntax_error: return "SyntaxError";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace tss
