#ifndef TSS_CONSTANT_HPP
#define TSS_CONSTANT_HPP

#include "tss/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tss {

// A finite Q-linear combination  sum_i q_i * e^{r_i}  with distinct rational
// exponents r_i, kept sorted by exponent and free of zero coefficients.
//
// Zero test: the combination is zero iff it has no terms (the e^{r_i} are
// linearly independent over Q by Lindemann-Weierstrass). The sign test
// evaluates the combination in exact rational interval arithmetic, doubling
// the Taylor precision until the interval excludes zero; this terminates on
// every nonzero combination.
class ExpCombination {
 public:
  struct Part {
    Rational exponent;
    Rational coefficient;
  };

  ExpCombination() = default;
  static ExpCombination of_rational(const Rational& q);
  static ExpCombination exp_of(const Rational& r);  // 1 * e^r

  bool is_zero() const { return parts_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  // Single term q * e^r, if the combination has exactly one part.
  std::optional<Part> single_part() const;

  const std::vector<Part>& parts() const { return parts_; }

  ExpCombination add(const ExpCombination& other) const;
  ExpCombination negate() const;
  ExpCombination multiply(const ExpCombination& other) const;
  ExpCombination scale_by_term(const Rational& coeff, const Rational& exponent) const;

  bool operator==(const ExpCombination& other) const;

  int sign() const;

  // Exact rational enclosure with the given Taylor precision (term count).
  std::pair<Rational, Rational> interval(unsigned precision) const;

  static ExpCombination from_parts(std::vector<Part> parts);  // normalizes

 private:
  std::vector<Part> parts_;  // sorted by exponent, no zero coefficients
};

// Element of the exp-rational constant field: a formal fraction of
// combinations. The denominator is nonzero; the representation is scaled so
// its largest-exponent term is 1 * e^0.
class ExpRational {
 public:
  ExpRational() : num_(), den_(ExpCombination::of_rational(1)) {}
  ExpRational(ExpCombination num, ExpCombination den);

  const ExpCombination& num() const { return num_; }
  const ExpCombination& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const;
  bool is_rational_value() const;
  Rational rational_value() const;

  ExpRational add(const ExpRational&) const;
  ExpRational negate() const;
  ExpRational multiply(const ExpRational&) const;
  ExpRational inverse() const;  // division_by_zero on 0

  bool equals(const ExpRational&) const;

 private:
  ExpCombination num_, den_;
};

// The pluggable exact ordered coefficient field. Values are exact; zero and
// sign tests are total and never tolerance-based. Mixed arithmetic promotes
// rationals into the exp-rational representation; values that are provably
// rational collapse back, so equality of plain rationals stays structural.
class Constant {
 public:
  Constant() : value_(Rational(0)) {}
  Constant(int v) : value_(Rational(v)) {}
  Constant(long v) : value_(Rational(v)) {}
  Constant(const Rational& q) : value_(q) {}
  Constant(Rational&& q) : value_(std::move(q)) {}
  explicit Constant(const ExpRational& e);

  bool is_zero() const;
  int sign() const;
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;  // requires is_rational()
  const ExpRational& exp_rational() const;

  Constant operator-() const;
  Constant operator+(const Constant&) const;
  Constant operator-(const Constant&) const;
  Constant operator*(const Constant&) const;
  Constant operator/(const Constant&) const;  // division_by_zero
  Constant inverse() const;

  bool operator==(const Constant&) const;
  bool operator!=(const Constant& o) const { return !(*this == o); }

  // Total order via exact sign of the difference.
  bool operator<(const Constant& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Constant& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Constant& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Constant& o) const { return (*this - o).sign() >= 0; }

 private:
  std::variant<Rational, ExpRational> value_;
};

enum class FieldKind { rationals, exp_rationals };

const char* field_name(FieldKind kind);

int const_sign(const Constant& c);

// e^c in the active field. Rationals: only c = 0. ExpRationals: any rational
// c. Errors with constant_exp_unsupported otherwise.
Constant const_exp(const Constant& c, FieldKind field);
bool const_exp_supported(const Constant& c, FieldKind field);

// log c in the active field. Rationals: only c = 1. ExpRationals: values of
// the form e^r. Errors with constant_log_unsupported otherwise.
Constant const_log(const Constant& c, FieldKind field);
bool const_log_supported(const Constant& c, FieldKind field);

// c^(p/q) when the field can express it exactly (integer powers; exact
// rational roots; e^r roots under exp_rationals). Errors with
// constant_capability_missing otherwise.
Constant const_pow(const Constant& c, const Rational& exponent, FieldKind field);

}  // namespace tss

#endif  // TSS_CONSTANT_HPP
