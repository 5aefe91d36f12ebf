#ifndef TSS_MONOMIAL_HPP
#define TSS_MONOMIAL_HPP

#include "tss/constant.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace tss {

class Monomial;
struct Term;
using TermList = std::vector<Term>;  // strictly decreasing by monomial

enum class Cmp { less, equal, greater };

// One factor l_i^exponent of the logarithmic part; l_0 = x.
struct LogFactor {
  std::uint32_t index;
  Constant exponent;  // nonzero
};

// Canonical transmonomial  exp(a) * l_0^{a_0} ... l_n^{a_n}.
//
// The argument a is a finite purely infinite series (all monomials > 1) over
// monomials of strictly smaller height, and contains no term whose monomial
// is a bare l_j with j >= 1: such terms are what logarithms of monomials look
// like, and the extraction rule in exp_argument_to_monomial moves them into
// the logarithmic part. This makes exp(log m) = m hold structurally.
//
// Real-power monomials x^r are the log part {l_0: r}; purely logarithmic
// monomials have an empty argument; 1 is the empty monomial.
class Monomial {
 public:
  Monomial() = default;  // the identity monomial

  static Monomial one() { return Monomial(); }
  static Monomial log_monomial(std::uint32_t index);  // l_index
  static Monomial power_of_x(const Constant& r);      // x^r
  // exp_part must be canonical (sorted, purely infinite, extraction-free);
  // log factors are sorted/merged here.
  static Monomial make(TermList exp_part, std::vector<LogFactor> log_part);

  bool is_one() const;
  int height() const { return height_; }

  bool has_exp_part() const;
  const TermList& exp_part() const;  // empty list if none
  const std::vector<LogFactor>& log_part() const { return log_; }

  Monomial times(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(const Constant& r) const;

  // The group order: reduces m >= n to the sign test of m * n^{-1} against 1.
  static Cmp compare(const Monomial& a, const Monomial& b);
  Cmp compare_to_one() const;

  bool operator==(const Monomial& other) const;
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const TermList> exp_arg_;  // null or nonempty
  std::vector<LogFactor> log_;               // sorted by index, nonzero exponents
  int height_ = 0;
};

struct Term {
  Monomial monomial;
  Constant coefficient;  // nonzero
};

inline bool monomial_less(const Monomial& a, const Monomial& b) {
  return Monomial::compare(a, b) == Cmp::less;
}

// --- exact term-list algebra (shared by finite series, witnesses, and
// transmonomial arguments) ---

TermList add_term_lists(const TermList& a, const TermList& b);
TermList negate_term_list(const TermList& a);
// scale * shift must be nonzero; multiplies every coefficient by scale and
// every monomial by shift.
TermList scale_term_list(const TermList& a, const Constant& scale, const Monomial& shift);
TermList multiply_term_lists(const TermList& a, const TermList& b);
TermList pow_term_list(const TermList& a, unsigned n);
// Sorts (strictly decreasing) and merges duplicate monomials, dropping zeros.
TermList normalize_term_list(TermList terms);
bool term_lists_equal(const TermList& a, const TermList& b);
int max_height(const TermList& terms);

// The exponential of a purely infinite finite series, as a monomial. Applies
// the extraction rule: a term c * l_j (j >= 1, bare monomial) contributes
// l_{j-1}^c to the log part instead of staying in the argument.
Monomial exp_argument_to_monomial(const TermList& purely_infinite);

// log of a monomial, as a finite series: log(exp(a) * prod l_i^{a_i}) =
// a + sum a_i l_{i+1}. Additive: log(m*n) = log m + log n.
TermList log_of_monomial(const Monomial& m);

}  // namespace tss

#endif  // TSS_MONOMIAL_HPP
