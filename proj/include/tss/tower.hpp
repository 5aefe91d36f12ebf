#ifndef TSS_TOWER_HPP
#define TSS_TOWER_HPP

#include "tss/analytic.hpp"

namespace tss {

// Total exponential on transseries: exp(f) = exp-monomial(extract(f^>)) *
// e^{f_1} * sum (f^<)^n/n!. Strictly positive; raises the level by at most
// one. Errors: constant_exp_unsupported (nonzero constant term under the
// rational field), budget_exhausted (purely infinite part not enumerable).
Series exp_total(const Series& f, const Budget& b = Budget());

// Total logarithm on positive transseries: log(c d (1+eps)) = log_monomial(d)
// + log c + log(1+eps). Errors: not_positive, constant_log_unsupported,
// indeterminate_sign.
Series log_total(const Series& g, const Budget& b = Budget());

// Least n with every monomial in T_n; exact for finite series, an upper
// bound for lazy ones.
int level(const Series& f);

// Symbolic data of one pre-logarithmic extension step
// (K_{n+1}, A_{n+1}, B_{n+1}, log_{n+1}) = (K_n', A_n', B_n', log_n').
struct ExtensionStep {
  int index;                       // n
  std::string description;
  // Membership tests against the step's data, at the given budget.
  bool in_field(const Series& f) const;       // f in K_n
  bool in_infinite_part(const Series& f, const Budget& b = Budget()) const;  // f in A_n
  bool in_bounded_part(const Series& f, const Budget& b = Budget()) const;   // f in B_n
};

ExtensionStep extension_step(int n);

// f^r for rational r > 0 series f: monomial part d^r, leading coefficient
// via exact roots (or exp/log when the field provides them), binomial series
// on the unit part. power(f,1) = f; power(f,r)*power(f,s) = power(f,r+s).
Series power(const Series& f, const Constant& r, const Budget& b = Budget());

}  // namespace tss

#endif  // TSS_TOWER_HPP
