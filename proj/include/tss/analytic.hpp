#ifndef TSS_ANALYTIC_HPP
#define TSS_ANALYTIC_HPP

#include "tss/hahn.hpp"

#include <span>
#include <string>
#include <vector>

namespace tss {

// A real-analytic germ on an interval, given by its Taylor coefficient
// oracle (c, n) |-> f^(n)(c)/n!. Oracles must be pure; they may throw a
// constant-capability error when the expansion point needs values the active
// field cannot represent (e.g. sin at nonzero points).
class AnalyticGerm {
 public:
  using CoefficientFn = std::function<Constant(const Constant& c, unsigned n)>;

  AnalyticGerm(std::string name, std::optional<Constant> lower, std::optional<Constant> upper,
               CoefficientFn coefficients, std::optional<unsigned> degree_bound = std::nullopt)
      : name_(std::move(name)),
        lower_(std::move(lower)),
        upper_(std::move(upper)),
        coefficients_(std::move(coefficients)),
        degree_bound_(degree_bound) {}

  const std::string& name() const { return name_; }
  bool contains(const Constant& c) const;
  Constant coefficient(const Constant& c, unsigned n) const { return coefficients_(c, n); }
  // Coefficients above this degree are identically zero (polynomial germs).
  std::optional<unsigned> degree_bound() const { return degree_bound_; }

 private:
  std::string name_;
  std::optional<Constant> lower_, upper_;  // open interval; nullopt = +-infinity
  CoefficientFn coefficients_;
  std::optional<unsigned> degree_bound_;
};

// f^(c + eps) := sum_n f^(n)(c)/n! eps^n for bounded g = c + eps with c in
// the germ's domain. Errors: argument_not_bounded, constant_outside_domain.
Series taylor_apply(const AnalyticGerm& f, const Series& g, const Budget& b = Budget());

// e^{c+eps} := e^c sum eps^n/n!, a positive unit. Requires const_exp at the
// constant term of g.
Series exp_bounded(const Series& g, const Budget& b = Budget());

// log g := log c + sum (-1)^{n+1}/n eps^n for g = c(1 + eps) a positive unit
// (d(g) = 1, leading coefficient c > 0 with const_log available).
Series log_unit(const Series& g, const Budget& b = Budget());

// A restricted analytic function: analytic on a neighborhood of the cube
// [-1,1]^n, identically 0 outside it. The oracle maps (expansion point,
// multi-index) to the Taylor coefficient.
class RestrictedAnalyticFunction {
 public:
  using CoefficientFn =
      std::function<Constant(const std::vector<Constant>& c, const std::vector<unsigned>& alpha)>;

  RestrictedAnalyticFunction(std::string name, unsigned arity, CoefficientFn coefficients,
                             std::optional<unsigned> degree_bound = std::nullopt)
      : name_(std::move(name)),
        arity_(arity),
        coefficients_(std::move(coefficients)),
        degree_bound_(degree_bound) {}

  const std::string& name() const { return name_; }
  unsigned arity() const { return arity_; }
  Constant coefficient(const std::vector<Constant>& c, const std::vector<unsigned>& alpha) const {
    return coefficients_(c, alpha);
  }
  std::optional<unsigned> degree_bound() const { return degree_bound_; }

 private:
  std::string name_;
  unsigned arity_;
  CoefficientFn coefficients_;
  std::optional<unsigned> degree_bound_;
};

// Multivariate Taylor extension on the cube I(K)^n, enumerated by total
// degree then lexicographically. Returns the zero series when any argument
// lies strictly outside the cube; errors with indeterminate_cube_membership
// when a cube test cannot be decided within budget.
Series restricted_apply(const RestrictedAnalyticFunction& F, std::span<const Series> args,
                        const Budget& b = Budget());

// Built-in germ library (exposed to the parser).
namespace germs {
AnalyticGerm exp_germ(FieldKind field);
AnalyticGerm log1p_germ(FieldKind field);      // log(1+t) on (-1, +inf)
AnalyticGerm geometric_germ();                 // 1/(1-t) on (-inf, 1)
AnalyticGerm sin_germ();
AnalyticGerm cos_germ();
AnalyticGerm identity_germ();
RestrictedAnalyticFunction restricted_e(FieldKind field);  // e(x) = exp(x) on [-1,1]
RestrictedAnalyticFunction restricted_product();           // (u,v) |-> u*v on the square
}  // namespace germs

}  // namespace tss

#endif  // TSS_ANALYTIC_HPP
