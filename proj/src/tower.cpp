#include "tss/tower.hpp"

#include <algorithm>

namespace tss {

Series exp_total(const Series& f, const Budget& b) {
  Decomposition parts = decompose(f, b);
  Monomial mono = exp_argument_to_monomial(parts.infinite.finite_terms());
  Constant factor = const_exp(parts.constant, f.field());
  if (parts.infinitesimal.is_finite() && parts.infinitesimal.finite_terms().empty()) {
    // exp of a purely infinite + constant input is a single exact term.
    return make_finite_series({{mono, factor}}, f.field());
  }
  Series unit = taylor_composition(
      [](unsigned n) -> std::optional<Constant> {
        return Constant(Rational(Integer(1), factorial(n)));
      },
      parts.infinitesimal, "exp");
  return series_scale(unit, factor, mono);
}

Series log_total(const Series& g, const Budget& b) {
  DominantResult d = dominant_monomial(g, b);
  if (d.is_indeterminate())
    fail(errc::indeterminate_sign, "cannot decide the sign of the log argument within budget");
  if (d.is_zero() || d.coefficient.sign() <= 0)
    fail(errc::not_positive, "log of a non-positive transseries");
  Series monomial_log = make_finite_series(log_of_monomial(d.monomial), g.field());
  Series unit = series_scale(g, Constant(1), d.monomial.inverse());
  return series_add(monomial_log, log_unit(unit, b));
}

int level(const Series& f) { return f.level_bound(); }

bool ExtensionStep::in_field(const Series& f) const { return level(f) <= index; }

bool ExtensionStep::in_infinite_part(const Series& f, const Budget& b) const {
  if (!in_field(f)) return false;
  Decomposition parts = decompose(f, b);
  return parts.constant.is_zero() &&
         dominant_monomial(parts.infinitesimal, b).is_zero();
}

bool ExtensionStep::in_bounded_part(const Series& f, const Budget& b) const {
  return in_field(f) && is_bounded(f, b) == Verdict::yes;
}

ExtensionStep extension_step(int n) {
  ExtensionStep step;
  step.index = n;
  step.description = "K_" + std::to_string(n) + " = R[[T_" + std::to_string(n) +
                     "]] = A oplus B with A the purely infinite series and B the bounded "
                     "ones; the step adjoins exp(A) as new monomials of height " +
                     std::to_string(n + 1) + ".";
  return step;
}

Series power(const Series& f, const Constant& r, const Budget& b) {
  if (!r.is_rational()) fail(errc::bad_argument, "power expects a rational exponent");
  const Rational& exponent = r.rational();
  if (exponent.is_zero()) return make_constant_series(Constant(1), f.field());

  DominantResult d = dominant_monomial(f, b);
  if (d.is_indeterminate())
    fail(errc::indeterminate_pivot, "cannot find the dominant monomial of the base");
  if (d.is_zero()) {
    if (exponent > 0) return make_finite_series({}, f.field());
    fail(errc::division_by_zero, "negative power of the zero series");
  }
  if (d.coefficient.sign() <= 0)
    fail(errc::not_positive, "power of a non-positive transseries");

  // Non-negative integer powers of finite series stay finite and exact.
  Integer num = numerator(exponent);
  Integer den = denominator(exponent);
  if (den == 1 && num >= 0 && num <= 256 && f.is_finite())
    return make_finite_series(
        pow_term_list(f.finite_terms(), num.convert_to<unsigned>()), f.field());

  Monomial mono_pow = d.monomial.pow(r);
  Constant lead_pow = const_pow(d.coefficient, exponent, f.field());
  Series eps = series_sub(series_scale(f, d.coefficient.inverse(), d.monomial.inverse()),
                          make_constant_series(Constant(1), f.field()));
  Rational rr = exponent;
  auto binomial = [rr](unsigned n) -> std::optional<Constant> {
    // C(r, n); once r is a non-negative integer below n the tail vanishes.
    if (denominator(rr) == 1 && numerator(rr) >= 0 && Integer(n) > numerator(rr))
      return std::nullopt;
    return Constant(binomial_coefficient(rr, n));
  };
  Series unit = taylor_composition(binomial, eps, "power");
  Series result = series_scale(unit, lead_pow, mono_pow);

  if (den == 1 && num >= -256 && num <= 256) {
    // Small integer exponents keep the rational-function witness.
    if (auto w = f.is_finite()
                     ? std::optional<Witness>{Witness{f.finite_terms(),
                                                      {{Monomial::one(), Constant(1)}}}}
                     : (f.has_witness() ? std::optional<Witness>{f.witness()} : std::nullopt)) {
      bool negative = num < 0;
      unsigned mag = (negative ? Integer(-num) : num).convert_to<unsigned>();
      Witness pw{pow_term_list(negative ? w->den : w->num, mag),
                 pow_term_list(negative ? w->num : w->den, mag)};
      auto impl = std::make_shared<SeriesImpl>(*result.impl());
      impl->witness = std::move(pw);
      return Series::from_impl(std::move(impl));
    }
  }
  return result;
}

}  // namespace tss
