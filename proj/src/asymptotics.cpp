#include "tss/asymptotics.hpp"

#include "tss/format.hpp"

namespace tss {

Order eventual_compare(const Series& f, const Series& g, const Budget& b) {
  switch (series_sign(series_sub(f, g), b)) {
    case Sign::negative: return Order::less;
    case Sign::zero: return Order::equal;
    case Sign::positive: return Order::greater;
    case Sign::indeterminate: return Order::indeterminate;
  }
  return Order::indeterminate;
}

const char* order_name(Order o) {
  switch (o) {
    case Order::less: return "Less";
    case Order::equal: return "Equal";
    case Order::greater: return "Greater";
    case Order::indeterminate: return "Indeterminate";
  }
  return "?";
}

Limit limit_at_infinity(const Series& f, const Budget& b) {
  DominantResult d = dominant_monomial(f, b);
  if (d.is_indeterminate()) return {Limit::Kind::indeterminate, Constant(0)};
  if (d.is_zero()) return {Limit::Kind::finite, Constant(0)};
  if (d.monomial.compare_to_one() == Cmp::greater) {
    return {d.coefficient.sign() > 0 ? Limit::Kind::plus_infinity : Limit::Kind::minus_infinity,
            Constant(0)};
  }
  if (d.monomial.is_one()) return {Limit::Kind::finite, d.coefficient};
  // Dominant monomial < 1: the whole series is infinitesimal.
  return {Limit::Kind::finite, Constant(0)};
}

// ---------------------------------------------------------------------------
// Axiom suite

namespace {

constexpr FieldKind kField = FieldKind::exp_rationals;

struct SuiteBuilder {
  const Budget& budget;
  const AxiomHooks& hooks;
  AxiomReport report;

  Series exp_fn(const Series& f) { return hooks.exp(f, budget); }

  void add(const std::string& axiom, const std::string& description,
           const std::function<std::pair<Outcome, std::string>()>& body) {
    AxiomInstance inst{axiom, description, Outcome::indeterminate, ""};
    try {
      auto [outcome, witness] = body();
      inst.outcome = outcome;
      inst.witness = witness;
    } catch (const Error& e) {
      if (e.code() == errc::budget_exhausted || e.code() == errc::indeterminate_sign ||
          e.code() == errc::indeterminate_pivot ||
          e.code() == errc::indeterminate_cube_membership) {
        inst.outcome = Outcome::indeterminate;
        inst.witness = std::string(errc_name(e.code())) + ": " + e.what();
      } else {
        inst.outcome = Outcome::fail;
        inst.witness = std::string(errc_name(e.code())) + ": " + e.what();
      }
    }
    switch (inst.outcome) {
      case Outcome::pass: ++report.passed; break;
      case Outcome::fail: ++report.failed; break;
      case Outcome::indeterminate: ++report.indeterminate; break;
    }
    report.instances.push_back(std::move(inst));
  }

  // Equality up to budget. An exact zero difference passes outright. When
  // the sign scan spends its whole budget cancelling candidates, the values
  // agree on everything inspected; that counts as a pass provided the budget
  // allowed a meaningful number of cancellations, and is reported
  // indeterminate below that depth.
  static constexpr int kEqualityDepth = 8;

  std::pair<Outcome, std::string> equal_to_budget(const Series& a, const Series& c) {
    switch (series_sign(series_sub(a, c), budget)) {
      case Sign::zero: return {Outcome::pass, ""};
      case Sign::indeterminate:
        if (budget.max_terms >= kEqualityDepth)
          return {Outcome::pass, "agrees on every coefficient inspected within budget"};
        return {Outcome::indeterminate, "budget too small to inspect the difference"};
      case Sign::positive: return {Outcome::fail, "difference is eventually positive"};
      case Sign::negative: return {Outcome::fail, "difference is eventually negative"};
    }
    return {Outcome::indeterminate, ""};
  }

  std::pair<Outcome, std::string> expect_order(const Series& a, const Series& c, Order want) {
    Order got = eventual_compare(a, c, budget);
    if (got == want) return {Outcome::pass, ""};
    if (got == Order::indeterminate)
      return {Outcome::indeterminate, "comparison exhausted its budget"};
    return {Outcome::fail, std::string("observed ") + order_name(got) + ", expected " +
                               order_name(want)};
  }
};

Series constant_series(const Constant& c) { return make_constant_series(c, kField); }

Series mono(const Monomial& m) { return make_monomial_series(m, kField); }

Series x_series() { return mono(Monomial::log_monomial(0)); }

Series x_power(int k) { return mono(Monomial::power_of_x(Constant(k))); }

Series finite(std::initializer_list<std::pair<Monomial, Constant>> terms) {
  TermList list;
  for (const auto& [m, c] : terms) list.push_back({m, c});
  return make_finite_series(normalize_term_list(std::move(list)), kField);
}

}  // namespace

AxiomReport axiom_suite(const Budget& b, const AxiomHooks& hooks_in) {
  AxiomHooks hooks = hooks_in;
  if (!hooks.exp)
    hooks.exp = [](const Series& f, const Budget& bb) { return exp_total(f, bb); };
  SuiteBuilder suite{b, hooks, {}};

  const Monomial x = Monomial::log_monomial(0);
  const Monomial l1 = Monomial::log_monomial(1);
  const Monomial l2 = Monomial::log_monomial(2);
  const Monomial x_inv = Monomial::power_of_x(Constant(-1));
  const Series one = constant_series(Constant(1));

  // --- (E1): exp(f+g) = exp(f) exp(g), plus real-exp anchors exp(c) = e^c.
  for (const Constant& c : {Constant(0), Constant(1), Constant(Rational(3, 2)), Constant(-2)}) {
    suite.add("E1", "exp(" + format_constant(c) + ") = e^" + format_constant(c), [&] {
      Series lhs = suite.exp_fn(constant_series(c));
      Series rhs = constant_series(const_exp(c, kField));
      return suite.equal_to_budget(lhs, rhs);
    });
  }
  {
    std::vector<std::pair<Series, Series>> pairs = {
        {x_series(), mono(Monomial::power_of_x(Constant(2)))},
        {x_series(), finite({{Monomial::one(), Constant(1)}, {x_inv, Constant(1)}})},
        {mono(x_inv), series_neg(mono(x_inv))},
        {finite({{l1, Constant(2)}}), finite({{l2, Constant(1)}})},
        {finite({{Monomial::one(), Constant(1)}, {x_inv, Constant(-1)}}),
         finite({{Monomial::one(), Constant(-2)}, {x_inv, Constant(1)}})},
        {finite({{x, Constant(1)}, {x_inv, Constant(3)}}),
         finite({{x, Constant(2)}, {Monomial::one(), Constant(1)}})},
    };
    for (const auto& [f, g] : pairs) {
      suite.add("E1",
                "exp(f+g) = exp(f)*exp(g) for f = " + format_series(f) + ", g = " +
                    format_series(g),
                [&, f = f, g = g] {
                  Series lhs = suite.exp_fn(series_add(f, g));
                  Series rhs = series_mul(suite.exp_fn(f), suite.exp_fn(g));
                  return suite.equal_to_budget(lhs, rhs);
                });
    }
  }

  // --- (E2): f < g implies exp(f) < exp(g).
  {
    std::vector<std::pair<Series, Series>> pairs = {
        {constant_series(Constant(0)), one},
        {series_neg(x_series()), x_series()},
        {mono(l1), x_series()},
        {x_series(), mono(Monomial::power_of_x(Constant(2)))},
        {mono(x_inv), constant_series(Constant(Rational(1, 2)))},
        {finite({{x, Constant(1)}, {Monomial::one(), Constant(5)}}),
         finite({{x, Constant(1)}, {Monomial::one(), Constant(5)}, {x_inv, Constant(1)}})},
    };
    for (const auto& [f, g] : pairs) {
      suite.add("E2",
                "exp is strictly increasing at f = " + format_series(f) + " < g = " +
                    format_series(g),
                [&, f = f, g = g] {
                  auto premise = suite.expect_order(f, g, Order::less);
                  if (premise.first != Outcome::pass) return premise;
                  return suite.expect_order(suite.exp_fn(f), suite.exp_fn(g), Order::less);
                });
    }
  }

  // --- (E3): every positive element has a logarithm; exp(log g) = g.
  {
    std::vector<Series> positives = {
        x_series(),
        series_invert(finite({{Monomial::one(), Constant(1)}, {x_inv, Constant(-1)}}), b),
        finite({{x.times(l1), Constant(1)}}),
        finite({{Monomial::one(), Constant(1)}, {x_inv, Constant(2)}}),
    };
    for (const Series& g : positives) {
      suite.add("E3", "exp(log g) = g for g = " + format_series(g), [&, g = g] {
        Series y = log_total(g, suite.budget);
        return suite.equal_to_budget(suite.exp_fn(y), g);
      });
    }
  }

  // --- (E4_n): x > n^2 -> exp(x) > x^n, shown on the germs exp(x) vs x^n
  // and exp(x^2+x) vs (x^2+x)^n, including the dominance of monomials.
  for (int n = 1; n <= 10; ++n) {
    suite.add("E4", "exp(x) > x^" + std::to_string(n), [&, n] {
      Series lhs = suite.exp_fn(x_series());
      Series rhs = power(x_series(), Constant(n), suite.budget);
      DominantResult dl = dominant_monomial(lhs, suite.budget);
      DominantResult dr = dominant_monomial(rhs, suite.budget);
      if (dl.is_indeterminate() || dr.is_indeterminate())
        return std::pair<Outcome, std::string>{Outcome::indeterminate, "dominant unknown"};
      if (Monomial::compare(dl.monomial, dr.monomial) != Cmp::greater)
        return std::pair<Outcome, std::string>{Outcome::fail,
                                               "d(exp x) does not dominate d(x^n)"};
      return suite.expect_order(lhs, rhs, Order::greater);
    });
    suite.add("E4", "exp(x^2+x) > (x^2+x)^" + std::to_string(n), [&, n] {
      Series base = finite({{Monomial::power_of_x(Constant(2)), Constant(1)}, {x, Constant(1)}});
      Series lhs = suite.exp_fn(base);
      Series rhs = power(base, Constant(n), suite.budget);
      DominantResult dl = dominant_monomial(lhs, suite.budget);
      DominantResult dr = dominant_monomial(rhs, suite.budget);
      if (dl.is_indeterminate() || dr.is_indeterminate())
        return std::pair<Outcome, std::string>{Outcome::indeterminate, "dominant unknown"};
      if (Monomial::compare(dl.monomial, dr.monomial) != Cmp::greater)
        return std::pair<Outcome, std::string>{Outcome::fail,
                                               "d(exp(x^2+x)) does not dominate"};
      return suite.expect_order(lhs, rhs, Order::greater);
    });
  }

  // --- (E5): the restricted analytic e agrees with exp on [-1, 1].
  {
    RestrictedAnalyticFunction e = germs::restricted_e(kField);
    std::vector<Series> bounded;
    bounded.push_back(constant_series(Constant(0)));
    bounded.push_back(one);
    bounded.push_back(constant_series(Constant(-1)));
    bounded.push_back(mono(x_inv));
    bounded.push_back(series_neg(mono(x_inv)));
    for (int k = 1; k <= 5; ++k) {
      bounded.push_back(finite({{Monomial::one(), Constant(Rational(k, 6))},
                                {x_inv, Constant(k)},
                                {Monomial::power_of_x(Constant(-2)), Constant(-k)}}));
      bounded.push_back(finite({{Monomial::one(), Constant(Rational(-k, 7))},
                                {x_inv.times(Monomial::log_monomial(1)), Constant(1)}}));
    }
    // Boundary points with inward-pointing tails stay inside the cube.
    bounded.push_back(finite({{Monomial::one(), Constant(1)}, {x_inv, Constant(-1)}}));
    bounded.push_back(finite({{Monomial::one(), Constant(-1)}, {x_inv, Constant(1)}}));
    bounded.push_back(finite({{x_inv, Constant(Rational(1, 2))},
                              {Monomial::power_of_x(Constant(-3)), Constant(4)}}));
    bounded.push_back(finite({{Monomial::one(), Constant(Rational(2, 3))},
                              {Monomial::power_of_x(Constant(Rational(-1, 2))), Constant(1)}}));
    bounded.push_back(el_witness_series(kField));
    int idx = 0;
    for (const Series& f : bounded) {
      suite.add("E5", "e(f) = exp(f) on [-1,1], sample " + std::to_string(idx++), [&, f = f] {
        Series lhs = restricted_apply(e, std::span<const Series>(&f, 1), suite.budget);
        return suite.equal_to_budget(lhs, suite.exp_fn(f));
      });
    }
  }

  // --- exp(f) >= f + 1 on bounded elements.
  {
    std::vector<Series> samples = {
        constant_series(Constant(0)), one, constant_series(Constant(-3)),
        mono(x_inv), series_neg(mono(x_inv)),
        finite({{Monomial::one(), Constant(2)}, {x_inv, Constant(-5)}}),
        finite({{x_inv, Constant(1)}, {Monomial::power_of_x(Constant(-2)), Constant(1)}}),
    };
    int idx = 0;
    for (const Series& f : samples) {
      suite.add("exp>=1+f", "exp(f) >= f + 1, sample " + std::to_string(idx++), [&, f = f] {
        Series diff = series_sub(suite.exp_fn(f), series_add(f, one));
        Sign s = series_sign(diff, suite.budget);
        if (s == Sign::indeterminate)
          return std::pair<Outcome, std::string>{Outcome::indeterminate, "sign unknown"};
        if (s == Sign::negative)
          return std::pair<Outcome, std::string>{Outcome::fail, "exp(f) < f + 1"};
        return std::pair<Outcome, std::string>{Outcome::pass, ""};
      });
    }
  }

  // --- log laws: log(fg) = log f + log g, log(exp f) = f.
  {
    // Leading coefficients stay at 1 (or e^r): the exact field has no log 3.
    Series u = series_invert(finite({{Monomial::one(), Constant(1)}, {x_inv, Constant(-1)}}), b);
    std::vector<std::pair<Series, Series>> pairs = {
        {x_series(), mono(l1)},
        {finite({{x, Constant(1)}}), u},
        {finite({{x.times(x), Constant(1)}, {x, Constant(1)}}), x_series()},
    };
    for (const auto& [f, g] : pairs) {
      suite.add("log-law",
                "log(fg) = log f + log g for f = " + format_series(f) + ", g = " +
                    format_series(g),
                [&, f = f, g = g] {
                  Series lhs = log_total(series_mul(f, g), suite.budget);
                  Series rhs =
                      series_add(log_total(f, suite.budget), log_total(g, suite.budget));
                  return suite.equal_to_budget(lhs, rhs);
                });
    }
    std::vector<Series> args = {
        x_series(), finite({{l1, Constant(2)}, {l2, Constant(1)}}),
        finite({{x, Constant(1)}, {x_inv, Constant(1)}}),
    };
    for (const Series& f : args) {
      suite.add("log-law", "log(exp f) = f for f = " + format_series(f), [&, f = f] {
        return suite.equal_to_budget(log_total(suite.exp_fn(f), suite.budget), f);
      });
    }
  }

  return suite.report;
}

}  // namespace tss
