#include <doctest.h>

#include "test_util.hpp"

using namespace tss;
using namespace tss::testing;

namespace {

const FieldKind Q = FieldKind::rationals;

Series witness_minus(const Constant& c) {
  // sum_n (l0...ln)^-1  -  c/l0
  return series_sub(el_witness_series(Q),
                    finite_of({{Monomial::log_monomial(0).inverse(), c}}));
}

}  // namespace

TEST_CASE("series_sign on worked examples") {
  CHECK(series_sign(finite_of({{x_pow(1), Constant(-2)}, {Monomial::one(), Constant(1000000)}})) ==
        Sign::negative);
  CHECK(series_sign(make_finite_series({}, Q)) == Sign::zero);
  // Both the witness stream and 2/l0 share the dominant monomial 1/l0 with
  // coefficients 1 vs 2, so the difference is eventually negative.
  CHECK(series_sign(witness_minus(Constant(2))) == Sign::negative);
  CHECK(series_sign(witness_minus(Constant(Rational(1, 2)))) == Sign::positive);
}

TEST_CASE("series_cmp_abs on worked examples") {
  Series x = make_monomial_series(Monomial::log_monomial(0), Q);
  Series ex = exp_total(x);
  CHECK(series_cmp_abs(x, ex) == AbsCmp::smaller);

  Series a = finite_of({{x_pow(2), Constant(5)}});
  Series b = finite_of({{x_pow(2), Constant(1)}, {x_pow(1), Constant(1)}});
  CHECK(series_cmp_abs(a, b) == AbsCmp::asymptotic);

  Series zero = make_finite_series({}, Q);
  CHECK(series_cmp_abs(zero, zero) == AbsCmp::asymptotic);
  CHECK(series_cmp_abs(zero, x) == AbsCmp::smaller);
}

TEST_CASE("trichotomy and translation invariance on random finite series") {
  Rng rng(2023);
  for (int i = 0; i < 200; ++i) {
    Series f = random_finite_transseries(rng, 1);
    Series g = random_finite_transseries(rng, 1);
    Series h = random_finite_transseries(rng, 1);
    Sign fg = series_sign(series_sub(f, g));
    Sign gf = series_sign(series_sub(g, f));
    REQUIRE(is_determinate(fg));
    CHECK(sign_value(fg) == -sign_value(gf));
    // f < g implies f + h < g + h.
    Sign shifted = series_sign(series_sub(series_add(f, h), series_add(g, h)));
    CHECK(sign_value(shifted) == sign_value(fg));
  }
}

TEST_CASE("f <= g in absolute growth iff d(f) <= d(g), against the naive oracle") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    Series f = random_finite_transseries(rng, 1);
    Series g = random_finite_transseries(rng, 1);
    auto df = naive_dominant(f.finite_terms());
    auto dg = naive_dominant(g.finite_terms());
    AbsCmp got = series_cmp_abs(f, g);
    if (!df && !dg) {
      CHECK(got == AbsCmp::asymptotic);
    } else if (!df) {
      CHECK(got == AbsCmp::smaller);
    } else if (!dg) {
      CHECK(got == AbsCmp::larger);
    } else {
      switch (Monomial::compare(df->monomial, dg->monomial)) {
        case Cmp::less: CHECK(got == AbsCmp::smaller); break;
        case Cmp::greater: CHECK(got == AbsCmp::larger); break;
        case Cmp::equal: CHECK(got == AbsCmp::asymptotic); break;
      }
    }
  }
}

TEST_CASE("decompose on worked examples") {
  Series f = finite_of(
      {{x_pow(2), Constant(1)}, {Monomial::one(), Constant(3)}, {x_pow(-1), Constant(1)}});
  Decomposition parts = decompose(f);
  CHECK(finite_series_equal(parts.infinite, finite_of({{x_pow(2), Constant(1)}})));
  CHECK(parts.constant == Constant(3));
  CHECK(finite_series_equal(parts.infinitesimal, finite_of({{x_pow(-1), Constant(1)}})));

  // The EL witness: all monomials < 1, so the triple is (0, 0, itself).
  Decomposition w = decompose(el_witness_series(Q));
  CHECK(w.infinite.finite_terms().empty());
  CHECK(w.constant.is_zero());
  CHECK(agree_on_prefix(w.infinitesimal, el_witness_series(Q), 6));

  Decomposition c = decompose(make_constant_series(Constant(7), Q));
  CHECK(c.infinite.finite_terms().empty());
  CHECK(c.constant == Constant(7));
  CHECK(dominant_monomial(c.infinitesimal).is_zero());
}

TEST_CASE("decompose parts live in the right regions and reassemble") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    Series f = rng.chance(0.5) ? random_finite_transseries(rng, 1) : random_grid_series(rng);
    Decomposition parts = decompose(f, Budget(128));
    for (const auto& t : parts.infinite.finite_terms())
      CHECK(t.monomial.compare_to_one() == Cmp::greater);
    for (const auto& t : take_terms(parts.infinitesimal, 10))
      CHECK(t.monomial.compare_to_one() == Cmp::less);
    Series rebuilt = series_add(series_add(parts.infinite,
                                           make_constant_series(parts.constant, Q)),
                                parts.infinitesimal);
    CHECK(agree_on_prefix(rebuilt, f, 12, 512));
    for (int k = -4; k <= 4; ++k)
      CHECK(series_coefficient(rebuilt, x_pow(k), Budget(256)) ==
            series_coefficient(f, x_pow(k), Budget(256)));
  }
}

TEST_CASE("the valuation ring is convex") {
  Rng rng(41);
  for (int i = 0; i < 120; ++i) {
    Series f = random_finite_transseries(rng, 1);
    Series g = random_finite_transseries(rng, 1);
    if (is_bounded(f) != Verdict::yes) continue;
    // |g| <= |f| means d(g) <= d(f).
    if (series_cmp_abs(g, f) != AbsCmp::larger) CHECK(is_bounded(g) == Verdict::yes);
  }
}

TEST_CASE("valuation is additive and order-reversing") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    Series f = random_finite_transseries(rng, 1);
    Series g = random_finite_transseries(rng, 1);
    ValuationData vf = valuation(f);
    ValuationData vg = valuation(g);
    CHECK(valuation(series_mul(f, g)) == vf.plus(vg));
    // v f >= v g iff f <= g in absolute growth.
    AbsCmp order = series_cmp_abs(f, g);
    Cmp vcmp = ValuationData::compare(vf, vg);
    if (order == AbsCmp::smaller) CHECK(vcmp == Cmp::greater);
    if (order == AbsCmp::larger) CHECK(vcmp == Cmp::less);
    if (order == AbsCmp::asymptotic) CHECK(vcmp == Cmp::equal);
  }
}

TEST_CASE("regroup on the worked examples") {
  Monomial x = Monomial::log_monomial(0);
  Monomial l1 = Monomial::log_monomial(1);
  Monomial ex = exp_argument_to_monomial({{x, Constant(1)}});

  // f = exp(x) l1 + exp(x) l1^2 + x, split into log part vs exp part.
  Series f = finite_of({{ex.times(l1), Constant(1)},
                        {ex.times(l1.pow(Constant(2))), Constant(1)},
                        {x, Constant(1)}});
  RegroupedSeries grouped = regroup(f, split_log_vs_exp());
  REQUIRE(grouped.terms.size() == 2);
  CHECK(grouped.terms[0].outer == ex);
  CHECK(finite_series_equal(grouped.terms[0].inner,
                            finite_of({{l1.pow(Constant(2)), Constant(1)}, {l1, Constant(1)}})));
  CHECK(grouped.terms[1].outer == Monomial::one());
  CHECK(finite_series_equal(grouped.terms[1].inner, finite_of({{x, Constant(1)}})));
  CHECK(finite_series_equal(grouped.flatten(), f));

  // A constant regroups as itself at outer monomial 1.
  RegroupedSeries c = regroup(make_constant_series(Constant(3), Q), split_log_vs_exp());
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].outer.is_one());

  // f = x*l1 with the l1-axis as the convex factor.
  RegroupedSeries axis = regroup(finite_of({{x.times(l1), Constant(1)}}), split_log_tail(1));
  REQUIRE(axis.terms.size() == 1);
  CHECK(axis.terms[0].outer == x);
  CHECK(finite_series_equal(axis.terms[0].inner, finite_of({{l1, Constant(1)}})));
}

TEST_CASE("regroup flatten is the identity on random finite series") {
  Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    Series f = random_finite_transseries(rng, 1);
    for (const MonomialSplit& split : {split_log_vs_exp(), split_log_tail(1)}) {
      RegroupedSeries grouped = regroup(f, split);
      CHECK(finite_series_equal(grouped.flatten(), f));
      for (std::size_t k = 1; k < grouped.terms.size(); ++k)
        CHECK(Monomial::compare(grouped.terms[k].outer, grouped.terms[k - 1].outer) ==
              Cmp::less);
    }
  }
}

TEST_CASE("invalid splits are rejected") {
  MonomialSplit broken{"broken", [](const Monomial&) {
                         return std::make_pair(Monomial::log_monomial(1),
                                               Monomial::log_monomial(2));
                       }};
  try {
    regroup(finite_of({{x_pow(1), Constant(1)}}), broken);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_split);
  }
}
