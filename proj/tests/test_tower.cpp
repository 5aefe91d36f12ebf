#include <doctest.h>

#include "test_util.hpp"

using namespace tss;
using namespace tss::testing;

namespace {

const FieldKind Q = FieldKind::rationals;

Monomial l(std::uint32_t i) { return Monomial::log_monomial(i); }

Series s_mono(const Monomial& m) { return make_monomial_series(m, Q); }

}  // namespace

TEST_CASE("exp_total inverts log monomials via extraction") {
  // exp(l1) = x.
  Series ex = exp_total(s_mono(l(1)));
  REQUIRE(ex.is_finite());
  CHECK(finite_series_equal(ex, s_mono(l(0))));

  // exp(2 l1 + l2) = x^2 l1.
  Series f = finite_of({{l(1), Constant(2)}, {l(2), Constant(1)}});
  CHECK(finite_series_equal(exp_total(f), s_mono(x_pow(2).times(l(1)))));

  // exp(x) is a fresh height-1 transmonomial.
  Series exp_x = exp_total(s_mono(l(0)));
  REQUIRE(exp_x.is_finite());
  REQUIRE(exp_x.finite_terms().size() == 1);
  const Monomial& m = exp_x.finite_terms()[0].monomial;
  CHECK(m.height() == 1);
  CHECK(m.log_part().empty());
  CHECK(level(exp_x) == 1);
}

TEST_CASE("exp_total(log_monomial(m)) = m structurally on random monomials") {
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    Monomial m = random_canonical_monomial(rng, rng.int_in(0, 2));
    Series back = exp_total(make_finite_series(log_of_monomial(m), Q));
    REQUIRE(back.is_finite());
    REQUIRE(back.finite_terms().size() == 1);
    CHECK(back.finite_terms()[0].monomial == m);
    CHECK(back.finite_terms()[0].coefficient == Constant(1));
  }
}

TEST_CASE("log_total on worked examples") {
  CHECK(finite_series_equal(log_total(s_mono(l(0))), s_mono(l(1))));
  CHECK(dominant_monomial(log_total(make_constant_series(Constant(1), Q))).is_zero());

  // log(exp(x^2) x^3 (1 + 1/x)) = x^2 + 3 l1 + (1/x - 1/(2x^2) + ...).
  Monomial em = exp_argument_to_monomial({{x_pow(2), Constant(1)}});
  Series g = series_mul(s_mono(em.times(x_pow(3))),
                        finite_of({{Monomial::one(), Constant(1)}, {x_pow(-1), Constant(1)}}));
  TermList t = take_terms(log_total(g), 4);
  REQUIRE(t.size() == 4);
  CHECK(t[0].monomial == x_pow(2));
  CHECK(t[0].coefficient == Constant(1));
  CHECK(t[1].monomial == l(1));
  CHECK(t[1].coefficient == Constant(3));
  CHECK(t[2].monomial == x_pow(-1));
  CHECK(t[2].coefficient == Constant(1));
  CHECK(t[3].coefficient == Constant(Rational(-1, 2)));
}

TEST_CASE("log_total . exp_total is the identity on zero-constant finite input") {
  Rng rng(73);
  for (int i = 0; i < 50; ++i) {
    // Purely infinite + infinitesimal finite transseries (constant term 0).
    TermList terms;
    int n = rng.int_in(1, 4);
    for (int k = 0; k < n; ++k) {
      Monomial m = random_canonical_monomial(rng, rng.int_in(0, 1));
      if (m.is_one()) m = x_pow(rng.int_in(1, 3));
      terms.push_back({m, Constant(rng.rational(9, 4, false))});
    }
    Series f = make_finite_series(normalize_term_list(std::move(terms)), Q);
    Series back = log_total(exp_total(f), Budget(128));
    // Exact equality of the finite parts, term by term.
    CHECK(agree_on_prefix(back, f, f.finite_terms().size() + 2, 512));
    CHECK(dominant_monomial(series_sub(truncate(back, f.finite_terms().size() + 1, Budget(512)),
                                       f))
              .is_zero());
  }
}

TEST_CASE("exp_total . log_total is the identity to 20 terms on positive grids") {
  Rng rng(79);
  for (int i = 0; i < 25; ++i) {
    Series g = series_mul(s_mono(random_canonical_monomial(rng, 1)), random_grid_unit(rng));
    CHECK(agree_on_prefix(exp_total(log_total(g, Budget(128)), Budget(128)), g, 12, 1024));
  }
}

TEST_CASE("exp_total is a strictly increasing morphism on level <= 1 input") {
  Rng rng(83);
  auto zero_constant_sample = [&] {
    // exp under the rational field needs a vanishing constant term.
    TermList terms;
    int n = rng.int_in(1, 3);
    for (int k = 0; k < n; ++k) {
      Monomial m = random_canonical_monomial(rng, rng.int_in(0, 1));
      if (m.is_one()) m = x_pow(rng.int_in(-3, 3) >= 0 ? rng.int_in(1, 3) : -1);
      terms.push_back({m, Constant(rng.rational(9, 4, false))});
    }
    return make_finite_series(normalize_term_list(std::move(terms)), Q);
  };
  int checked = 0;
  for (int i = 0; i < 120 && checked < 25; ++i) {
    Series f = zero_constant_sample();
    Series g = zero_constant_sample();
    Sign cmp = series_sign(series_sub(f, g));
    if (!is_determinate(cmp) || sign_value(cmp) == 0) continue;
    ++checked;
    if (sign_value(cmp) > 0) std::swap(f, g);  // now f < g
    Series ef = exp_total(f, Budget(128));
    Series eg = exp_total(g, Budget(128));
    Sign order = series_sign(series_sub(ef, eg), Budget(128));
    REQUIRE(is_determinate(order));
    CHECK(sign_value(order) < 0);
    // Morphism: exp(f+g) = exp(f) exp(g), checked on the leading prefix.
    Series lhs = exp_total(series_add(f, g), Budget(128));
    Series rhs = series_mul(ef, eg);
    Sign zero = series_sign(series_sub(lhs, rhs), Budget(48));
    CHECK(zero != Sign::positive);
    CHECK(zero != Sign::negative);
  }
  CHECK(checked >= 25);
}

TEST_CASE("exp_total raises the level by at most one") {
  Rng rng(89);
  for (int n = 0; n <= 1; ++n) {
    ExtensionStep step = extension_step(n);
    for (int i = 0; i < 30; ++i) {
      Series f = random_finite_transseries(rng, n, Q, 3);
      if (!step.in_field(f)) continue;
      try {
        Series ef = exp_total(f, Budget(128));
        CHECK(level(ef) <= n + 1);
      } catch (const Error& e) {
        // Nonzero constant terms have no exp in the rational field.
        CHECK(e.code() == errc::constant_exp_unsupported);
      }
    }
  }
}

TEST_CASE("levels on worked examples") {
  CHECK(level(finite_of({{l(0), Constant(1)}, {l(1), Constant(1)}})) == 0);
  Series exp_x = exp_total(s_mono(l(0)));
  CHECK(level(exp_x) == 1);
  Series nested = exp_total(series_add(exp_x, s_mono(l(0))));
  CHECK(level(nested) == 2);
  CHECK(extension_step(1).in_field(exp_x));
  CHECK(extension_step(1).in_infinite_part(exp_x));
  CHECK_FALSE(extension_step(0).in_field(exp_x));
  CHECK(extension_step(0).in_bounded_part(finite_of({{x_pow(-1), Constant(2)}})));
}

TEST_CASE("exp_total under the rational field rejects nonzero constant terms") {
  Series f = finite_of({{l(0), Constant(1)}, {Monomial::one(), Constant(1)}});
  try {
    exp_total(f);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::constant_exp_unsupported);
  }
}

TEST_CASE("power on worked examples") {
  // power(x, 1/2) = x^(1/2).
  Series root = power(s_mono(l(0)), Constant(Rational(1, 2)));
  TermList t = take_terms(root, 2);
  REQUIRE(t.size() == 1);
  CHECK(t[0].monomial == Monomial::power_of_x(Constant(Rational(1, 2))));

  // power(1 - 1/x, -1) is the geometric series.
  Series base = finite_of({{Monomial::one(), Constant(1)}, {x_pow(-1), Constant(-1)}});
  CHECK(agree_on_prefix(power(base, Constant(-1)), series_invert(base), 20));

  // power(x^2 + x, 1/2) = x + 1/2 - 1/(8x) + ...
  Series f = finite_of({{x_pow(2), Constant(1)}, {x_pow(1), Constant(1)}});
  Series half = power(f, Constant(Rational(1, 2)));
  TermList h = take_terms(half, 3);
  REQUIRE(h.size() == 3);
  CHECK(h[0].monomial == x_pow(1));
  CHECK(h[0].coefficient == Constant(1));
  CHECK(h[1].monomial.is_one());
  CHECK(h[1].coefficient == Constant(Rational(1, 2)));
  CHECK(h[2].coefficient == Constant(Rational(-1, 8)));
  // Square it back: the result multiplies to f on every inspected term.
  CHECK(agree_on_prefix(series_mul(half, half), f, 2, 1024));
  Sign residue = series_sign(series_sub(series_mul(half, half), f), Budget(24));
  CHECK(residue != Sign::positive);
  CHECK(residue != Sign::negative);
}

TEST_CASE("power laws") {
  Rng rng(97);
  for (int i = 0; i < 20; ++i) {
    Series f = series_mul(s_mono(x_pow(rng.int_in(-2, 3))), random_grid_unit(rng));
    CHECK(agree_on_prefix(power(f, Constant(1), Budget(128)), f, 10, 512));
    Rational r(rng.int_in(-3, 3), rng.int_in(1, 2));
    Rational s(rng.int_in(-3, 3), rng.int_in(1, 2));
    Series lhs = series_mul(power(f, Constant(r), Budget(128)),
                            power(f, Constant(s), Budget(128)));
    Series rhs = power(f, Constant(r + s), Budget(128));
    Sign zero = series_sign(series_sub(lhs, rhs), Budget(24));
    CHECK(zero != Sign::positive);
    CHECK(zero != Sign::negative);
  }
  try {
    power(finite_of({{x_pow(1), Constant(-1)}}), Constant(Rational(1, 2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_positive);
  }
}

TEST_CASE("positive integer powers of finite series stay finite and exact") {
  Series f = finite_of({{x_pow(1), Constant(1)}, {Monomial::one(), Constant(1)}});
  Series sq = power(f, Constant(2));
  REQUIRE(sq.is_finite());
  CHECK(finite_series_equal(sq, finite_of({{x_pow(2), Constant(1)},
                                           {x_pow(1), Constant(2)},
                                           {Monomial::one(), Constant(1)}})));
}
