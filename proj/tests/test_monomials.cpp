#include <doctest.h>

#include "test_util.hpp"

using namespace tss;
using namespace tss::testing;

namespace {

Monomial l(std::uint32_t i) { return Monomial::log_monomial(i); }

Monomial exp_of(std::initializer_list<std::pair<Monomial, Constant>> arg_terms) {
  TermList list;
  for (const auto& [m, c] : arg_terms) list.push_back({m, c});
  return exp_argument_to_monomial(normalize_term_list(std::move(list)));
}

}  // namespace

TEST_CASE("group laws on worked monomials") {
  CHECK(x_pow(2).times(x_pow(-2)).is_one());

  Monomial lhs = l(0).times(l(1)).times(l(1)).times(l(0).inverse());
  CHECK(lhs == l(1).pow(Constant(2)));

  // exp(x^2)*x * exp(-x^2)*l1 = x*l1: the argument series cancel.
  Monomial a = exp_of({{x_pow(2), Constant(1)}}).times(l(0));
  Monomial b = exp_of({{x_pow(2), Constant(-1)}}).times(l(1));
  CHECK(a.times(b) == l(0).times(l(1)));
}

TEST_CASE("inverse and identity") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Monomial m = random_canonical_monomial(rng, rng.int_in(0, 2));
    CHECK(m.times(m.inverse()).is_one());
    CHECK(m.times(Monomial::one()) == m);
  }
}

TEST_CASE("l0 dominates every power of l1") {
  CHECK(Monomial::compare(l(0), l(1).pow(Constant(100))) == Cmp::greater);
  CHECK(Monomial::compare(l(1), l(2).pow(Constant(1000))) == Cmp::greater);
  CHECK(Monomial::compare(l(0).inverse(), l(1).inverse()) == Cmp::less);
}

TEST_CASE("transmonomial comparison via the argument sign") {
  // exp(x^2)*x^-5 vs exp(x)*x^100: x^2 - x > 0 decides. The sign is checked
  // against the brute-force dominant-term oracle.
  TermList diff{{x_pow(2), Constant(1)}, {x_pow(1), Constant(-1)}};
  auto dom = naive_dominant(diff);
  REQUIRE(dom.has_value());
  CHECK(dom->coefficient.sign() == 1);

  Monomial big = exp_of({{x_pow(2), Constant(1)}}).times(x_pow(-5));
  Monomial small = exp_of({{x_pow(1), Constant(1)}}).times(x_pow(100));
  CHECK(Monomial::compare(big, small) == Cmp::greater);
  CHECK(Monomial::compare(big, big) == Cmp::equal);
}

TEST_CASE("comparison is a total order compatible with the group law") {
  Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    Monomial m = random_canonical_monomial(rng, rng.int_in(0, 2));
    Monomial n = random_canonical_monomial(rng, rng.int_in(0, 2));
    Monomial p = random_canonical_monomial(rng, rng.int_in(0, 2));
    Cmp mn = Monomial::compare(m, n);
    Cmp nm = Monomial::compare(n, m);
    // Antisymmetry / trichotomy.
    if (mn == Cmp::equal) {
      CHECK(nm == Cmp::equal);
      CHECK(m == n);
    } else {
      CHECK(nm == (mn == Cmp::less ? Cmp::greater : Cmp::less));
    }
    // Translation invariance.
    CHECK(Monomial::compare(m.times(p), n.times(p)) == mn);
  }
}

TEST_CASE("log of worked monomials") {
  // log(l0^a0 l1^a1) = a0 l1 + a1 l2.
  Monomial m = l(0).pow(Constant(Rational(2, 3))).times(l(1).pow(Constant(-5)));
  TermList lg = log_of_monomial(m);
  REQUIRE(lg.size() == 2);
  CHECK(lg[0].monomial == l(1));
  CHECK(lg[0].coefficient == Constant(Rational(2, 3)));
  CHECK(lg[1].monomial == l(2));
  CHECK(lg[1].coefficient == Constant(-5));

  CHECK(log_of_monomial(Monomial::one()).empty());

  // log(exp(x^2)*x^3) = x^2 + 3 l1.
  Monomial t = exp_of({{x_pow(2), Constant(1)}}).times(x_pow(3));
  TermList lt = log_of_monomial(t);
  REQUIRE(lt.size() == 2);
  CHECK(lt[0].monomial == x_pow(2));
  CHECK(lt[0].coefficient == Constant(1));
  CHECK(lt[1].monomial == l(1));
  CHECK(lt[1].coefficient == Constant(3));
}

TEST_CASE("log is an order-preserving group morphism into series") {
  Rng rng(23);
  for (int i = 0; i < 120; ++i) {
    Monomial m = random_canonical_monomial(rng, rng.int_in(0, 2));
    Monomial n = random_canonical_monomial(rng, rng.int_in(0, 2));
    CHECK(term_lists_equal(log_of_monomial(m.times(n)),
                           add_term_lists(log_of_monomial(m), log_of_monomial(n))));
    // m > 1 iff log m > 0.
    Cmp against_one = m.compare_to_one();
    auto dom = naive_dominant(log_of_monomial(m));
    if (against_one == Cmp::equal) {
      CHECK_FALSE(dom.has_value());
    } else {
      REQUIRE(dom.has_value());
      CHECK((against_one == Cmp::greater) == (dom->coefficient.sign() > 0));
    }
  }
}

TEST_CASE("extraction makes exp(log m) = m structural") {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    Monomial m = random_canonical_monomial(rng, rng.int_in(0, 2));
    CHECK(exp_argument_to_monomial(log_of_monomial(m)) == m);
  }
  // The worked value: exp(2 l1 + l2) = x^2 l1.
  Monomial worked = exp_of({{l(1), Constant(2)}, {l(2), Constant(1)}});
  CHECK(worked == x_pow(2).times(l(1)));
  CHECK(worked.height() == 0);
}

TEST_CASE("canonicalization is idempotent and preserves comparisons") {
  Rng rng(37);
  for (int i = 0; i < 80; ++i) {
    Monomial m = random_canonical_monomial(rng, rng.int_in(0, 2));
    Monomial n = random_canonical_monomial(rng, rng.int_in(0, 2));
    Monomial m2 = Monomial::make(m.exp_part(), m.log_part());
    CHECK(m2 == m);
    CHECK(Monomial::compare(m2, n) == Monomial::compare(m, n));
  }
}

TEST_CASE("heights count exp nesting") {
  CHECK(l(0).height() == 0);
  Monomial e1 = exp_of({{x_pow(1), Constant(1)}});
  CHECK(e1.height() == 1);
  Monomial e2 = exp_of({{e1, Constant(1)}, {x_pow(1), Constant(1)}});
  CHECK(e2.height() == 2);
}
