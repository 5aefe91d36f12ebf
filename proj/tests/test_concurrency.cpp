#include <doctest.h>

#include "test_util.hpp"

#include <thread>

using namespace tss;
using namespace tss::testing;

namespace {

const FieldKind Q = FieldKind::rationals;

}  // namespace

TEST_CASE("concurrent observers of one lazy series see a single consistent prefix") {
  Series geo = series_invert(
      finite_of({{Monomial::one(), Constant(1)}, {x_pow(-1), Constant(-1)}}));
  Series shared = series_mul(geo, geo);  // sum (n+1) x^-n, lazily

  constexpr int kThreads = 4;
  constexpr std::size_t kTerms = 120;
  std::vector<TermList> results(kThreads);
  std::vector<std::thread> threads;
  threads.reserve(kThreads);
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&, t] {
      results[t] = enumerate_support(shared, kTerms, Budget(512)).terms;
    });
  }
  for (auto& th : threads) th.join();

  for (int t = 0; t < kThreads; ++t) {
    REQUIRE(results[t].size() == kTerms);
    CHECK(term_lists_equal(results[t], results[0]));
  }
  // The memoized prefix is the one every observer saw.
  for (std::size_t k = 0; k < kTerms; ++k)
    CHECK(results[0][k].coefficient == Constant(Rational(Integer(k + 1), Integer(1))));
}

TEST_CASE("mixed concurrent queries agree with serial answers") {
  Series f = exp_bounded(finite_of({{x_pow(-1), Constant(1)}, {x_pow(-2), Constant(1)}}));
  std::vector<Constant> coefficients(8);
  std::vector<std::thread> threads;
  for (int k = 0; k < 8; ++k)
    threads.emplace_back(
        [&, k] { coefficients[k] = series_coefficient(f, x_pow(-k), Budget(128)); });
  for (auto& th : threads) th.join();

  Series serial = exp_bounded(finite_of({{x_pow(-1), Constant(1)}, {x_pow(-2), Constant(1)}}));
  for (int k = 0; k < 8; ++k)
    CHECK(coefficients[k] == series_coefficient(serial, x_pow(-k), Budget(128)));
}
