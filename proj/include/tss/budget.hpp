#ifndef TSS_BUDGET_HPP
#define TSS_BUDGET_HPP

#include "tss/error.hpp"

#include <cstdint>

namespace tss {

// Term-emission cap for observations of lazy series. Zero- and sign-tests on
// the stream tier are only semidecidable; the budget turns them into
// deterministic three-valued verdicts.
struct Budget {
  int max_terms;

  Budget() : max_terms(default_max_terms()) {}
  explicit Budget(int terms) : max_terms(terms >= 1 ? terms : 1) {}

  // Process-wide default (64 unless overridden by the CLI).
  static int default_max_terms();
  static void set_default_max_terms(int terms);
};

// Accounting for one observation. `emissions` bounds direct events on the
// observed stream (emitted terms, or cancelled candidates for sign queries)
// by the budget; `ticks` is the global safety cap on total internal work
// across all streams the observation pulls from.
class WorkMeter {
 public:
  explicit WorkMeter(const Budget& b)
      : emissions_left_(b.max_terms),
        ticks_left_(static_cast<std::uint64_t>(b.max_terms) * kTicksPerTerm + kTickFloor) {}

  void tick() { charge(1); }

  // Work is charged in proportion to the size of the objects produced, so a
  // stream of ever-deeper monomials cannot starve observers that do honest
  // small-step work.
  void charge(std::uint64_t cost) {
    if (ticks_left_ < cost)
      fail(errc::budget_exhausted, "safety cap on internal stream work exceeded");
    ticks_left_ -= cost;
  }

  void count_emission() {
    if (emissions_left_ == 0)
      fail(errc::budget_exhausted, "term budget exhausted");
    --emissions_left_;
  }

  bool can_emit() const { return emissions_left_ > 0; }

 private:
  static constexpr std::uint64_t kTicksPerTerm = 1024;
  static constexpr std::uint64_t kTickFloor = 2048;

  std::int64_t emissions_left_;
  std::uint64_t ticks_left_;
};

}  // namespace tss

#endif  // TSS_BUDGET_HPP
