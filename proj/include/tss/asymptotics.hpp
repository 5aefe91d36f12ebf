#ifndef TSS_ASYMPTOTICS_HPP
#define TSS_ASYMPTOTICS_HPP

#include "tss/tower.hpp"

namespace tss {

// Eventual comparison of germs at +infinity: the sign of f - g. Equal is
// reported only when the zero test is exact; Indeterminate never degrades
// to Equal.
enum class Order { less, equal, greater, indeterminate };

Order eventual_compare(const Series& f, const Series& g, const Budget& b = Budget());

const char* order_name(Order o);

struct Limit {
  enum class Kind { plus_infinity, minus_infinity, finite, indeterminate };
  Kind kind;
  Constant value;  // valid when kind == finite
};

// Reads the limit off the decomposition: +-infinity when the infinite part
// is nonzero (sign of its dominant coefficient), else the constant term.
Limit limit_at_infinity(const Series& f, const Budget& b = Budget());

// ---------------------------------------------------------------------------
// Executable instances of the exponential-field axioms (E1)-(E5).

enum class Outcome { pass, fail, indeterminate };

struct AxiomInstance {
  std::string axiom;        // "E1" ... "E5", "exp>=1+f", "log-law"
  std::string description;  // the instance, in formula form
  Outcome outcome;
  std::string witness;      // what was observed, for failures/indeterminates
};

struct AxiomReport {
  std::vector<AxiomInstance> instances;
  int passed = 0, failed = 0, indeterminate = 0;

  bool all_passed() const { return failed == 0 && indeterminate == 0; }
};

// Swap-in exponential used by the suite; tests inject broken implementations
// to confirm the instances can fail.
struct AxiomHooks {
  std::function<Series(const Series&, const Budget&)> exp;
};

// Runs every instance at the given budget. The suite works over the
// exp-rational field internally so that anchors with nonzero constant term
// are expressible. Failures are report entries, never exceptions; budget
// exhaustion surfaces as Outcome::indeterminate.
AxiomReport axiom_suite(const Budget& b = Budget(), const AxiomHooks& hooks = {});

}  // namespace tss

#endif  // TSS_ASYMPTOTICS_HPP
