#ifndef TSS_SERIES_HPP
#define TSS_SERIES_HPP

#include "tss/budget.hpp"
#include "tss/monomial.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace tss {

// Representation tiers, widening from exact-and-finite to honest
// semidecidability:
//   finite  - materialized term list; every query is exact and eager.
//   grid    - lazily enumerated series whose support lies in a finitely
//             generated grid m0 * {n1..nk}^N (all generators < 1). Grids
//             built from finite data by ring operations and inversion carry
//             an exact rational-function witness f = P/Q (P, Q finite) and
//             answer zero/sign/dominant queries exactly from it.
//   stream  - an arbitrary strictly decreasing memoized term enumerator;
//             zero-tests are three-valued under a Budget.
enum class Tier { finite, grid, stream };

const char* tier_name(Tier t);

// Exact rational-function witness: the series equals num/den with both parts
// finite and den nonzero. Survives +, -, *, inversion and truncation-splits.
struct Witness {
  TermList num;
  TermList den;
};

// Grid metadata: support is contained in start * {generators}^N.
struct GridShape {
  Monomial start;
  std::vector<Monomial> generators;  // each < 1
};

class StreamCore;

// Raw candidate producer behind a memoized stream. Candidates must have
// strictly decreasing monomials across calls; a zero coefficient marks a
// cancellation (the memoizer skips it, consuming budget).
class TermGenerator {
 public:
  virtual ~TermGenerator() = default;
  virtual std::optional<Term> next(WorkMeter& meter) = 0;
};

// Memoizing wrapper around a generator. Thread-safe: observers lock the core
// while extending the prefix, so concurrent readers see a single consistent
// prefix. Emission order (strictly decreasing, nonzero coefficients) is
// validated here, so a misbehaving primitive stream is rejected rather than
// corrupting downstream merges.
class StreamCore {
 public:
  explicit StreamCore(TermList materialized);  // pre-finished stream
  explicit StreamCore(std::unique_ptr<TermGenerator> gen);

  // Term i, or nullopt if the series provably has at most i terms.
  // `outer` marks the stream an observation is directly watching: cancelled
  // candidates then count against the observation's term budget.
  std::optional<Term> term_at(std::size_t i, WorkMeter& meter, bool outer = false) const;

  // The memoized prefix so far (no new work).
  TermList snapshot_prefix() const;
  bool known_exhausted() const;

 private:
  mutable std::mutex mu_;
  mutable TermList prefix_;
  mutable bool exhausted_;
  mutable std::optional<Monomial> last_raw_;
  mutable std::unique_ptr<TermGenerator> gen_;
};

class Series;

struct SeriesImpl {
  FieldKind field = FieldKind::rationals;
  Tier tier = Tier::finite;
  int level_bound = 0;  // exact for finite series
  std::optional<TermList> finite;
  std::optional<Witness> witness;
  std::optional<GridShape> grid;
  std::shared_ptr<StreamCore> core;
};

// Immutable handle to a well-based series. All operations are free
// functions; values are safe to share between threads.
class Series {
 public:
  Series() : impl_(zero_impl()) {}

  FieldKind field() const { return impl_->field; }
  Tier tier() const { return impl_->tier; }
  int level_bound() const { return impl_->level_bound; }

  bool is_finite() const { return impl_->tier == Tier::finite; }
  const TermList& finite_terms() const;  // requires is_finite()

  bool has_witness() const { return impl_->witness.has_value(); }
  const Witness& witness() const { return *impl_->witness; }
  const GridShape* grid_shape() const { return impl_->grid ? &*impl_->grid : nullptr; }

  const StreamCore& core() const { return *impl_->core; }
  std::shared_ptr<const SeriesImpl> impl() const { return impl_; }

  static Series from_impl(std::shared_ptr<const SeriesImpl> impl) { return Series(std::move(impl)); }

 private:
  explicit Series(std::shared_ptr<const SeriesImpl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<const SeriesImpl> zero_impl();

  std::shared_ptr<const SeriesImpl> impl_;
};

// --- constructors ---

Series make_finite_series(TermList terms, FieldKind field);
Series make_constant_series(const Constant& c, FieldKind field);
Series make_monomial_series(const Monomial& m, FieldKind field);
// An arbitrary decreasing stream; index-based producer (nullopt = end).
Series make_primitive_stream(std::function<std::optional<Term>(std::uint64_t)> producer,
                             FieldKind field, int level_bound);

// The EL-witness stream  sum_n (l_0 l_1 ... l_n)^{-1}: unbounded iterated-log
// depth (not an LE-series), all monomials < 1, dominant monomial 1/x.
Series el_witness_series(FieldKind field);

// Series from an arbitrary generator (used by the analytic module).
Series make_lazy_series(FieldKind field, Tier tier, int level_bound,
                        std::unique_ptr<TermGenerator> gen, std::optional<Witness> witness,
                        std::optional<GridShape> shape);

// --- ring operations ---

Series series_add(const Series& f, const Series& g);
Series series_neg(const Series& f);
Series series_sub(const Series& f, const Series& g);
Series series_scale(const Series& f, const Constant& c, const Monomial& shift);
Series series_mul(const Series& f, const Series& g);

// --- observations ---

struct DominantResult {
  enum class Kind { monomial, zero, indeterminate };
  Kind kind;
  Monomial monomial;     // valid when kind == monomial
  Constant coefficient;  // leading coefficient, valid when kind == monomial

  bool is_zero() const { return kind == Kind::zero; }
  bool is_indeterminate() const { return kind == Kind::indeterminate; }
};

// Maximal support monomial, the distinguished ZeroSeries verdict, or
// Indeterminate once the budget is spent cancelling candidates.
DominantResult dominant_monomial(const Series& f, const Budget& b = Budget());

// Exact coefficient of m in f. Stream/grid tiers enumerate until the support
// passes m; throws budget_exhausted if that takes more than b.max_terms
// emitted terms (or exceeds the internal safety cap).
Constant series_coefficient(const Series& f, const Monomial& m, const Budget& b = Budget());

struct SupportPrefix {
  TermList terms;
  bool exhausted;  // true when the series has no further terms
};

// First k terms in strictly decreasing monomial order.
SupportPrefix enumerate_support(const Series& f, std::size_t k, const Budget& b = Budget());

// Finite partial sum of the first k terms.
Series truncate(const Series& f, std::size_t k, const Budget& b = Budget());

// 1/f as a lazy series via f = c*d*(1+eps), 1/f = c^{-1} d^{-1} sum (-eps)^n.
// Errors: division_by_zero when f = 0, indeterminate_pivot when the dominant
// monomial cannot be decided within budget.
Series series_invert(const Series& f, const Budget& b = Budget());

// Internal building block shared by the analytic module: sum_n a_n eps^n for
// a strictly infinitesimal eps, with coefficient oracle a_n. The oracle may
// return nullopt to declare every further coefficient zero, which lets
// polynomial expansions terminate. The result tier is grid when eps is
// finite or grid.
Series taylor_composition(std::function<std::optional<Constant>(unsigned)> coefficients,
                          const Series& eps, std::string what);

// View of f starting at term index `skip` (shares f's memoization).
Series series_suffix(const Series& f, std::size_t skip, const Budget& b = Budget());

// Equality of finite series is structural; other tiers are compared by the
// three-valued zero test of the difference elsewhere.
bool finite_series_equal(const Series& f, const Series& g);

void require_same_field(const Series& f, const Series& g);

}  // namespace tss

#endif  // TSS_SERIES_HPP
