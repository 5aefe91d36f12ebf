#include "tss/series.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace tss {

const char* tier_name(Tier t) {
  switch (t) {
    case Tier::finite: return "finite";
    case Tier::grid: return "grid";
    case Tier::stream: return "stream";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// StreamCore

StreamCore::StreamCore(TermList materialized)
    : prefix_(std::move(materialized)), exhausted_(true) {}

StreamCore::StreamCore(std::unique_ptr<TermGenerator> gen)
    : exhausted_(false), gen_(std::move(gen)) {}

std::optional<Term> StreamCore::term_at(std::size_t i, WorkMeter& meter, bool outer) const {
  std::unique_lock<std::mutex> lock(mu_);
  while (prefix_.size() <= i) {
    if (exhausted_) return std::nullopt;
    meter.tick();
    std::optional<Term> cand = gen_->next(meter);
    if (cand)
      meter.charge(cand->monomial.log_part().size() + cand->monomial.exp_part().size());
    if (!cand) {
      exhausted_ = true;
      gen_.reset();
      return std::nullopt;
    }
    if (last_raw_ && Monomial::compare(cand->monomial, *last_raw_) != Cmp::less)
      fail(errc::emission_order, "stream emitted monomials out of decreasing order");
    last_raw_ = cand->monomial;
    if (cand->coefficient.is_zero()) {
      // A cancelled candidate; only the directly observed stream charges it
      // against the term budget.
      if (outer) meter.count_emission();
      continue;
    }
    prefix_.push_back(std::move(*cand));
  }
  return prefix_[i];
}

TermList StreamCore::snapshot_prefix() const {
  std::unique_lock<std::mutex> lock(mu_);
  return prefix_;
}

bool StreamCore::known_exhausted() const {
  std::unique_lock<std::mutex> lock(mu_);
  return exhausted_;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

struct ScaledSource {
  Series src;
  Constant scale;
  Monomial shift;
};

// Decreasing merge of scaled/shifted sources; cancellations surface as
// zero-coefficient candidates.
class LinearCombGenerator final : public TermGenerator {
 public:
  explicit LinearCombGenerator(std::vector<ScaledSource> sources)
      : sources_(std::move(sources)), index_(sources_.size(), 0) {}

  std::optional<Term> next(WorkMeter& meter) override {
    std::optional<Monomial> best;
    for (std::size_t s = 0; s < sources_.size(); ++s) {
      auto head = sources_[s].src.core().term_at(index_[s], meter);
      if (!head) continue;
      Monomial shifted = head->monomial.times(sources_[s].shift);
      if (!best || Monomial::compare(shifted, *best) == Cmp::greater) best = shifted;
    }
    if (!best) return std::nullopt;
    Constant acc(0);
    for (std::size_t s = 0; s < sources_.size(); ++s) {
      auto head = sources_[s].src.core().term_at(index_[s], meter);
      if (!head) continue;
      if (head->monomial.times(sources_[s].shift) == *best) {
        acc = acc + head->coefficient * sources_[s].scale;
        ++index_[s];
      }
    }
    return Term{*best, acc};
  }

 private:
  std::vector<ScaledSource> sources_;
  std::vector<std::size_t> index_;
};

// Cauchy product, enumerated over the index-pair frontier: popping (i, j)
// pushes (i, j+1) always and (i+1, j) only for j = 0, so every pair enters
// the queue exactly once, and every unvisited pair is dominated by a queued
// one, which makes the emission order correct for all terms it emits.
class ProductGenerator final : public TermGenerator {
 public:
  ProductGenerator(Series a, Series b) : a_(std::move(a)), b_(std::move(b)) {}

  std::optional<Term> next(WorkMeter& meter) override {
    if (!initialized_) {
      initialized_ = true;
      auto a0 = a_.core().term_at(0, meter);
      auto b0 = b_.core().term_at(0, meter);
      if (a0 && b0) push_pair(0, 0, meter);
    }
    if (heap_.empty()) return std::nullopt;
    Monomial mono = heap_.top().mono;
    Constant acc(0);
    while (!heap_.empty() && heap_.top().mono == mono) {
      Entry e = heap_.top();
      heap_.pop();
      meter.tick();
      Term ta = *a_.core().term_at(e.i, meter);
      Term tb = *b_.core().term_at(e.j, meter);
      acc = acc + ta.coefficient * tb.coefficient;
      push_pair(e.i, e.j + 1, meter);
      if (e.j == 0) push_pair(e.i + 1, 0, meter);
    }
    return Term{mono, acc};
  }

 private:
  struct Entry {
    Monomial mono;
    std::size_t i, j;
  };
  struct EntryLess {
    bool operator()(const Entry& x, const Entry& y) const {
      return Monomial::compare(x.mono, y.mono) == Cmp::less;
    }
  };

  void push_pair(std::size_t i, std::size_t j, WorkMeter& meter) {
    auto ta = a_.core().term_at(i, meter);
    if (!ta) return;
    auto tb = b_.core().term_at(j, meter);
    if (!tb) return;
    heap_.push(Entry{ta->monomial.times(tb->monomial), i, j});
  }

  Series a_, b_;
  bool initialized_ = false;
  std::priority_queue<Entry, std::vector<Entry>, EntryLess> heap_;
};

// sum_n a_n eps^n for strictly infinitesimal eps. Power streams eps^n are
// built lazily and activated once their dominant monomial d(eps)^n could
// still reach the current emission candidate; d(eps^n) = d(eps)^n exactly
// (no cancellation at the top over a field), so activation needs no
// enumeration of the power itself. The oracle returns nullopt once all
// further coefficients vanish, which lets finite expansions terminate.
class TaylorGenerator final : public TermGenerator {
 public:
  TaylorGenerator(std::function<std::optional<Constant>(unsigned)> coeffs, Series eps,
                  std::string what)
      : coeffs_(std::move(coeffs)), eps_(std::move(eps)), what_(std::move(what)) {}

  std::optional<Term> next(WorkMeter& meter) override {
    if (!initialized_) initialize(meter);
    if (plain_constant_) {
      plain_constant_ = false;
      done_ = true;
      return constant_term_;
    }
    if (done_) return std::nullopt;
    while (true) {
      activate_reachable(meter);
      if (heap_.empty()) {
        if (oracle_done_) {
          done_ = true;
          return std::nullopt;
        }
        continue;  // keep activating; the meter bounds this loop
      }
      Monomial mono = heap_.top().mono;
      Constant acc(0);
      while (!heap_.empty() && heap_.top().mono == mono) {
        Entry e = heap_.top();
        heap_.pop();
        meter.tick();
        acc = acc + e.scaled_coefficient;
        if (auto succ = power_term(e.power, e.index + 1, meter))
          heap_.push(Entry{succ->monomial, succ->coefficient * weights_[e.power], e.power,
                           e.index + 1});
      }
      return Term{mono, acc};
    }
  }

 private:
  struct Entry {
    Monomial mono;
    Constant scaled_coefficient;
    unsigned power;
    std::size_t index;
  };
  struct EntryLess {
    bool operator()(const Entry& x, const Entry& y) const {
      return Monomial::compare(x.mono, y.mono) == Cmp::less;
    }
  };

  void initialize(WorkMeter& meter) {
    initialized_ = true;
    auto e0 = eps_.core().term_at(0, meter);
    std::optional<Constant> a0 = coeffs_(0);
    if (!e0) {
      // eps = 0: the value is the plain constant a_0.
      Constant c = a0 ? *a0 : Constant(0);
      constant_term_ = Term{Monomial::one(), c};
      plain_constant_ = true;
      return;
    }
    if (e0->monomial.compare_to_one() != Cmp::less)
      fail(errc::bad_argument, what_ + ": expansion argument must be infinitesimal");
    dom_eps_ = e0->monomial;
    next_power_dom_ = dom_eps_;
    weights_.push_back(a0 ? *a0 : Constant(0));
    if (!a0) oracle_done_ = true;
    if (a0 && !a0->is_zero()) heap_.push(Entry{Monomial::one(), *a0, 0, 0});
    powers_.push_back(eps_);  // powers_[0] holds eps^1
  }

  // eps^n term lookup; powers_[n-1] is eps^n.
  std::optional<Term> power_term(unsigned power, std::size_t index, WorkMeter& meter) {
    if (power == 0) return std::nullopt;  // the constant has no successor
    return powers_[power - 1].core().term_at(index, meter);
  }

  void activate_reachable(WorkMeter& meter) {
    while (!oracle_done_ &&
           (heap_.empty() ||
            Monomial::compare(next_power_dom_, heap_.top().mono) != Cmp::less)) {
      meter.tick();
      unsigned n = static_cast<unsigned>(weights_.size());
      std::optional<Constant> a = coeffs_(n);
      if (!a) {
        oracle_done_ = true;
        return;
      }
      while (powers_.size() < n) powers_.push_back(series_mul(powers_.back(), eps_));
      weights_.push_back(*a);
      if (!a->is_zero()) {
        Term head = *powers_[n - 1].core().term_at(0, meter);
        heap_.push(Entry{head.monomial, head.coefficient * *a, n, 0});
      }
      next_power_dom_ = next_power_dom_.times(dom_eps_);
    }
  }

  std::function<std::optional<Constant>(unsigned)> coeffs_;
  Series eps_;
  std::string what_;
  bool initialized_ = false;
  bool plain_constant_ = false;
  bool done_ = false;
  bool oracle_done_ = false;
  Term constant_term_{Monomial::one(), Constant(0)};
  Monomial dom_eps_;
  Monomial next_power_dom_;
  std::vector<Series> powers_;     // powers_[k] = eps^{k+1}
  std::vector<Constant> weights_;  // weights_[n] = a_n
  std::priority_queue<Entry, std::vector<Entry>, EntryLess> heap_;
};

class PrimitiveGenerator final : public TermGenerator {
 public:
  explicit PrimitiveGenerator(std::function<std::optional<Term>(std::uint64_t)> producer)
      : producer_(std::move(producer)) {}

  std::optional<Term> next(WorkMeter&) override { return producer_(index_++); }

 private:
  std::function<std::optional<Term>(std::uint64_t)> producer_;
  std::uint64_t index_ = 0;
};

// View of another stream starting at a fixed term index; shares memoization.
class SuffixGenerator final : public TermGenerator {
 public:
  SuffixGenerator(Series src, std::size_t start) : src_(std::move(src)), index_(start) {}

  std::optional<Term> next(WorkMeter& meter) override {
    return src_.core().term_at(index_++, meter);
  }

 private:
  Series src_;
  std::size_t index_;
};

// --- metadata helpers ---

constexpr std::size_t kWitnessTermCap = 2048;

std::optional<Witness> witness_of(const Series& f) {
  if (f.is_finite())
    return Witness{f.finite_terms(), TermList{{Monomial::one(), Constant(1)}}};
  if (f.has_witness()) return f.witness();
  return std::nullopt;
}

std::optional<Witness> cap_witness(std::optional<Witness> w) {
  if (w && (w->num.size() > kWitnessTermCap || w->den.size() > kWitnessTermCap))
    return std::nullopt;
  return w;
}

std::optional<GridShape> shape_of(const Series& f) {
  if (f.is_finite()) {
    const TermList& t = f.finite_terms();
    if (t.empty()) return GridShape{Monomial::one(), {}};
    GridShape shape{t.front().monomial, {}};
    Monomial inv_dom = shape.start.inverse();
    for (std::size_t i = 1; i < t.size(); ++i)
      shape.generators.push_back(t[i].monomial.times(inv_dom));
    return shape;
  }
  if (const GridShape* s = f.grid_shape()) return *s;
  return std::nullopt;
}

void dedupe_generators(GridShape& shape) {
  std::sort(shape.generators.begin(), shape.generators.end(), monomial_less);
  shape.generators.erase(std::unique(shape.generators.begin(), shape.generators.end()),
                         shape.generators.end());
  std::erase_if(shape.generators, [](const Monomial& g) {
    return g.compare_to_one() != Cmp::less;  // only proper generators
  });
}

// Shape of a union of supports: rebase both grids on the larger start.
std::optional<GridShape> merge_shapes(const std::optional<GridShape>& a,
                                      const std::optional<GridShape>& b) {
  if (!a || !b) return std::nullopt;
  GridShape out;
  bool a_high = Monomial::compare(a->start, b->start) != Cmp::less;
  out.start = a_high ? a->start : b->start;
  out.generators = a->generators;
  out.generators.insert(out.generators.end(), b->generators.begin(), b->generators.end());
  Monomial low_factor =
      (a_high ? b->start : a->start).times(out.start.inverse());
  if (!low_factor.is_one()) out.generators.push_back(low_factor);
  dedupe_generators(out);
  return out;
}

std::optional<GridShape> product_shape(const std::optional<GridShape>& a,
                                       const std::optional<GridShape>& b) {
  if (!a || !b) return std::nullopt;
  GridShape out;
  out.start = a->start.times(b->start);
  out.generators = a->generators;
  out.generators.insert(out.generators.end(), b->generators.begin(), b->generators.end());
  dedupe_generators(out);
  return out;
}

Tier combined_tier(const Series& f, const Series& g) {
  if (f.tier() == Tier::stream || g.tier() == Tier::stream) return Tier::stream;
  return Tier::grid;
}

Series build_lazy(FieldKind field, Tier tier, int level_bound,
                  std::unique_ptr<TermGenerator> gen, std::optional<Witness> witness,
                  std::optional<GridShape> shape) {
  auto impl = std::make_shared<SeriesImpl>();
  impl->field = field;
  impl->tier = tier;
  impl->level_bound = level_bound;
  impl->witness = cap_witness(std::move(witness));
  if (tier != Tier::stream) impl->grid = std::move(shape);
  impl->core = std::make_shared<StreamCore>(std::move(gen));
  return Series::from_impl(std::move(impl));
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructors

std::shared_ptr<const SeriesImpl> Series::zero_impl() {
  static const std::shared_ptr<const SeriesImpl> zero = [] {
    auto impl = std::make_shared<SeriesImpl>();
    impl->finite = TermList{};
    impl->core = std::make_shared<StreamCore>(TermList{});
    return impl;
  }();
  return zero;
}

const TermList& Series::finite_terms() const {
  if (!impl_->finite) fail(errc::bad_argument, "series is not finite");
  return *impl_->finite;
}

Series make_finite_series(TermList terms, FieldKind field) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient.is_zero())
      fail(errc::bad_argument, "finite series with zero coefficient");
    if (i > 0 && Monomial::compare(terms[i].monomial, terms[i - 1].monomial) != Cmp::less)
      fail(errc::bad_argument, "finite series terms must strictly decrease");
  }
  auto impl = std::make_shared<SeriesImpl>();
  impl->field = field;
  impl->tier = Tier::finite;
  impl->level_bound = max_height(terms);
  impl->core = std::make_shared<StreamCore>(terms);
  impl->finite = std::move(terms);
  return Series::from_impl(std::move(impl));
}

Series make_constant_series(const Constant& c, FieldKind field) {
  TermList t;
  if (!c.is_zero()) t.push_back({Monomial::one(), c});
  return make_finite_series(std::move(t), field);
}

Series make_monomial_series(const Monomial& m, FieldKind field) {
  return make_finite_series(TermList{{m, Constant(1)}}, field);
}

Series make_primitive_stream(std::function<std::optional<Term>(std::uint64_t)> producer,
                             FieldKind field, int level_bound) {
  return build_lazy(field, Tier::stream, level_bound,
                    std::make_unique<PrimitiveGenerator>(std::move(producer)), std::nullopt,
                    std::nullopt);
}

Series make_lazy_series(FieldKind field, Tier tier, int level_bound,
                        std::unique_ptr<TermGenerator> gen, std::optional<Witness> witness,
                        std::optional<GridShape> shape) {
  return build_lazy(field, tier, level_bound, std::move(gen), std::move(witness),
                    std::move(shape));
}

Series el_witness_series(FieldKind field) {
  return make_primitive_stream(
      [](std::uint64_t n) -> std::optional<Term> {
        std::vector<LogFactor> factors;
        for (std::uint64_t i = 0; i <= n; ++i)
          factors.push_back({static_cast<std::uint32_t>(i), Constant(-1)});
        return Term{Monomial::make({}, std::move(factors)), Constant(1)};
      },
      field, 0);
}

// ---------------------------------------------------------------------------
// Ring operations

void require_same_field(const Series& f, const Series& g) {
  if (f.field() != g.field())
    fail(errc::field_mismatch, "series over different constant fields");
}

Series series_add(const Series& f, const Series& g) {
  require_same_field(f, g);
  if (f.is_finite() && g.is_finite())
    return make_finite_series(add_term_lists(f.finite_terms(), g.finite_terms()), f.field());
  if (f.is_finite() && f.finite_terms().empty()) return g;
  if (g.is_finite() && g.finite_terms().empty()) return f;

  std::optional<Witness> w;
  auto wf = witness_of(f), wg = witness_of(g);
  if (wf && wg)
    w = Witness{add_term_lists(multiply_term_lists(wf->num, wg->den),
                               multiply_term_lists(wg->num, wf->den)),
                multiply_term_lists(wf->den, wg->den)};
  std::vector<ScaledSource> sources{{f, Constant(1), Monomial::one()},
                                    {g, Constant(1), Monomial::one()}};
  return build_lazy(f.field(), combined_tier(f, g),
                    std::max(f.level_bound(), g.level_bound()),
                    std::make_unique<LinearCombGenerator>(std::move(sources)), std::move(w),
                    merge_shapes(shape_of(f), shape_of(g)));
}

Series series_neg(const Series& f) {
  return series_scale(f, Constant(-1), Monomial::one());
}

Series series_sub(const Series& f, const Series& g) { return series_add(f, series_neg(g)); }

Series series_scale(const Series& f, const Constant& c, const Monomial& shift) {
  if (c.is_zero()) return make_finite_series({}, f.field());
  if (f.is_finite())
    return make_finite_series(scale_term_list(f.finite_terms(), c, shift), f.field());

  std::optional<Witness> w;
  if (auto wf = witness_of(f))
    w = Witness{scale_term_list(wf->num, c, shift), wf->den};
  std::optional<GridShape> shape = shape_of(f);
  if (shape) shape->start = shape->start.times(shift);
  std::vector<ScaledSource> sources{{f, c, shift}};
  return build_lazy(f.field(), f.tier(), std::max(f.level_bound(), shift.height()),
                    std::make_unique<LinearCombGenerator>(std::move(sources)), std::move(w),
                    std::move(shape));
}

Series series_mul(const Series& f, const Series& g) {
  require_same_field(f, g);
  if (f.is_finite() && g.is_finite())
    return make_finite_series(multiply_term_lists(f.finite_terms(), g.finite_terms()),
                              f.field());
  // Single-term factors reduce to a scale, which keeps the tier tight.
  if (f.is_finite() && f.finite_terms().size() <= 1) {
    if (f.finite_terms().empty()) return make_finite_series({}, f.field());
    const Term& t = f.finite_terms().front();
    return series_scale(g, t.coefficient, t.monomial);
  }
  if (g.is_finite() && g.finite_terms().size() <= 1) {
    if (g.finite_terms().empty()) return make_finite_series({}, g.field());
    const Term& t = g.finite_terms().front();
    return series_scale(f, t.coefficient, t.monomial);
  }

  std::optional<Witness> w;
  auto wf = witness_of(f), wg = witness_of(g);
  if (wf && wg)
    w = Witness{multiply_term_lists(wf->num, wg->num), multiply_term_lists(wf->den, wg->den)};
  return build_lazy(f.field(), combined_tier(f, g),
                    std::max(f.level_bound(), g.level_bound()),
                    std::make_unique<ProductGenerator>(f, g), std::move(w),
                    product_shape(shape_of(f), shape_of(g)));
}

// ---------------------------------------------------------------------------
// Observations

DominantResult dominant_monomial(const Series& f, const Budget& b) {
  if (f.is_finite()) {
    const TermList& t = f.finite_terms();
    if (t.empty()) return {DominantResult::Kind::zero, Monomial::one(), Constant(0)};
    return {DominantResult::Kind::monomial, t.front().monomial, t.front().coefficient};
  }
  if (f.has_witness()) {
    const Witness& w = f.witness();
    if (w.num.empty()) return {DominantResult::Kind::zero, Monomial::one(), Constant(0)};
    const Term& n = w.num.front();
    const Term& d = w.den.front();
    return {DominantResult::Kind::monomial, n.monomial.times(d.monomial.inverse()),
            n.coefficient / d.coefficient};
  }
  WorkMeter meter(b);
  try {
    auto t = f.core().term_at(0, meter, /*outer=*/true);
    if (!t) return {DominantResult::Kind::zero, Monomial::one(), Constant(0)};
    return {DominantResult::Kind::monomial, t->monomial, t->coefficient};
  } catch (const Error& e) {
    if (e.code() == errc::budget_exhausted)
      return {DominantResult::Kind::indeterminate, Monomial::one(), Constant(0)};
    throw;
  }
}

Constant series_coefficient(const Series& f, const Monomial& m, const Budget& b) {
  if (f.is_finite()) {
    for (const auto& t : f.finite_terms()) {
      Cmp c = Monomial::compare(t.monomial, m);
      if (c == Cmp::equal) return t.coefficient;
      if (c == Cmp::less) break;
    }
    return Constant(0);
  }
  WorkMeter meter(b);
  for (std::size_t i = 0;; ++i) {
    meter.count_emission();
    auto t = f.core().term_at(i, meter);
    if (!t) return Constant(0);
    Cmp c = Monomial::compare(t->monomial, m);
    if (c == Cmp::equal) return t->coefficient;
    if (c == Cmp::less) return Constant(0);
  }
}

SupportPrefix enumerate_support(const Series& f, std::size_t k, const Budget& b) {
  SupportPrefix out{TermList{}, false};
  std::size_t cap = std::max<std::size_t>(k, static_cast<std::size_t>(b.max_terms));
  if (cap > static_cast<std::size_t>(INT32_MAX)) cap = INT32_MAX;
  WorkMeter meter(Budget(static_cast<int>(cap)));
  for (std::size_t i = 0; i < k; ++i) {
    auto t = f.core().term_at(i, meter);
    if (!t) {
      out.exhausted = true;
      break;
    }
    out.terms.push_back(*t);
  }
  if (!out.exhausted && k > 0) {
    // A cheap look-ahead so callers can tell a full prefix from the whole
    // series without further budget.
    out.exhausted = f.core().known_exhausted() && f.core().snapshot_prefix().size() <= k;
  } else if (k == 0) {
    out.exhausted = f.core().known_exhausted() && f.core().snapshot_prefix().empty();
  }
  return out;
}

Series truncate(const Series& f, std::size_t k, const Budget& b) {
  return make_finite_series(enumerate_support(f, k, b).terms, f.field());
}

Series series_suffix(const Series& f, std::size_t skip, const Budget& b) {
  if (skip == 0) return f;
  if (f.is_finite()) {
    const TermList& t = f.finite_terms();
    TermList tail(t.begin() + std::min(skip, t.size()), t.end());
    return make_finite_series(std::move(tail), f.field());
  }
  std::size_t cap = std::max<std::size_t>(skip, static_cast<std::size_t>(b.max_terms));
  WorkMeter meter(Budget(static_cast<int>(cap)));
  TermList head;
  for (std::size_t i = 0; i < skip; ++i) {
    auto t = f.core().term_at(i, meter);
    if (!t) return make_finite_series({}, f.field());
    head.push_back(*t);
  }
  std::optional<Witness> w;
  if (auto wf = witness_of(f)) {
    // f - head = (num - head*den) / den.
    TermList head_num = multiply_term_lists(head, wf->den);
    w = Witness{add_term_lists(wf->num, negate_term_list(head_num)), wf->den};
  }
  return build_lazy(f.field(), f.tier(), f.level_bound(),
                    std::make_unique<SuffixGenerator>(f, skip), std::move(w), shape_of(f));
}

Series taylor_composition(std::function<std::optional<Constant>(unsigned)> coefficients,
                          const Series& eps, std::string what) {
  auto oracle = std::move(coefficients);
  if (eps.is_finite() && eps.finite_terms().empty()) {
    std::optional<Constant> a0 = oracle(0);
    return make_constant_series(a0 ? *a0 : Constant(0), eps.field());
  }
  Tier tier = eps.tier() == Tier::stream ? Tier::stream : Tier::grid;
  std::optional<GridShape> shape;
  if (eps.is_finite() && !eps.finite_terms().empty()) {
    shape = shape_of(eps);
    shape->generators.push_back(shape->start);  // eps^n stays in the widened grid
    shape->start = Monomial::one();
    dedupe_generators(*shape);
  }
  return build_lazy(eps.field(), tier, eps.level_bound(),
                    std::make_unique<TaylorGenerator>(std::move(oracle), eps, std::move(what)),
                    std::nullopt, std::move(shape));
}

Series series_invert(const Series& f, const Budget& b) {
  DominantResult d = dominant_monomial(f, b);
  if (d.is_zero()) fail(errc::division_by_zero, "inverse of the zero series");
  if (d.is_indeterminate())
    fail(errc::indeterminate_pivot,
         "cannot find the dominant monomial of the divisor within budget");
  Constant lead_inv = d.coefficient.inverse();
  Monomial dom_inv = d.monomial.inverse();
  if (f.is_finite() && f.finite_terms().size() == 1)
    return make_finite_series({{dom_inv, lead_inv}}, f.field());

  // f = c d (1 + eps); 1/f = c^{-1} d^{-1} sum (-eps)^n.
  Series scaled = series_scale(f, lead_inv, dom_inv);
  Series eps = series_sub(scaled, make_constant_series(Constant(1), f.field()));
  Series unit = taylor_composition(
      [](unsigned n) -> std::optional<Constant> {
        return n % 2 == 0 ? Constant(1) : Constant(-1);
      },
      eps, "inversion");
  Series result = series_scale(unit, lead_inv, dom_inv);

  std::optional<Witness> w;
  if (auto wf = witness_of(f)) w = Witness{wf->den, wf->num};
  std::optional<GridShape> shape;
  if (auto sf = shape_of(f)) {
    shape = GridShape{d.monomial.inverse(), sf->generators};
    Monomial rebased = sf->start.times(d.monomial.inverse());
    if (!rebased.is_one()) shape->generators.push_back(rebased);
    dedupe_generators(*shape);
  }
  auto impl = std::make_shared<SeriesImpl>(*result.impl());
  impl->tier = f.tier() == Tier::stream ? Tier::stream : Tier::grid;
  impl->witness = cap_witness(std::move(w));
  impl->grid.reset();
  if (impl->tier != Tier::stream) impl->grid = std::move(shape);
  return Series::from_impl(std::move(impl));
}

bool finite_series_equal(const Series& f, const Series& g) {
  return term_lists_equal(f.finite_terms(), g.finite_terms());
}

// ---------------------------------------------------------------------------
// Budget default

namespace {
int g_default_budget = 64;
}

int Budget::default_max_terms() { return g_default_budget; }

void Budget::set_default_max_terms(int terms) { g_default_budget = terms >= 1 ? terms : 1; }

}  // namespace tss
