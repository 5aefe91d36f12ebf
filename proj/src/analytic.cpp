#include "tss/analytic.hpp"

#include <algorithm>
#include <queue>

namespace tss {

bool AnalyticGerm::contains(const Constant& c) const {
  if (lower_ && !(c > *lower_)) return false;
  if (upper_ && !(c < *upper_)) return false;
  return true;
}

Series taylor_apply(const AnalyticGerm& f, const Series& g, const Budget& b) {
  Decomposition parts = decompose(g, b);
  if (!parts.infinite.finite_terms().empty())
    fail(errc::argument_not_bounded,
         f.name() + " expects a bounded argument (infinite part must vanish)");
  if (!f.contains(parts.constant))
    fail(errc::constant_outside_domain,
         "constant term lies outside the domain of " + f.name());
  Constant c = parts.constant;
  std::optional<unsigned> bound = f.degree_bound();
  auto oracle = [&f, c, bound](unsigned n) -> std::optional<Constant> {
    if (bound && n > *bound) return std::nullopt;
    return f.coefficient(c, n);
  };
  return taylor_composition(oracle, parts.infinitesimal, f.name());
}

Series exp_bounded(const Series& g, const Budget& b) {
  Decomposition parts = decompose(g, b);
  if (!parts.infinite.finite_terms().empty())
    fail(errc::argument_not_bounded, "exp of an unbounded element is not a unit");
  Constant factor = const_exp(parts.constant, g.field());
  Series unit = taylor_composition(
      [](unsigned n) -> std::optional<Constant> {
        return Constant(Rational(Integer(1), factorial(n)));
      },
      parts.infinitesimal, "exp");
  return series_scale(unit, factor, Monomial::one());
}

Series log_unit(const Series& g, const Budget& b) {
  DominantResult d = dominant_monomial(g, b);
  if (d.is_indeterminate())
    fail(errc::indeterminate_sign, "cannot decide the dominant term of the log argument");
  if (d.is_zero() || !d.monomial.is_one() || d.coefficient.sign() <= 0)
    fail(errc::not_positive_unit, "log_unit expects a positive unit (d(g) = 1, lead > 0)");
  Constant lead = d.coefficient;
  Constant log_lead = const_log(lead, g.field());
  Series eps = series_sub(series_scale(g, lead.inverse(), Monomial::one()),
                          make_constant_series(Constant(1), g.field()));
  auto oracle = [log_lead](unsigned n) -> std::optional<Constant> {
    if (n == 0) return log_lead;
    Constant a(Rational(Integer(1), Integer(n)));
    return n % 2 == 1 ? a : -a;
  };
  return taylor_composition(oracle, eps, "log");
}

// ---------------------------------------------------------------------------
// Multivariate Taylor extension

namespace {

// Multi-indices over `axes` positions with total degree d, graded lex.
void enumerate_degree(unsigned axes, unsigned degree, std::vector<unsigned>& prefix,
                      const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (axes == 1) {
    prefix.push_back(degree);
    emit(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned k = degree;; --k) {
    prefix.push_back(k);
    enumerate_degree(axes - 1, degree - k, prefix, emit);
    prefix.pop_back();
    if (k == 0) break;
  }
}

// sum_alpha F_alpha(c) eps^alpha, degree-graded. Activation mirrors the
// univariate Taylor generator: every alpha of degree d is admitted once
// D^d (D = the largest axis dominant) could still reach the candidate.
class MultiTaylorGenerator final : public TermGenerator {
 public:
  MultiTaylorGenerator(RestrictedAnalyticFunction F, std::vector<Constant> center,
                       std::vector<Series> eps, std::vector<std::size_t> active_axes,
                       FieldKind field)
      : F_(std::move(F)),
        center_(std::move(center)),
        eps_(std::move(eps)),
        active_axes_(std::move(active_axes)),
        field_(field) {}

  std::optional<Term> next(WorkMeter& meter) override {
    if (!initialized_) initialize(meter);
    if (done_) return std::nullopt;
    if (active_axes_.empty()) {
      done_ = true;
      return Term{Monomial::one(), value_at_center()};
    }
    while (true) {
      activate_reachable(meter);
      if (heap_.empty()) {
        if (degrees_done_) {
          done_ = true;
          return std::nullopt;
        }
        continue;
      }
      Monomial mono = heap_.top().mono;
      Constant acc(0);
      while (!heap_.empty() && heap_.top().mono == mono) {
        Entry e = heap_.top();
        heap_.pop();
        meter.tick();
        acc = acc + e.coefficient;
        if (auto succ = streams_[e.alpha].core().term_at(e.index + 1, meter))
          heap_.push(Entry{succ->monomial, succ->coefficient * weights_[e.alpha], e.alpha,
                           e.index + 1});
      }
      return Term{mono, acc};
    }
  }

 private:
  struct Entry {
    Monomial mono;
    Constant coefficient;
    std::size_t alpha;
    std::size_t index;
  };
  struct EntryLess {
    bool operator()(const Entry& x, const Entry& y) const {
      return Monomial::compare(x.mono, y.mono) == Cmp::less;
    }
  };

  Constant value_at_center() const {
    return F_.coefficient(center_, std::vector<unsigned>(F_.arity(), 0));
  }

  void initialize(WorkMeter& meter) {
    initialized_ = true;
    if (active_axes_.empty()) return;
    Monomial max_dom;
    bool first = true;
    for (std::size_t a = 0; a < active_axes_.size(); ++a) {
      Term head = *eps_[a].core().term_at(0, meter);
      axis_dom_.push_back(head.monomial);
      if (first || Monomial::compare(head.monomial, max_dom) == Cmp::greater) {
        max_dom = head.monomial;
        first = false;
      }
    }
    max_dom_ = max_dom;
    degree_bound_dom_ = Monomial::one();
    // Degree 0: the constant term.
    Constant f0 = value_at_center();
    if (!f0.is_zero()) {
      weights_.push_back(f0);
      streams_.push_back(make_constant_series(Constant(1), field_));
      heap_.push(Entry{Monomial::one(), f0, 0, 0});
    }
    next_degree_ = 1;
    degree_bound_dom_ = max_dom_;
  }

  // eps^alpha as a lazily multiplied series over the active axes.
  Series power_series(const std::vector<unsigned>& alpha) {
    Series acc;
    bool have = false;
    for (std::size_t a = 0; a < active_axes_.size(); ++a) {
      for (unsigned k = 0; k < alpha[a]; ++k) {
        acc = have ? series_mul(acc, eps_[a]) : eps_[a];
        have = true;
      }
    }
    return acc;
  }

  void activate_degree(unsigned degree, WorkMeter& meter) {
    std::vector<unsigned> prefix;
    enumerate_degree(static_cast<unsigned>(active_axes_.size()), degree, prefix,
                     [&](const std::vector<unsigned>& alpha) {
                       meter.tick();
                       std::vector<unsigned> full(F_.arity(), 0);
                       for (std::size_t a = 0; a < active_axes_.size(); ++a)
                         full[active_axes_[a]] = alpha[a];
                       Constant w = F_.coefficient(center_, full);
                       if (w.is_zero()) return;
                       Series s = power_series(alpha);
                       Term head = *s.core().term_at(0, meter);
                       weights_.push_back(w);
                       streams_.push_back(s);
                       heap_.push(Entry{head.monomial, head.coefficient * w,
                                        weights_.size() - 1, 0});
                     });
  }

  void activate_reachable(WorkMeter& meter) {
    while (!degrees_done_ &&
           (heap_.empty() ||
            Monomial::compare(degree_bound_dom_, heap_.top().mono) != Cmp::less)) {
      meter.tick();
      if (F_.degree_bound() && next_degree_ > *F_.degree_bound()) {
        degrees_done_ = true;
        return;
      }
      activate_degree(next_degree_, meter);
      ++next_degree_;
      degree_bound_dom_ = degree_bound_dom_.times(max_dom_);
    }
  }

  RestrictedAnalyticFunction F_;
  std::vector<Constant> center_;
  std::vector<Series> eps_;                // active (nonzero) displacements
  std::vector<std::size_t> active_axes_;   // original argument positions
  FieldKind field_;
  bool initialized_ = false;
  bool done_ = false;
  bool degrees_done_ = false;
  unsigned next_degree_ = 1;
  Monomial max_dom_;
  Monomial degree_bound_dom_;
  std::vector<Monomial> axis_dom_;
  std::vector<Constant> weights_;
  std::vector<Series> streams_;
  std::priority_queue<Entry, std::vector<Entry>, EntryLess> heap_;
};

}  // namespace

Series restricted_apply(const RestrictedAnalyticFunction& F, std::span<const Series> args,
                        const Budget& b) {
  if (args.size() != F.arity())
    fail(errc::bad_argument, F.name() + " expects " + std::to_string(F.arity()) + " arguments");
  FieldKind field = args.empty() ? FieldKind::rationals : args[0].field();
  Series one = make_constant_series(Constant(1), field);

  // Cube membership: -1 <= g_i <= 1, decided by exact sign tests.
  for (const Series& g : args) {
    Sign upper = series_sign(series_sub(one, g), b);
    Sign lower = series_sign(series_add(g, one), b);
    if (!is_determinate(upper) || !is_determinate(lower))
      fail(errc::indeterminate_cube_membership,
           "cannot decide cube membership of an argument within budget");
    if (sign_value(upper) < 0 || sign_value(lower) < 0)
      return make_finite_series({}, field);  // 0 outside the cube
  }

  std::vector<Constant> center;
  std::vector<Series> eps;
  std::vector<std::size_t> active;
  int level = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    Decomposition parts = decompose(args[i], b);
    center.push_back(parts.constant);
    level = std::max(level, args[i].level_bound());
    DominantResult d = dominant_monomial(parts.infinitesimal, b);
    if (!d.is_zero()) {
      eps.push_back(parts.infinitesimal);
      active.push_back(i);
    }
  }

  Tier tier = Tier::grid;
  for (const Series& g : args)
    if (g.tier() == Tier::stream) tier = Tier::stream;
  return make_lazy_series(field, tier, level,
                          std::make_unique<MultiTaylorGenerator>(F, std::move(center),
                                                                 std::move(eps), std::move(active),
                                                                 field),
                          std::nullopt, std::nullopt);
}

// ---------------------------------------------------------------------------
// Built-in germs

namespace germs {

AnalyticGerm exp_germ(FieldKind field) {
  return AnalyticGerm("exp", std::nullopt, std::nullopt,
                      [field](const Constant& c, unsigned n) {
                        return const_exp(c, field) * Constant(Rational(Integer(1), factorial(n)));
                      });
}

AnalyticGerm log1p_germ(FieldKind field) {
  return AnalyticGerm("log1p", Constant(-1), std::nullopt,
                      [field](const Constant& c, unsigned n) -> Constant {
                        Constant base = Constant(1) + c;
                        if (n == 0) return const_log(base, field);
                        Constant a = const_pow(base, Rational(n), field).inverse() *
                                     Constant(Rational(Integer(1), Integer(n)));
                        return n % 2 == 1 ? a : -a;
                      });
}

AnalyticGerm geometric_germ() {
  return AnalyticGerm("geom", std::nullopt, Constant(1),
                      [](const Constant& c, unsigned n) {
                        Constant d = Constant(1) - c;
                        Constant acc = d.inverse();
                        for (unsigned k = 0; k < n; ++k) acc = acc / d;
                        return acc;
                      });
}

AnalyticGerm sin_germ() {
  return AnalyticGerm("sin", std::nullopt, std::nullopt,
                      [](const Constant& c, unsigned n) -> Constant {
                        if (!c.is_zero())
                          fail(errc::constant_capability_missing,
                               "sin expands only at constant term 0 in an exact field");
                        if (n % 2 == 0) return Constant(0);
                        Constant a(Rational(Integer(1), factorial(n)));
                        return (n / 2) % 2 == 0 ? a : -a;
                      });
}

AnalyticGerm cos_germ() {
  return AnalyticGerm("cos", std::nullopt, std::nullopt,
                      [](const Constant& c, unsigned n) -> Constant {
                        if (!c.is_zero())
                          fail(errc::constant_capability_missing,
                               "cos expands only at constant term 0 in an exact field");
                        if (n % 2 == 1) return Constant(0);
                        Constant a(Rational(Integer(1), factorial(n)));
                        return (n / 2) % 2 == 0 ? a : -a;
                      });
}

AnalyticGerm identity_germ() {
  return AnalyticGerm("id", std::nullopt, std::nullopt,
                      [](const Constant& c, unsigned n) -> Constant {
                        if (n == 0) return c;
                        if (n == 1) return Constant(1);
                        return Constant(0);
                      },
                      1);
}

RestrictedAnalyticFunction restricted_e(FieldKind field) {
  return RestrictedAnalyticFunction(
      "e", 1, [field](const std::vector<Constant>& c, const std::vector<unsigned>& alpha) {
        return const_exp(c[0], field) * Constant(Rational(Integer(1), factorial(alpha[0])));
      });
}

RestrictedAnalyticFunction restricted_product() {
  return RestrictedAnalyticFunction(
      "rprod", 2,
      [](const std::vector<Constant>& c, const std::vector<unsigned>& alpha) -> Constant {
        unsigned a = alpha[0], b = alpha[1];
        if (a == 0 && b == 0) return c[0] * c[1];
        if (a == 1 && b == 0) return c[1];
        if (a == 0 && b == 1) return c[0];
        if (a == 1 && b == 1) return Constant(1);
        return Constant(0);
      },
      2);
}

}  // namespace germs

}  // namespace tss
