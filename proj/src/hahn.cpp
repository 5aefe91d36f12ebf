#include "tss/hahn.hpp"

#include <algorithm>

namespace tss {

Sign series_sign(const Series& f, const Budget& b) {
  DominantResult d = dominant_monomial(f, b);
  switch (d.kind) {
    case DominantResult::Kind::zero: return Sign::zero;
    case DominantResult::Kind::indeterminate: return Sign::indeterminate;
    case DominantResult::Kind::monomial:
      return d.coefficient.sign() > 0 ? Sign::positive : Sign::negative;
  }
  return Sign::indeterminate;
}

int sign_value(Sign s) {
  if (s == Sign::indeterminate) fail(errc::indeterminate_sign, "sign is indeterminate");
  return static_cast<int>(s);
}

AbsCmp series_cmp_abs(const Series& f, const Series& g, const Budget& b) {
  DominantResult df = dominant_monomial(f, b);
  DominantResult dg = dominant_monomial(g, b);
  if (df.is_indeterminate() || dg.is_indeterminate()) return AbsCmp::indeterminate;
  if (df.is_zero() && dg.is_zero()) return AbsCmp::asymptotic;
  if (df.is_zero()) return AbsCmp::smaller;
  if (dg.is_zero()) return AbsCmp::larger;
  switch (Monomial::compare(df.monomial, dg.monomial)) {
    case Cmp::less: return AbsCmp::smaller;
    case Cmp::greater: return AbsCmp::larger;
    case Cmp::equal: return AbsCmp::asymptotic;
  }
  return AbsCmp::indeterminate;
}

Decomposition decompose(const Series& f, const Budget& b) {
  TermList infinite;
  Constant constant(0);
  std::size_t index = 0;

  if (f.is_finite()) {
    const TermList& t = f.finite_terms();
    while (index < t.size() && t[index].monomial.compare_to_one() == Cmp::greater)
      infinite.push_back(t[index++]);
    if (index < t.size() && t[index].monomial.is_one()) constant = t[index++].coefficient;
    TermList tail(t.begin() + index, t.end());
    return {make_finite_series(std::move(infinite), f.field()), constant,
            make_finite_series(std::move(tail), f.field())};
  }

  WorkMeter meter(b);
  while (true) {
    meter.count_emission();
    auto t = f.core().term_at(index, meter);
    if (!t) {
      return {make_finite_series(std::move(infinite), f.field()), constant,
              make_finite_series({}, f.field())};
    }
    Cmp c = t->monomial.compare_to_one();
    if (c == Cmp::greater) {
      infinite.push_back(*t);
      ++index;
      continue;
    }
    if (c == Cmp::equal) {
      constant = t->coefficient;
      ++index;
    }
    break;
  }
  return {make_finite_series(std::move(infinite), f.field()), constant,
          series_suffix(f, index, b)};
}

Verdict is_bounded(const Series& f, const Budget& b) {
  DominantResult d = dominant_monomial(f, b);
  if (d.is_indeterminate()) return Verdict::indeterminate;
  if (d.is_zero()) return Verdict::yes;
  return d.monomial.compare_to_one() == Cmp::greater ? Verdict::no : Verdict::yes;
}

Verdict is_infinitesimal(const Series& f, const Budget& b) {
  DominantResult d = dominant_monomial(f, b);
  if (d.is_indeterminate()) return Verdict::indeterminate;
  if (d.is_zero()) return Verdict::yes;
  return d.monomial.compare_to_one() == Cmp::less ? Verdict::yes : Verdict::no;
}

ValuationData ValuationData::plus(const ValuationData& other) const {
  if (infinite || other.infinite) return {true, Monomial::one()};
  return {false, value.times(other.value)};
}

Cmp ValuationData::compare(const ValuationData& a, const ValuationData& b) {
  if (a.infinite && b.infinite) return Cmp::equal;
  if (a.infinite) return Cmp::greater;
  if (b.infinite) return Cmp::less;
  // Order-reversed copy of the monomial group.
  switch (Monomial::compare(a.value, b.value)) {
    case Cmp::less: return Cmp::greater;
    case Cmp::greater: return Cmp::less;
    case Cmp::equal: return Cmp::equal;
  }
  return Cmp::equal;
}

bool ValuationData::operator==(const ValuationData& o) const {
  if (infinite != o.infinite) return false;
  return infinite || value == o.value;
}

ValuationData valuation(const Series& f, const Budget& b) {
  DominantResult d = dominant_monomial(f, b);
  if (d.is_indeterminate())
    fail(errc::indeterminate_sign, "valuation needs a determinate dominant monomial");
  if (d.is_zero()) return {true, Monomial::one()};
  return {false, d.monomial};
}

// ---------------------------------------------------------------------------
// Regrouping

Series RegroupedSeries::flatten() const {
  TermList flat;
  for (const auto& outer : terms)
    for (const auto& t : outer.inner.finite_terms())
      flat.push_back({t.monomial.times(outer.outer), t.coefficient});
  return make_finite_series(normalize_term_list(std::move(flat)), field);
}

RegroupedSeries regroup(const Series& f, const MonomialSplit& split, const Budget& b) {
  TermList terms;
  if (f.is_finite()) {
    terms = f.finite_terms();
  } else {
    SupportPrefix prefix = enumerate_support(
        f, static_cast<std::size_t>(b.max_terms), b);
    if (!prefix.exhausted)
      fail(errc::budget_exhausted, "regroup needs a series that materializes within budget");
    terms = std::move(prefix.terms);
  }

  std::vector<std::pair<Monomial, TermList>> buckets;
  for (const auto& t : terms) {
    auto [m1, m2] = split.factor(t.monomial);
    if (!(m1.times(m2) == t.monomial))
      fail(errc::invalid_split,
           "split \"" + split.name + "\" does not factor a support monomial");
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const auto& bkt) { return bkt.first == m2; });
    if (it == buckets.end()) {
      buckets.push_back({m2, TermList{{m1, t.coefficient}}});
    } else {
      it->second.push_back({m1, t.coefficient});
    }
  }

  std::sort(buckets.begin(), buckets.end(), [](const auto& x, const auto& y) {
    return Monomial::compare(x.first, y.first) == Cmp::greater;
  });
  RegroupedSeries out{{}, f.field()};
  for (auto& [outer, inner] : buckets)
    out.terms.push_back(
        {outer, make_finite_series(normalize_term_list(std::move(inner)), f.field())});
  return out;
}

MonomialSplit split_log_vs_exp() {
  return {"log-part vs exp-part", [](const Monomial& m) {
            Monomial logs = Monomial::make({}, m.log_part());
            Monomial exps = Monomial::make(m.exp_part(), {});
            return std::make_pair(logs, exps);
          }};
}

MonomialSplit split_log_tail(std::uint32_t min_index) {
  return {"log tail l" + std::to_string(min_index) + "+",
          [min_index](const Monomial& m) {
            std::vector<LogFactor> tail, head;
            for (const auto& fct : m.log_part())
              (fct.index >= min_index ? tail : head).push_back(fct);
            return std::make_pair(Monomial::make({}, std::move(tail)),
                                  Monomial::make(m.exp_part(), std::move(head)));
          }};
}

}  // namespace tss
