#include "tss/monomial.hpp"

#include "tss/error.hpp"

#include <algorithm>

namespace tss {

namespace {

// Merge two sorted log-factor lists, adding exponents and dropping zeros.
std::vector<LogFactor> merge_log_parts(const std::vector<LogFactor>& a,
                                       const std::vector<LogFactor>& b) {
  std::vector<LogFactor> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back(b[j++]);
    } else {
      Constant sum = a[i].exponent + b[j].exponent;
      if (!sum.is_zero()) out.push_back({a[i].index, sum});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Monomial Monomial::log_monomial(std::uint32_t index) {
  Monomial m;
  m.log_.push_back({index, Constant(1)});
  return m;
}

Monomial Monomial::power_of_x(const Constant& r) {
  Monomial m;
  if (!r.is_zero()) m.log_.push_back({0, r});
  return m;
}

Monomial Monomial::make(TermList exp_part, std::vector<LogFactor> log_part) {
  Monomial m;
  std::sort(log_part.begin(), log_part.end(),
            [](const LogFactor& a, const LogFactor& b) { return a.index < b.index; });
  std::vector<LogFactor> merged;
  for (auto& f : log_part) {
    if (!merged.empty() && merged.back().index == f.index) {
      merged.back().exponent = merged.back().exponent + f.exponent;
      if (merged.back().exponent.is_zero()) merged.pop_back();
    } else if (!f.exponent.is_zero()) {
      merged.push_back(std::move(f));
    }
  }
  m.log_ = std::move(merged);
  if (!exp_part.empty()) {
    m.height_ = 1 + max_height(exp_part);
    m.exp_arg_ = std::make_shared<const TermList>(std::move(exp_part));
  }
  return m;
}

bool Monomial::is_one() const { return !has_exp_part() && log_.empty(); }

bool Monomial::has_exp_part() const { return exp_arg_ != nullptr && !exp_arg_->empty(); }

const TermList& Monomial::exp_part() const {
  static const TermList empty;
  return exp_arg_ ? *exp_arg_ : empty;
}

Monomial Monomial::times(const Monomial& other) const {
  TermList arg = add_term_lists(exp_part(), other.exp_part());
  return make(std::move(arg), merge_log_parts(log_, other.log_));
}

Monomial Monomial::inverse() const { return pow(Constant(-1)); }

Monomial Monomial::pow(const Constant& r) const {
  if (r.is_zero()) return Monomial();
  Monomial m;
  m.log_ = log_;
  for (auto& f : m.log_) f.exponent = f.exponent * r;
  if (has_exp_part()) {
    // Scaling coefficients keeps monomials (hence canonical form) intact.
    m.exp_arg_ = std::make_shared<const TermList>(
        scale_term_list(exp_part(), r, Monomial::one()));
    m.height_ = height_;
  }
  return m;
}

Cmp Monomial::compare_to_one() const {
  // Lexicographic rule of the transmonomial group: exp(a)*l >= 1 iff a > 0,
  // or a = 0 and l >= 1; a purely logarithmic l >= 1 iff the exponent at the
  // least index is positive (this realizes l_n > l_{n+1}^m for every m).
  if (has_exp_part()) {
    int s = exp_part().front().coefficient.sign();  // dominant coefficient
    return s > 0 ? Cmp::greater : Cmp::less;
  }
  if (!log_.empty()) {
    int s = log_.front().exponent.sign();
    return s > 0 ? Cmp::greater : Cmp::less;
  }
  return Cmp::equal;
}

Cmp Monomial::compare(const Monomial& a, const Monomial& b) {
  // Fast path: both purely logarithmic.
  if (!a.has_exp_part() && !b.has_exp_part()) {
    std::size_t i = 0, j = 0;
    while (i < a.log_.size() || j < b.log_.size()) {
      if (j == b.log_.size() || (i < a.log_.size() && a.log_[i].index < b.log_[j].index)) {
        int s = a.log_[i].exponent.sign();
        return s > 0 ? Cmp::greater : Cmp::less;
      }
      if (i == a.log_.size() || b.log_[j].index < a.log_[i].index) {
        int s = b.log_[j].exponent.sign();
        return s > 0 ? Cmp::less : Cmp::greater;
      }
      if (a.log_[i].exponent != b.log_[j].exponent) {
        int s = (a.log_[i].exponent - b.log_[j].exponent).sign();
        return s > 0 ? Cmp::greater : Cmp::less;
      }
      ++i;
      ++j;
    }
    return Cmp::equal;
  }
  return a.times(b.inverse()).compare_to_one();
}

bool Monomial::operator==(const Monomial& other) const {
  if (height_ != other.height_) return false;
  if (log_.size() != other.log_.size()) return false;
  for (std::size_t i = 0; i < log_.size(); ++i)
    if (log_[i].index != other.log_[i].index || log_[i].exponent != other.log_[i].exponent)
      return false;
  return term_lists_equal(exp_part(), other.exp_part());
}

// ---------------------------------------------------------------------------
// Term-list algebra

TermList add_term_lists(const TermList& a, const TermList& b) {
  TermList out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
    } else if (i == a.size()) {
      out.push_back(b[j++]);
    } else {
      switch (Monomial::compare(a[i].monomial, b[j].monomial)) {
        case Cmp::greater:
          out.push_back(a[i++]);
          break;
        case Cmp::less:
          out.push_back(b[j++]);
          break;
        case Cmp::equal: {
          Constant sum = a[i].coefficient + b[j].coefficient;
          if (!sum.is_zero()) out.push_back({a[i].monomial, sum});
          ++i;
          ++j;
          break;
        }
      }
    }
  }
  return out;
}

TermList negate_term_list(const TermList& a) {
  TermList out = a;
  for (auto& t : out) t.coefficient = -t.coefficient;
  return out;
}

TermList scale_term_list(const TermList& a, const Constant& scale, const Monomial& shift) {
  if (scale.is_zero()) fail(errc::bad_argument, "scaling a term list by zero");
  TermList out;
  out.reserve(a.size());
  for (const auto& t : a)
    out.push_back({t.monomial.times(shift), t.coefficient * scale});
  return out;
}

TermList normalize_term_list(TermList terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return Monomial::compare(x.monomial, y.monomial) == Cmp::greater;
  });
  TermList out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient = out.back().coefficient + t.coefficient;
      if (out.back().coefficient.is_zero()) out.pop_back();
    } else if (!t.coefficient.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

TermList multiply_term_lists(const TermList& a, const TermList& b) {
  TermList products;
  products.reserve(a.size() * b.size());
  for (const auto& u : a)
    for (const auto& v : b)
      products.push_back({u.monomial.times(v.monomial), u.coefficient * v.coefficient});
  return normalize_term_list(std::move(products));
}

TermList pow_term_list(const TermList& a, unsigned n) {
  TermList acc{{Monomial::one(), Constant(1)}};
  TermList cur = a;
  while (n != 0) {
    if (n & 1u) acc = multiply_term_lists(acc, cur);
    n >>= 1u;
    if (n != 0) cur = multiply_term_lists(cur, cur);
  }
  return acc;
}

bool term_lists_equal(const TermList& a, const TermList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].coefficient != b[i].coefficient || !(a[i].monomial == b[i].monomial))
      return false;
  return true;
}

int max_height(const TermList& terms) {
  int h = 0;
  for (const auto& t : terms) h = std::max(h, t.monomial.height());
  return h;
}

Monomial exp_argument_to_monomial(const TermList& purely_infinite) {
  TermList arg;
  std::vector<LogFactor> logs;
  for (const auto& t : purely_infinite) {
    if (t.monomial.compare_to_one() != Cmp::greater)
      fail(errc::bad_argument, "exp argument must be purely infinite");
    const auto& lf = t.monomial.log_part();
    bool bare_log = !t.monomial.has_exp_part() && lf.size() == 1 && lf[0].index >= 1 &&
                    lf[0].exponent == Constant(1);
    if (bare_log)
      logs.push_back({lf[0].index - 1, t.coefficient});
    else
      arg.push_back(t);
  }
  return Monomial::make(std::move(arg), std::move(logs));
}

TermList log_of_monomial(const Monomial& m) {
  TermList out;
  for (const auto& f : m.log_part())
    out.push_back({Monomial::log_monomial(f.index + 1), f.exponent});
  // Canonical arguments contain no bare l_j monomials, so no merging with the
  // log-image terms is needed beyond ordering.
  return add_term_lists(normalize_term_list(std::move(out)), m.exp_part());
}

}  // namespace tss
