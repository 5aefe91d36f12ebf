#include "tss/format.hpp"

#include <algorithm>
#include <sstream>

namespace tss {

namespace {

bool is_simple_integer(const Rational& q) { return denominator(q) == 1; }

std::string format_rational(const Rational& q) { return to_string(q); }

std::string format_combination(const ExpCombination& comb) {
  if (comb.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Largest exponent first reads naturally: 2*e^(1) + 1.
  const auto& parts = comb.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    Rational coeff = it->coefficient;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
      first = false;
    } else if (coeff < 0) {
      out << " - ";
      coeff = -coeff;
    } else {
      out << " + ";
    }
    if (it->exponent.is_zero()) {
      out << format_rational(coeff);
    } else {
      if (coeff != 1) out << format_rational(coeff) << "*";
      out << "e^(" << format_rational(it->exponent) << ")";
    }
  }
  return out.str();
}

// Exponent rendering: bare for positive integers, parenthesized otherwise.
std::string format_exponent(const Constant& e) {
  if (e.is_rational() && is_simple_integer(e.rational()) && e.sign() > 0)
    return to_string(e.rational());
  return "(" + format_constant(e) + ")";
}

}  // namespace

std::string format_constant(const Constant& c) {
  if (c.is_rational()) return format_rational(c.rational());
  const ExpRational& e = c.exp_rational();
  std::string num = format_combination(e.num());
  if (e.den().is_rational() && e.den().rational_value() == 1) {
    if (e.num().parts().size() == 1) return num;
    return "(" + num + ")";
  }
  return "(" + num + ")/(" + format_combination(e.den()) + ")";
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  if (m.has_exp_part()) {
    out << "exp(" << format_term_list(m.exp_part()) << ")";
    first = false;
  }
  for (const auto& f : m.log_part()) {
    if (!first) out << "*";
    first = false;
    if (f.index == 0)
      out << "x";
    else
      out << "l" << f.index;
    if (!(f.exponent == Constant(1))) out << "^" << format_exponent(f.exponent);
  }
  return out.str();
}

namespace {

void append_term(std::ostringstream& out, const Term& t, bool first) {
  Constant coeff = t.coefficient;
  int s = coeff.sign();
  if (first) {
    if (s < 0) {
      out << "-";
      coeff = -coeff;
    }
  } else {
    out << (s < 0 ? " - " : " + ");
    if (s < 0) coeff = -coeff;
  }
  bool unit_coeff = coeff == Constant(1);
  if (t.monomial.is_one()) {
    out << format_constant(coeff);
    return;
  }
  if (!unit_coeff) out << format_constant(coeff) << "*";
  out << format_monomial(t.monomial);
}

}  // namespace

std::string format_term_list(const TermList& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) append_term(out, terms[i], i == 0);
  return out.str();
}

std::string format_series(const Series& f, const SeriesFormat& fmt) {
  if (f.is_finite()) {
    const TermList& t = f.finite_terms();
    if (t.size() <= fmt.max_terms) return format_term_list(t);
    TermList head(t.begin(), t.begin() + fmt.max_terms);
    std::string body = format_term_list(head);
    return body + " + o(" + format_monomial(head.back().monomial) + ")";
  }

  TermList head;
  bool exhausted = false;
  bool truncated_by_budget = false;
  std::size_t cap = std::max<std::size_t>(fmt.max_terms,
                                          static_cast<std::size_t>(fmt.budget.max_terms));
  WorkMeter meter(Budget(static_cast<int>(std::min<std::size_t>(cap, 1u << 20))));
  for (std::size_t i = 0; i < fmt.max_terms; ++i) {
    std::optional<Term> t;
    try {
      t = f.core().term_at(i, meter);
    } catch (const Error& e) {
      if (e.code() != errc::budget_exhausted) throw;
      truncated_by_budget = true;
      break;
    }
    if (!t) {
      exhausted = true;
      break;
    }
    head.push_back(*t);
  }
  if (!exhausted && !truncated_by_budget)
    exhausted = f.core().known_exhausted() &&
                f.core().snapshot_prefix().size() <= fmt.max_terms;
  if (head.empty() && exhausted) return "0";
  if (head.empty()) return "o(1)";  // nothing materialized within budget
  std::string body = format_term_list(head);
  if (!exhausted || truncated_by_budget)
    body += " + o(" + format_monomial(head.back().monomial) + ")";
  return body;
}

}  // namespace tss
