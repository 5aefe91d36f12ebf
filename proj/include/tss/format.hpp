#ifndef TSS_FORMAT_HPP
#define TSS_FORMAT_HPP

#include "tss/series.hpp"

#include <string>

namespace tss {

// Canonical text forms. Everything a formatter emits re-parses to an equal
// value: constants as `p/q` and formal products `q*e^(r)`, monomials as
// `x^(r)`, `l1`, ..., `exp(<series>)*<logmonomial>`, series as
// `c1*m1 + c2*m2 + ... [+ o(mk)]` in strictly decreasing monomial order,
// with the trailing o(mk) marking a truncated lazy tail.

std::string format_constant(const Constant& c);
std::string format_monomial(const Monomial& m);

struct SeriesFormat {
  std::size_t max_terms = 10;
  Budget budget{};
};

std::string format_series(const Series& f, const SeriesFormat& fmt = {});

// Formats an exact finite term list in full (used for monomial arguments).
std::string format_term_list(const TermList& terms);

}  // namespace tss

#endif  // TSS_FORMAT_HPP
