#ifndef TSS_HAHN_HPP
#define TSS_HAHN_HPP

#include "tss/series.hpp"

#include <functional>

namespace tss {

// Three-valued sign: f > 0 iff the dominant coefficient is positive; zero
// exactly when the dominant-monomial query returns the ZeroSeries verdict.
enum class Sign { negative = -1, zero = 0, positive = 1, indeterminate = 2 };

Sign series_sign(const Series& f, const Budget& b = Budget());

inline bool is_determinate(Sign s) { return s != Sign::indeterminate; }
int sign_value(Sign s);  // -1/0/+1; bad_argument on indeterminate

// Comparison of absolute growth: f < g iff d(f) < d(g); zero < everything
// nonzero; asymptotic (=) when the dominant monomials coincide.
enum class AbsCmp { smaller, asymptotic, larger, indeterminate };

AbsCmp series_cmp_abs(const Series& f, const Series& g, const Budget& b = Budget());

// f = infinite + constant + infinitesimal, with supports > 1, = 1, < 1.
struct Decomposition {
  Series infinite;       // finite term list, all monomials > 1
  Constant constant;
  Series infinitesimal;  // all monomials < 1
};

// Errors with budget_exhausted when a stream's enumeration does not cross 1
// within b.max_terms emissions.
Decomposition decompose(const Series& f, const Budget& b = Budget());

enum class Verdict { no = 0, yes = 1, indeterminate = 2 };

Verdict is_bounded(const Series& f, const Budget& b = Budget());        // d(f) <= 1
Verdict is_infinitesimal(const Series& f, const Budget& b = Budget());  // d(f) < 1

// Value group element: the dominant monomial viewed additively (order
// reversed), with infinity for the zero series. v(fg) = vf + vg.
struct ValuationData {
  bool infinite;  // v(0)
  Monomial value;

  ValuationData plus(const ValuationData& other) const;
  // v(f) <= v(g) iff d(f) >= d(g).
  static Cmp compare(const ValuationData& a, const ValuationData& b);
  bool operator==(const ValuationData& o) const;
};

ValuationData valuation(const Series& f, const Budget& b = Budget());

// A direct-product split M = M1 * M2 (M1 convex, intersection trivial),
// given by the factoring projection. regroup validates the factorization of
// every support monomial; convexity of M1 is the caller's contract.
struct MonomialSplit {
  std::string name;
  std::function<std::pair<Monomial, Monomial>(const Monomial&)> factor;  // (m1, m2)
};

// f regrouped as a series over M2 with coefficients in C[[M1]].
struct RegroupedSeries {
  struct OuterTerm {
    Monomial outer;  // in M2
    Series inner;    // finite series over M1
  };
  std::vector<OuterTerm> terms;  // outer monomials strictly decreasing
  FieldKind field;

  Series flatten() const;  // exact inverse of regroup
};

// Requires an input that materializes within the safety cap (Finite, or a
// grid/stream that exhausts); errors with invalid_split when a support
// monomial does not factor as m1 * m2.
RegroupedSeries regroup(const Series& f, const MonomialSplit& split,
                        const Budget& b = Budget());

// Built-in splits: M1 = the logarithmic monomials (convex in the
// transmonomial group), M2 = the exp parts; and M1 = log factors with index
// >= min_index (a convex tail axis), M2 = the rest.
MonomialSplit split_log_vs_exp();
MonomialSplit split_log_tail(std::uint32_t min_index);

}  // namespace tss

#endif  // TSS_HAHN_HPP
