#ifndef TSS_EVAL_HPP
#define TSS_EVAL_HPP

#include "tss/asymptotics.hpp"
#include "tss/parser.hpp"

namespace tss {

struct Session {
  FieldKind field = FieldKind::rationals;
  int budget_terms = Budget::default_max_terms();
  std::size_t display_terms = 10;

  Budget budget() const { return Budget(budget_terms); }
};

// Folds the AST through the kernel. log(x) and l1 are synonyms after
// normalization; division inverts lazily; ^ requires an exponent that
// evaluates to a rational constant. Kernel errors are re-thrown annotated
// with the span of the offending subexpression.
Series evaluate(const Expr& e, const Session& session);

// Convenience: parse then evaluate.
Series evaluate_text(const std::string& text, const Session& session);

// Renders the source with a caret line under the span of `err`.
std::string highlight_error(const std::string& source, const Error& err);

}  // namespace tss

#endif  // TSS_EVAL_HPP
