#ifndef TSS_PARSER_HPP
#define TSS_PARSER_HPP

#include "tss/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace tss {

// Expression AST for the front-end. Spans index into the source text so the
// evaluator can point at the offending subexpression.
struct Expr {
  enum class Kind {
    number,      // rational literal
    symbol,      // x, l0, l1, ..., or the constant e
    call,        // exp(...), log(...), germ names
    unary_minus,
    binary,      // + - * / ^
  };

  Kind kind;
  std::size_t begin = 0, end = 0;

  Rational number_value;      // number
  std::string name;           // symbol/call
  char op = 0;                // binary
  std::vector<std::unique_ptr<Expr>> children;
};

using ExprPtr = std::unique_ptr<Expr>;

// Recursive-descent parser. Precedence: ^ binds tighter than unary minus,
// which binds tighter than * and /, which bind tighter than + and -. Binary
// + - * / associate left, ^ associates right. Errors: syntax_error with the
// byte offset of the offending token.
ExprPtr parse(const std::string& text);

}  // namespace tss

#endif  // TSS_PARSER_HPP
