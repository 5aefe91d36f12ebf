#include "tss/eval.hpp"

#include "tss/format.hpp"

namespace tss {

namespace {

// l0, l1, ... (and x = l0).
std::optional<std::uint32_t> log_index(const std::string& name) {
  if (name == "x") return 0;
  if (name.size() < 2 || name[0] != 'l') return std::nullopt;
  std::uint32_t idx = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    idx = idx * 10 + static_cast<std::uint32_t>(name[i] - '0');
    if (idx > 1'000'000) return std::nullopt;
  }
  return idx;
}

[[noreturn]] void rethrow_with_span(const Error& e, const Expr& node) {
  Error annotated(e.code(), e.what(), e.position());
  annotated.span_begin = e.span_begin != Error::npos ? e.span_begin : node.begin;
  annotated.span_end = e.span_end != Error::npos ? e.span_end : node.end;
  throw annotated;
}

Series eval_node(const Expr& e, const Session& session);

// The exponent of ^ must fold to a rational constant.
Rational constant_exponent(const Expr& e, const Session& session) {
  Series s = eval_node(e, session);
  if (!s.is_finite())
    throw Error(errc::bad_argument, "exponent must be an exact constant");
  const TermList& t = s.finite_terms();
  if (t.empty()) return Rational(0);
  if (t.size() != 1 || !t[0].monomial.is_one() || !t[0].coefficient.is_rational())
    throw Error(errc::bad_argument, "exponent must be a rational constant");
  return t[0].coefficient.rational();
}

Series eval_call(const Expr& e, const Session& session) {
  const Budget b = session.budget();
  const std::string& name = e.name;
  auto arity = [&](std::size_t n) {
    if (e.children.size() != n)
      throw Error(errc::bad_argument,
                  name + " expects " + std::to_string(n) + " argument(s)");
  };
  if (name == "exp") {
    arity(1);
    return exp_total(eval_node(*e.children[0], session), b);
  }
  if (name == "log" || name == "ln") {
    arity(1);
    return log_total(eval_node(*e.children[0], session), b);
  }
  if (name == "sin") {
    arity(1);
    return taylor_apply(germs::sin_germ(), eval_node(*e.children[0], session), b);
  }
  if (name == "cos") {
    arity(1);
    return taylor_apply(germs::cos_germ(), eval_node(*e.children[0], session), b);
  }
  if (name == "geom") {
    arity(1);
    return taylor_apply(germs::geometric_germ(), eval_node(*e.children[0], session), b);
  }
  if (name == "log1p") {
    arity(1);
    return taylor_apply(germs::log1p_germ(session.field), eval_node(*e.children[0], session), b);
  }
  if (name == "e") {
    arity(1);
    Series arg = eval_node(*e.children[0], session);
    return restricted_apply(germs::restricted_e(session.field),
                            std::span<const Series>(&arg, 1), b);
  }
  throw Error(errc::bad_argument, "unknown function '" + name + "'");
}

Series eval_node(const Expr& e, const Session& session) {
  const Budget b = session.budget();
  try {
    switch (e.kind) {
      case Expr::Kind::number:
        return make_constant_series(Constant(e.number_value), session.field);
      case Expr::Kind::symbol: {
        if (auto idx = log_index(e.name))
          return make_monomial_series(Monomial::log_monomial(*idx), session.field);
        if (e.name == "e") {
          if (session.field != FieldKind::exp_rationals)
            throw Error(errc::constant_exp_unsupported,
                        "the constant e needs the exprational field (set field exprational)");
          return make_constant_series(const_exp(Constant(1), session.field), session.field);
        }
        throw Error(errc::bad_argument, "unknown name '" + e.name + "'");
      }
      case Expr::Kind::unary_minus:
        return series_neg(eval_node(*e.children[0], session));
      case Expr::Kind::call:
        return eval_call(e, session);
      case Expr::Kind::binary: {
        switch (e.op) {
          case '+':
            return series_add(eval_node(*e.children[0], session),
                              eval_node(*e.children[1], session));
          case '-':
            return series_sub(eval_node(*e.children[0], session),
                              eval_node(*e.children[1], session));
          case '*':
            return series_mul(eval_node(*e.children[0], session),
                              eval_node(*e.children[1], session));
          case '/':
            return series_mul(eval_node(*e.children[0], session),
                              series_invert(eval_node(*e.children[1], session), b));
          case '^': {
            Series base = eval_node(*e.children[0], session);
            Rational exponent = constant_exponent(*e.children[1], session);
            return power(base, Constant(exponent), b);
          }
        }
        throw Error(errc::bad_argument, "unknown operator");
      }
    }
    throw Error(errc::bad_argument, "malformed expression node");
  } catch (const Error& err) {
    rethrow_with_span(err, e);
  }
}

}  // namespace

Series evaluate(const Expr& e, const Session& session) { return eval_node(e, session); }

Series evaluate_text(const std::string& text, const Session& session) {
  ExprPtr ast = parse(text);
  return evaluate(*ast, session);
}

std::string highlight_error(const std::string& source, const Error& err) {
  std::size_t begin = err.span_begin != Error::npos ? err.span_begin
                      : err.has_position()          ? err.position()
                                                    : 0;
  std::size_t end = err.span_end != Error::npos ? err.span_end : begin + 1;
  if (begin > source.size()) begin = source.size();
  if (end <= begin) end = begin + 1;
  if (end > source.size() + 1) end = source.size() + 1;
  std::string out = "  " + source + "\n  ";
  out += std::string(begin, ' ');
  out += std::string(end - begin, '^');
  return out;
}

}  // namespace tss
