#include "tss/repl.hpp"

#include "tss/format.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tss {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "e1 , e2" at the first comma outside parentheses.
std::optional<std::pair<std::string, std::string>> split_comma(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0)
      return std::make_pair(trim(s.substr(0, i)), trim(s.substr(i + 1)));
  }
  return std::nullopt;
}

std::string order_symbol(Order o) {
  switch (o) {
    case Order::less: return "≺";     // ≺
    case Order::greater: return "≻";  // ≻
    case Order::equal: return "=";
    case Order::indeterminate: return "?";
  }
  return "?";
}

std::string describe_error(const std::string& source, const Error& e) {
  std::string out = std::string("error: ") + errc_name(e.code()) + ": " + e.what();
  if (!source.empty() && (e.span_begin != Error::npos || e.has_position()))
    out += "\n" + highlight_error(source, e);
  return out;
}

std::string expand_command(const std::string& rest, Session& session) {
  std::string expr = rest;
  std::size_t terms = session.display_terms;
  // A trailing integer token is the term count, if anything precedes it.
  std::size_t split = expr.find_last_of(" \t");
  if (split != std::string::npos) {
    std::string tail = trim(expr.substr(split));
    if (!tail.empty() &&
        tail.find_first_not_of("0123456789") == std::string::npos) {
      expr = trim(expr.substr(0, split));
      terms = static_cast<std::size_t>(std::stoul(tail));
    }
  }
  Series value = evaluate_text(expr, session);
  SeriesFormat fmt;
  fmt.max_terms = terms;
  fmt.budget = session.budget();
  return format_series(value, fmt);
}

}  // namespace

std::string format_axiom_report(const AxiomReport& report) {
  std::ostringstream out;
  for (const auto& inst : report.instances) {
    const char* tag = inst.outcome == Outcome::pass          ? "pass"
                      : inst.outcome == Outcome::fail        ? "FAIL"
                                                             : "indeterminate";
    out << "[" << tag << "] (" << inst.axiom << ") " << inst.description;
    if (inst.outcome != Outcome::pass && !inst.witness.empty())
      out << " -- " << inst.witness;
    out << "\n";
  }
  out << "axioms: " << report.passed << " passed, " << report.failed << " failed, "
      << report.indeterminate << " indeterminate";
  return out.str();
}

std::string repl_command(const std::string& line, Session& session) {
  std::string input = trim(line);
  if (input.empty()) return "";
  std::string verb = input.substr(0, input.find_first_of(" \t"));
  std::string rest = trim(input.substr(verb.size()));

  try {
    if (verb == "help") {
      return "commands: expand <expr> [k] | compare <e1> , <e2> | limit <expr> | "
             "dominant <expr> | decompose <expr> | axioms | set budget <n> | "
             "set field rational|exprational | quit";
    }
    if (verb == "set") {
      std::istringstream args(rest);
      std::string what, value;
      args >> what >> value;
      if (what == "budget") {
        int n = std::stoi(value);
        if (n < 1) return "error: BadArgument: budget must be at least 1";
        session.budget_terms = n;
        return "budget = " + std::to_string(n);
      }
      if (what == "field") {
        if (value == "rational") {
          session.field = FieldKind::rationals;
        } else if (value == "exprational") {
          session.field = FieldKind::exp_rationals;
        } else {
          return "error: BadArgument: field must be rational or exprational";
        }
        return std::string("field = ") + field_name(session.field);
      }
      return "error: BadArgument: set budget <n> or set field <name>";
    }
    if (verb == "axioms") return format_axiom_report(axiom_suite(session.budget()));
    if (verb == "compare") {
      auto parts = split_comma(rest);
      if (!parts) return "error: SyntaxError: compare expects two expressions separated by ','";
      Series lhs = evaluate_text(parts->first, session);
      Series rhs = evaluate_text(parts->second, session);
      Order o = eventual_compare(lhs, rhs, session.budget());
      return parts->first + " " + order_symbol(o) + " " + parts->second + " (" +
             order_name(o) + ")";
    }
    if (verb == "limit") {
      Limit lim = limit_at_infinity(evaluate_text(rest, session), session.budget());
      switch (lim.kind) {
        case Limit::Kind::plus_infinity: return "+inf";
        case Limit::Kind::minus_infinity: return "-inf";
        case Limit::Kind::finite: return format_constant(lim.value);
        case Limit::Kind::indeterminate: return "indeterminate";
      }
      return "indeterminate";
    }
    if (verb == "dominant") {
      DominantResult d =
          dominant_monomial(evaluate_text(rest, session), session.budget());
      if (d.is_zero()) return "0 (zero series)";
      if (d.is_indeterminate()) return "indeterminate";
      return format_monomial(d.monomial);
    }
    if (verb == "decompose") {
      Decomposition parts = decompose(evaluate_text(rest, session), session.budget());
      SeriesFormat fmt;
      fmt.max_terms = session.display_terms;
      fmt.budget = session.budget();
      return "infinite: " + format_series(parts.infinite, fmt) +
             "\nconstant: " + format_constant(parts.constant) +
             "\ninfinitesimal: " + format_series(parts.infinitesimal, fmt);
    }
    if (verb == "expand") return expand_command(rest, session);
    // No verb: treat the whole line as an expression.
    return expand_command(input, session);
  } catch (const Error& e) {
    std::string source = verb == "expand" || verb == "limit" || verb == "dominant" ||
                                 verb == "decompose"
                             ? rest
                             : input;
    return describe_error(source, e);
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

void run_repl(std::istream& in, std::ostream& out, Session session) {
  std::string line;
  while (true) {
    out << "tss> " << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      return;
    }
    std::string input = trim(line);
    if (input == "quit" || input == "exit") return;
    std::string result = repl_command(line, session);
    if (!result.empty()) out << result << "\n";
  }
}

}  // namespace tss
