// tss: exact transseries calculator.
//
// Subcommands: repl, eval "<expr>", compare "<e1>" "<e2>", axioms.
// Exit codes: 0 for success/determinate verdicts, 2 for indeterminate
// verdicts, 1 for errors.

#include "tss/format.hpp"
#include "tss/repl.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

tss::Session make_session(const std::string& field, int budget, std::size_t terms) {
  tss::Session session;
  session.field = field == "exprational" ? tss::FieldKind::exp_rationals
                                         : tss::FieldKind::rationals;
  session.budget_terms = budget;
  session.display_terms = terms;
  return session;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact well-based series and transseries kernel"};
  app.require_subcommand(1);

  std::string field = "rational";
  int budget = tss::Budget::default_max_terms();
  std::size_t terms = 10;
  app.add_option("--field", field, "constant field: rational | exprational")
      ->check(CLI::IsMember({"rational", "exprational"}));
  app.add_option("--budget", budget, "term budget for lazy observations")
      ->check(CLI::PositiveNumber);
  app.add_option("--terms", terms, "terms to display for series output");

  auto* repl_cmd = app.add_subcommand("repl", "interactive session");

  std::string eval_text;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one expression");
  eval_cmd->add_option("expr", eval_text, "expression")->required();

  std::string cmp_lhs, cmp_rhs;
  auto* cmp_cmd = app.add_subcommand("compare", "eventual comparison at +infinity");
  cmp_cmd->add_option("lhs", cmp_lhs, "left expression")->required();
  cmp_cmd->add_option("rhs", cmp_rhs, "right expression")->required();

  auto* axioms_cmd = app.add_subcommand("axioms", "run the (E1)-(E5) axiom suite");

  CLI11_PARSE(app, argc, argv);
  tss::Budget::set_default_max_terms(budget);
  tss::Session session = make_session(field, budget, terms);

  try {
    if (repl_cmd->parsed()) {
      tss::run_repl(std::cin, std::cout, session);
      return 0;
    }
    if (eval_cmd->parsed()) {
      std::string out = tss::repl_command("expand " + eval_text, session);
      std::cout << out << "\n";
      return out.rfind("error:", 0) == 0 ? 1 : 0;
    }
    if (cmp_cmd->parsed()) {
      tss::Series lhs = tss::evaluate_text(cmp_lhs, session);
      tss::Series rhs = tss::evaluate_text(cmp_rhs, session);
      tss::Order o = tss::eventual_compare(lhs, rhs, session.budget());
      std::cout << cmp_lhs << " vs " << cmp_rhs << ": " << tss::order_name(o) << "\n";
      return o == tss::Order::indeterminate ? 2 : 0;
    }
    if (axioms_cmd->parsed()) {
      tss::AxiomReport report = tss::axiom_suite(session.budget());
      std::cout << tss::format_axiom_report(report) << "\n";
      if (report.failed > 0) return 1;
      return report.indeterminate > 0 ? 2 : 0;
    }
  } catch (const tss::Error& e) {
    std::cerr << "error: " << tss::errc_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
