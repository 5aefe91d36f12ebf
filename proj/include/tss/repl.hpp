#ifndef TSS_REPL_HPP
#define TSS_REPL_HPP

#include "tss/eval.hpp"

#include <iosfwd>

namespace tss {

// Line-oriented REPL over the kernel. Verbs: expand <expr> [k],
// compare <e1> , <e2>, limit <expr>, dominant <expr>, decompose <expr>,
// axioms, set budget <n>, set field rational|exprational, help, quit.
// A bare expression expands with the session's display length. Kernel
// errors are printed, never fatal. Output is deterministic.
void run_repl(std::istream& in, std::ostream& out, Session session = {});

// One REPL command against a session; returns the exact output text.
std::string repl_command(const std::string& line, Session& session);

std::string format_axiom_report(const AxiomReport& report);

}  // namespace tss

#endif  // TSS_REPL_HPP
