#ifndef LAMMULT_MACHINE_EA_HPP
#define LAMMULT_MACHINE_EA_HPP

#include "lammult/machine.hpp"

namespace lammult {

// Evaluation configuration: control term over a segmented stack of argument
// frames.
struct EvalConfig {
  Term control;
  SegStack stack;
};

// Partial application being collected: acc holds the arguments gathered so
// far for an abstraction \params. body of the given arity (arity always
// equals |params|; both are kept because the machine carries both).
struct PapConfig {
  std::vector<Term> acc;
  std::size_t arity = 0;
  Term body;
  std::vector<Identifier> params;
  SegStack stack;
};

using EAConfig = std::variant<EvalConfig, PapConfig>;

// One eval/apply transition:
//   E-APP  Eval((e0 e1 ... ek), s)        → Eval(e0, [e1...ek] : s)
//   E-FUN  Eval((\xs. e), s)              → Pap([], |xs|, e, xs, s)
//   A-EQ   Pap(acc, n, e, xs, s), k = n   → Eval(e[acc/xs], s)
//   A-GT   Pap(acc, n, e, xs, s), k > n   → Eval(e[acc1..n/xs], surplus : s)
//   A-LT   Pap(acc, n, e, xs, f : s), k<n → Pap(acc ++ f, n, e, xs, s)
// where k = |acc|. Halts on Eval of a Var (free variable) and on a Pap that
// still needs arguments when the stack is empty; a halting Pap keeps its acc.
StepOutcome<EAConfig> ea_step(const EAConfig& c);

RunResult<EAConfig> ea_run(const Term& t, std::size_t fuel);

}  // namespace lammult

#endif
