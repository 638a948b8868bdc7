#ifndef LAMMULT_MACHINE_STG_HPP
#define LAMMULT_MACHINE_STG_HPP

#include "lammult/machine_ea.hpp"

namespace lammult {

// Same configuration shapes as the eval/apply machine.
using STGConfig = EAConfig;

// One STG-like transition (k = |args| resp. accumulated count, n = binder
// arity):
//   STG-TCALL   Eval((e0 args), s), e0 not a Fun → Eval(e0, args : s)
//   STG-EXACT   Eval(((\xs. e) args), s), k = n  → Eval(e[args/xs], s)
//   STG-CALLK   Eval(((\xs. e) args), s), k > n  → Eval(e[args1..n/xs], surplus : s)
//   STG-PAP2    Eval(((\xs. e) args), s), k < n  → Pap(args, n, e, xs, s)
//   STG-RETFUN  Eval((\xs. e), f : s)            → Eval(((\xs. e) f), s)
//   STG-PCALL   Pap(acc, n, e, xs, f : s)        → Eval(((\xs. e) acc++f), s)
// Halts: Var control (free variable); Fun or Pap over an empty stack (value
// halts, reported as too-few-arguments).
StepOutcome<STGConfig> stg_step(const STGConfig& c);

RunResult<STGConfig> stg_run(const Term& t, std::size_t fuel);

}  // namespace lammult

#endif
