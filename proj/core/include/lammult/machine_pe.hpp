#ifndef LAMMULT_MACHINE_PE_HPP
#define LAMMULT_MACHINE_PE_HPP

#include "lammult/machine.hpp"

namespace lammult {

// Push/enter configuration ⟨e, s⟩: the control term and a flat argument
// stack.
struct PEConfig {
  Term control;
  FlatStack stack;
};

// One transition:
//   K-APP  ⟨(e0 e1 ... en), s⟩ → ⟨e0, e1 : ... : en : s⟩
//   K-FUN  ⟨(\x1 ... xn. e), v1 : ... : vn : s⟩ → ⟨e[vs/xs], s⟩
// Halts on a Var control (free variable) or a Fun that finds fewer than n
// arguments on the stack (the stack is left untouched).
StepOutcome<PEConfig> pe_step(const PEConfig& c);

RunResult<PEConfig> pe_run(const Term& t, std::size_t fuel);

}  // namespace lammult

#endif
