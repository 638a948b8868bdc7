#include "lammult/machine_pe.hpp"

namespace lammult {

StepOutcome<PEConfig> pe_step(const PEConfig& c) {
  return c.control.visit(Overloaded{
      [&](const VarNode&) -> StepOutcome<PEConfig> {
        return Halted<PEConfig>{c, HaltReason::FreeVariable};
      },
      [&](const AppNode& a) -> StepOutcome<PEConfig> {
        return Stepped<PEConfig>{PEConfig{a.head, flat_push(a.args, c.stack)},
                                 "K-APP"};
      },
      [&](const FunNode& f) -> StepOutcome<PEConfig> {
        PopResult<FlatStack> r = flat_pop(f.params.size(), c.stack);
        if (!is_found(r)) {
          return Halted<PEConfig>{c, HaltReason::TooFewArguments};
        }
        const Found<FlatStack>& found = get_found(r);
        Term body = subst(zip_params(f.params, found.taken, f.params.size()), f.body);
        return Stepped<PEConfig>{PEConfig{std::move(body), found.rest}, "K-FUN"};
      }});
}

RunResult<PEConfig> pe_run(const Term& t, std::size_t fuel) {
  return run_machine(PEConfig{t, {}}, fuel, pe_step);
}

}  // namespace lammult
