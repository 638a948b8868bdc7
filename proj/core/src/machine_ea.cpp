#include "lammult/machine_ea.hpp"

namespace lammult {

StepOutcome<EAConfig> ea_step(const EAConfig& c) {
  return std::visit(
      Overloaded{
          [&](const EvalConfig& e) -> StepOutcome<EAConfig> {
            return e.control.visit(Overloaded{
                [&](const VarNode&) -> StepOutcome<EAConfig> {
                  return Halted<EAConfig>{c, HaltReason::FreeVariable};
                },
                [&](const AppNode& a) -> StepOutcome<EAConfig> {
                  return Stepped<EAConfig>{
                      EvalConfig{a.head, seg_push(a.args, e.stack)}, "E-APP"};
                },
                [&](const FunNode& f) -> StepOutcome<EAConfig> {
                  return Stepped<EAConfig>{
                      PapConfig{{}, f.params.size(), f.body, f.params, e.stack},
                      "E-FUN"};
                }});
          },
          [&](const PapConfig& p) -> StepOutcome<EAConfig> {
            const std::size_t k = p.acc.size();
            const std::size_t n = p.arity;
            if (k == n) {
              Term next = subst(zip_params(p.params, p.acc, n), p.body);
              return Stepped<EAConfig>{EvalConfig{std::move(next), p.stack},
                                       "A-EQ"};
            }
            if (k > n) {
              Term next = subst(zip_params(p.params, p.acc, n), p.body);
              std::vector<Term> surplus(p.acc.begin() + static_cast<std::ptrdiff_t>(n),
                                        p.acc.end());
              return Stepped<EAConfig>{
                  EvalConfig{std::move(next), seg_push(std::move(surplus), p.stack)},
                  "A-GT"};
            }
            if (p.stack.empty()) {
              return Halted<EAConfig>{c, HaltReason::TooFewArguments};
            }
            std::vector<Term> acc = p.acc;
            const Frame& front = p.stack.front();
            acc.insert(acc.end(), front.begin(), front.end());
            return Stepped<EAConfig>{
                PapConfig{std::move(acc), p.arity, p.body, p.params,
                          p.stack.pop_front()},
                "A-LT"};
          }},
      c);
}

RunResult<EAConfig> ea_run(const Term& t, std::size_t fuel) {
  return run_machine(EAConfig{EvalConfig{t, {}}}, fuel, ea_step);
}

}  // namespace lammult
