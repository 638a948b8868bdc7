#include "lammult/machine_stg.hpp"

namespace lammult {

StepOutcome<STGConfig> stg_step(const STGConfig& c) {
  return std::visit(
      Overloaded{
          [&](const EvalConfig& e) -> StepOutcome<STGConfig> {
            return e.control.visit(Overloaded{
                [&](const VarNode&) -> StepOutcome<STGConfig> {
                  return Halted<STGConfig>{c, HaltReason::FreeVariable};
                },
                [&](const AppNode& a) -> StepOutcome<STGConfig> {
                  if (!a.head.is_fun()) {
                    return Stepped<STGConfig>{
                        EvalConfig{a.head, seg_push(a.args, e.stack)},
                        "STG-TCALL"};
                  }
                  const FunNode& f = a.head.as_fun();
                  const std::size_t k = a.args.size();
                  const std::size_t n = f.params.size();
                  if (k == n) {
                    Term next = subst(zip_params(f.params, a.args, n), f.body);
                    return Stepped<STGConfig>{EvalConfig{std::move(next), e.stack},
                                              "STG-EXACT"};
                  }
                  if (k > n) {
                    Term next = subst(zip_params(f.params, a.args, n), f.body);
                    std::vector<Term> surplus(
                        a.args.begin() + static_cast<std::ptrdiff_t>(n),
                        a.args.end());
                    return Stepped<STGConfig>{
                        EvalConfig{std::move(next),
                                   seg_push(std::move(surplus), e.stack)},
                        "STG-CALLK"};
                  }
                  return Stepped<STGConfig>{
                      PapConfig{a.args, n, f.body, f.params, e.stack},
                      "STG-PAP2"};
                },
                [&](const FunNode&) -> StepOutcome<STGConfig> {
                  if (e.stack.empty()) {
                    return Halted<STGConfig>{c, HaltReason::TooFewArguments};
                  }
                  return Stepped<STGConfig>{
                      EvalConfig{Term::app(e.control, e.stack.front()),
                                 e.stack.pop_front()},
                      "STG-RETFUN"};
                }});
          },
          [&](const PapConfig& p) -> StepOutcome<STGConfig> {
            if (p.stack.empty()) {
              return Halted<STGConfig>{c, HaltReason::TooFewArguments};
            }
            std::vector<Term> args = p.acc;
            const Frame& front = p.stack.front();
            args.insert(args.end(), front.begin(), front.end());
            return Stepped<STGConfig>{
                EvalConfig{Term::app(Term::fun(p.params, p.body), std::move(args)),
                           p.stack.pop_front()},
                "STG-PCALL"};
          }},
      c);
}

RunResult<STGConfig> stg_run(const Term& t, std::size_t fuel) {
  return run_machine(STGConfig{EvalConfig{t, {}}}, fuel, stg_step);
}

}  // namespace lammult
