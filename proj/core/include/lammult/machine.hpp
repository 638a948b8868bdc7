#ifndef LAMMULT_MACHINE_HPP
#define LAMMULT_MACHINE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lammult/stack.hpp"
#include "lammult/syntax.hpp"

namespace lammult {

// Why a machine stopped on its own: a free variable in head position, or an
// abstraction/pap that could not collect enough arguments (the latter covers
// ordinary value halts — a Fun on an empty stack is just the n > 0 case).
enum class HaltReason { FreeVariable, TooFewArguments };

inline const char* halt_reason_name(HaltReason r) {
  return r == HaltReason::FreeVariable ? "free-variable" : "too-few-arguments";
}

template <class Config>
struct Stepped {
  Config next;
  const char* rule;
};
template <class Config>
struct Halted {
  Config final_config;
  HaltReason reason;
};
template <class Config>
using StepOutcome = std::variant<Stepped<Config>, Halted<Config>>;

// Fuel-bounded run result. Detecting a halt costs no fuel, so a term whose
// halt is reached after exactly `fuel` transitions still reports Halted.
template <class Config>
struct Outcome {
  std::optional<Config> final_config;
  std::optional<HaltReason> reason;
  std::size_t steps = 0;

  bool halted() const { return final_config.has_value(); }
};

template <class Config>
struct TraceEntry {
  const char* rule;
  Config after;
};

template <class Config>
struct Trace {
  Config initial;
  std::vector<TraceEntry<Config>> entries;
};

template <class Config>
struct RunResult {
  Outcome<Config> outcome;
  Trace<Config> trace;
};

template <class Config, class StepFn>
RunResult<Config> run_machine(Config initial, std::size_t fuel, StepFn&& step) {
  if (fuel == 0) throw std::invalid_argument("fuel must be at least 1");
  RunResult<Config> result{Outcome<Config>{}, Trace<Config>{initial, {}}};
  Config current = std::move(initial);
  for (;;) {
    StepOutcome<Config> out = step(current);
    if (auto* halt = std::get_if<Halted<Config>>(&out)) {
      result.outcome.final_config = std::move(halt->final_config);
      result.outcome.reason = halt->reason;
      result.outcome.steps = result.trace.entries.size();
      return result;
    }
    if (result.trace.entries.size() == fuel) {
      result.outcome.steps = fuel;
      return result;
    }
    auto& stepped = std::get<Stepped<Config>>(out);
    current = stepped.next;
    result.trace.entries.push_back({stepped.rule, std::move(stepped.next)});
  }
}

inline std::vector<std::pair<Identifier, Term>> zip_params(
    const std::vector<Identifier>& params, const std::vector<Term>& args,
    std::size_t n) {
  std::vector<std::pair<Identifier, Term>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(params[i], args[i]);
  return out;
}

}  // namespace lammult

#endif
