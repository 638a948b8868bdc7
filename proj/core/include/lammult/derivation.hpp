#ifndef LAMMULT_DERIVATION_HPP
#define LAMMULT_DERIVATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "lammult/stack.hpp"
#include "lammult/syntax.hpp"

namespace lammult {

// Result of one evaluator stage. Segmented residuals are flattened so all
// stages compare against the same shape.
struct StageAnswer {
  Term answer;
  FlatStack residual;
};
struct StageResult {
  std::optional<StageAnswer> value;  // nullopt = fuel exhausted
  std::size_t steps_taken = 0;

  bool halted() const { return value.has_value(); }
};

// The six stages of the derivation, from the direct-style evaluator over a
// flat stack down to the code that decodes to the eval/apply machine. Fuel
// bounds the number of state transitions; stages 0-3 count evaluator
// transitions (one per application or successful pop), stages 4-5 count every
// transition of the inlined pop loop as well, matching the eval/apply
// machine's step count.

// Direct-style evaluator over the flat stack.
StageResult stage0_eval(Term t, FlatStack s, std::size_t fuel);

// Same evaluator over the segmented stack.
StageResult stage1_eval_seg(Term t, SegStack s, std::size_t fuel);

// Pop in CPS; the continuation closes over the binder, body and stack.
StageResult stage2_eval_cps(Term t, SegStack s, std::size_t fuel);

// The continuation lambda-lifted into a named function.
StageResult stage3_eval_lifted(Term t, SegStack s, std::size_t fuel);

// Pop loop inlined into the evaluator. The insufficient-arguments branch
// returns the abstraction with an EMPTY residual, dropping the collected
// accumulator — reproduced exactly as derived, divergence from stages 0-3 on
// such halts is expected and documented.
StageResult stage4_eval_inlined(Term t, SegStack s, std::size_t fuel);

// The redundant arity argument of the pop loop eliminated; decodes to the
// eval/apply machine (stage 5 driver iterations = ea_run steps).
StageResult stage5_eval_final(Term t, SegStack s, std::size_t fuel);

enum class ChainVerdict {
  Agree,                // all stages produce the same (answer, residual)
  DocumentedException,  // stages 4-5 dropped the accumulator on an
                        // insufficient-arguments halt; answers still agree
  FuelSkew,             // stages 0-3 halted, 4-5 ran out of fuel (they spend
                        // a step per frame absorbed; expected, not divergent)
  AllExhausted,         // nothing halted; trivially agree
  Divergent             // anything else — a genuine disagreement
};

const char* chain_verdict_name(ChainVerdict v);

struct ChainReport {
  std::array<StageResult, 6> results;
  ChainVerdict verdict = ChainVerdict::Agree;
  std::string detail;  // human-readable witness when Divergent

  bool agree() const { return verdict != ChainVerdict::Divergent; }
};

// Runs all six stages from an empty stack and classifies the outcome.
ChainReport check_stage_chain(const Term& t, std::size_t fuel);

}  // namespace lammult

#endif
