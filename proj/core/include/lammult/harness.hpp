#ifndef LAMMULT_HARNESS_HPP
#define LAMMULT_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lammult/derivation.hpp"
#include "lammult/machine_ea.hpp"
#include "lammult/machine_pe.hpp"
#include "lammult/machine_stg.hpp"

namespace lammult {

// Reconstructs the term a halted configuration denotes by re-applying the
// residual stack to the head; the result is spine-normalized. The Outcome
// overloads throw std::invalid_argument on a fuel-exhausted outcome.
Term unload(const PEConfig& c);
Term unload(const EAConfig& c);
Term unload(const Outcome<PEConfig>& o);
Term unload(const Outcome<EAConfig>& o);

// Currying: tuple applications become nested unary applications, tuple
// binders nested unary binders. The bridge into the ordinary lambda calculus
// the oracle reduces.
Term curry(const Term& t);

struct OracleResult {
  std::optional<Term> value;  // nullopt = fuel (beta budget) exhausted
  std::size_t betas = 0;

  bool halted() const { return value.has_value(); }
};

// Independent oracle: curries t and runs a textbook normal-order weak-head
// reducer, counting beta steps against fuel.
OracleResult oracle_whnf(const Term& t, std::size_t fuel);

enum class Verdict { Agree, Mismatch, AllFuelExhausted };
const char* verdict_name(Verdict v);

struct MachineSummary {
  bool halted = false;
  std::size_t steps = 0;
  std::optional<HaltReason> reason;
  std::optional<Term> unloaded;
};

struct DiffReport {
  Term term;
  MachineSummary pe;
  MachineSummary ea;
  MachineSummary stg;
  ChainVerdict chain = ChainVerdict::Agree;
  std::string chain_detail;
  // Oracle soundness: whnf(curry(unload)) must alpha-equal whnf(curry(term))
  // when both reduce within budget; inconclusive runs don't count either way.
  bool oracle_conclusive = false;
  bool oracle_ok = true;
  Verdict verdict = Verdict::Agree;
  std::string detail;
};

// Runs all three machines and the stage chain on t, cross-checks unloads
// (spine-alpha), the stage chain, step dominance, and the oracle relation.
DiffReport differential(const Term& t, std::size_t fuel);

struct FusionReport {
  bool ran_to_halt = false;  // both EA and STG halted within fuel
  bool ok = true;
  std::size_t ea_steps = 0;
  std::size_t stg_steps = 0;
  std::vector<std::string> compressed;  // EA rule stream after path fusion
  std::vector<std::string> stg_rules;   // the STG machine's actual rule stream
  std::string detail;                   // first divergence, if any
};

// Compresses the EA trace along the fixed fusion paths and checks the result
// against the STG trace rule-for-rule (prefix comparison when a run was cut
// short by fuel; an incomplete trailing path is dropped).
FusionReport check_fusion(const Term& t, std::size_t fuel);

struct FuzzWitness {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;   // per-term generator seed; replays the case
  std::string printed;      // the generated term
  std::string shrunk;       // greedily minimized term still mismatching
  std::string detail;
};

struct FuzzSummary {
  std::uint64_t count = 0;
  std::uint64_t agree = 0;
  std::uint64_t mismatch = 0;
  std::uint64_t all_fuel_exhausted = 0;
  std::uint64_t oracle_violations = 0;  // already included in mismatch
  std::uint64_t chain_exceptions = 0;   // documented stage 4-5 residual drops
  std::uint64_t fuel_skew = 0;          // stages 4-5 out of fuel where 0-3 halted
  std::vector<FuzzWitness> witnesses;   // capped; mismatch holds the full count
};

// Per-term seed derivation; fixed so failures are replayable in isolation.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Greedy structural shrinking: repeatedly replaces the term by a smaller
// variant (a sub-term hoisted into place, or a sub-term replaced by a fresh
// free variable) that still produces a Mismatch verdict.
Term shrink_mismatch(Term t, std::size_t fuel);

// Generates `count` terms from the seed and runs differential on each.
// Throws std::invalid_argument when count is zero.
FuzzSummary fuzz(std::uint64_t count, std::size_t max_size, std::size_t fuel,
                 std::uint64_t seed, bool closed);

}  // namespace lammult

#endif
