#include "lammult/derivation.hpp"

#include <cstddef>
#include <stdexcept>
#include <variant>

#include "lammult/machine.hpp"

namespace lammult {

namespace {

void require_fuel(std::size_t fuel) {
  if (fuel == 0) throw std::invalid_argument("fuel must be at least 1");
}

StageResult halt(Term answer, FlatStack residual, std::size_t steps) {
  return StageResult{StageAnswer{std::move(answer), std::move(residual)}, steps};
}

StageResult exhausted(std::size_t fuel) { return StageResult{std::nullopt, fuel}; }

}  // namespace

StageResult stage0_eval(Term t, FlatStack s, std::size_t fuel) {
  require_fuel(fuel);
  std::size_t steps = 0;
  for (;;) {
    if (t.is_app()) {
      if (steps == fuel) return exhausted(fuel);
      const AppNode& a = t.as_app();
      FlatStack pushed = flat_push(a.args, s);
      Term next = a.head;
      t = std::move(next);
      s = std::move(pushed);
      ++steps;
      continue;
    }
    if (t.is_fun()) {
      const FunNode& f = t.as_fun();
      PopResult<FlatStack> r = flat_pop(f.params.size(), s);
      if (!is_found(r)) return halt(t, s, steps);
      if (steps == fuel) return exhausted(fuel);
      const Found<FlatStack>& found = get_found(r);
      Term next = subst(zip_params(f.params, found.taken, f.params.size()), f.body);
      t = std::move(next);
      s = found.rest;
      ++steps;
      continue;
    }
    return halt(t, s, steps);
  }
}

StageResult stage1_eval_seg(Term t, SegStack s, std::size_t fuel) {
  require_fuel(fuel);
  std::size_t steps = 0;
  for (;;) {
    if (t.is_app()) {
      if (steps == fuel) return exhausted(fuel);
      const AppNode& a = t.as_app();
      SegStack pushed = seg_push(a.args, s);
      Term next = a.head;
      t = std::move(next);
      s = std::move(pushed);
      ++steps;
      continue;
    }
    if (t.is_fun()) {
      const FunNode& f = t.as_fun();
      PopResult<SegStack> r = seg_pop(f.params.size(), s);
      if (!is_found(r)) return halt(t, flatten(s), steps);
      if (steps == fuel) return exhausted(fuel);
      const Found<SegStack>& found = get_found(r);
      Term next = subst(zip_params(f.params, found.taken, f.params.size()), f.body);
      t = std::move(next);
      s = found.rest;
      ++steps;
      continue;
    }
    return halt(t, flatten(s), steps);
  }
}

namespace {

// What the pop continuation decides: either the final (answer, residual)
// pair, or the next evaluator state. Tail calls become driver-loop
// iterations.
struct CpsHalt {
  Term answer;
  SegStack residual;
};
struct CpsContinue {
  Term control;
  SegStack stack;
};
using CpsOut = std::variant<CpsHalt, CpsContinue>;

}  // namespace

StageResult stage2_eval_cps(Term t, SegStack s, std::size_t fuel) {
  require_fuel(fuel);
  std::size_t steps = 0;
  for (;;) {
    if (t.is_app()) {
      if (steps == fuel) return exhausted(fuel);
      const AppNode& a = t.as_app();
      SegStack pushed = seg_push(a.args, s);
      Term next = a.head;
      t = std::move(next);
      s = std::move(pushed);
      ++steps;
      continue;
    }
    if (t.is_fun()) {
      const FunNode& f = t.as_fun();
      // aux, closing over the binder, the body and the pre-pop stack.
      CpsOut out = seg_pop_cps(
          f.params.size(), s, [&](const PopResult<SegStack>& r) -> CpsOut {
            if (is_found(r)) {
              const Found<SegStack>& found = get_found(r);
              return CpsContinue{
                  subst(zip_params(f.params, found.taken, f.params.size()), f.body),
                  found.rest};
            }
            return CpsHalt{t, s};
          });
      if (auto* h = std::get_if<CpsHalt>(&out)) {
        return halt(std::move(h->answer), flatten(h->residual), steps);
      }
      if (steps == fuel) return exhausted(fuel);
      CpsContinue& cont = std::get<CpsContinue>(out);
      t = std::move(cont.control);
      s = std::move(cont.stack);
      ++steps;
      continue;
    }
    return halt(t, flatten(s), steps);
  }
}

namespace {

// The continuation of stage 2, lambda-lifted: its captures are now explicit
// arguments.
CpsOut lifted_aux(const std::vector<Identifier>& xs, const Term& body,
                  const SegStack& s, const PopResult<SegStack>& r) {
  if (is_found(r)) {
    const Found<SegStack>& found = get_found(r);
    return CpsContinue{subst(zip_params(xs, found.taken, xs.size()), body),
                       found.rest};
  }
  return CpsHalt{Term::fun(xs, body), s};
}

}  // namespace

StageResult stage3_eval_lifted(Term t, SegStack s, std::size_t fuel) {
  require_fuel(fuel);
  std::size_t steps = 0;
  for (;;) {
    if (t.is_app()) {
      if (steps == fuel) return exhausted(fuel);
      const AppNode& a = t.as_app();
      SegStack pushed = seg_push(a.args, s);
      Term next = a.head;
      t = std::move(next);
      s = std::move(pushed);
      ++steps;
      continue;
    }
    if (t.is_fun()) {
      const FunNode& f = t.as_fun();
      CpsOut out = seg_pop_cps(f.params.size(), s,
                               [&](const PopResult<SegStack>& r) {
                                 return lifted_aux(f.params, f.body, s, r);
                               });
      if (auto* h = std::get_if<CpsHalt>(&out)) {
        return halt(std::move(h->answer), flatten(h->residual), steps);
      }
      if (steps == fuel) return exhausted(fuel);
      CpsContinue& cont = std::get<CpsContinue>(out);
      t = std::move(cont.control);
      s = std::move(cont.stack);
      ++steps;
      continue;
    }
    return halt(t, flatten(s), steps);
  }
}

namespace {

struct EvalState {
  Term control;
  SegStack stack;
};
// The inlined pop loop's state; `n` present only while the arity argument
// still exists (stage 4).
struct PopState {
  std::vector<Term> acc;
  std::size_t n = 0;
  Term body;
  std::vector<Identifier> xs;
  SegStack ys;
};

template <bool kExplicitArity>
StageResult eval_inlined(Term t, SegStack s, std::size_t fuel) {
  require_fuel(fuel);
  std::size_t steps = 0;
  std::variant<EvalState, PopState> state{EvalState{std::move(t), std::move(s)}};
  for (;;) {
    if (auto* ev = std::get_if<EvalState>(&state)) {
      if (ev->control.is_app()) {
        if (steps == fuel) return exhausted(fuel);
        const AppNode& a = ev->control.as_app();
        state = EvalState{a.head, seg_push(a.args, ev->stack)};
        ++steps;
        continue;
      }
      if (ev->control.is_fun()) {
        if (steps == fuel) return exhausted(fuel);
        const FunNode& f = ev->control.as_fun();
        state = PopState{{}, f.params.size(), f.body, f.params, ev->stack};
        ++steps;
        continue;
      }
      return halt(ev->control, flatten(ev->stack), steps);
    }
    PopState& p = std::get<PopState>(state);
    const std::size_t m = p.acc.size();
    const std::size_t n = kExplicitArity ? p.n : p.xs.size();
    if (m == n) {
      if (steps == fuel) return exhausted(fuel);
      Term next = subst(zip_params(p.xs, p.acc, n), p.body);
      state = EvalState{std::move(next), std::move(p.ys)};
      ++steps;
      continue;
    }
    if (m > n) {
      if (steps == fuel) return exhausted(fuel);
      Term next = subst(zip_params(p.xs, p.acc, n), p.body);
      std::vector<Term> leftover(p.acc.begin() + static_cast<std::ptrdiff_t>(n),
                                 p.acc.end());
      state = EvalState{std::move(next), seg_push(std::move(leftover), p.ys)};
      ++steps;
      continue;
    }
    if (!p.ys.empty()) {
      if (steps == fuel) return exhausted(fuel);
      const Frame& front = p.ys.front();
      p.acc.insert(p.acc.end(), front.begin(), front.end());
      p.ys = p.ys.pop_front();
      ++steps;
      continue;
    }
    // otherwise: the derived code returns (Fun xs t, []) — accumulator
    // dropped, residual empty.
    return halt(Term::fun(p.xs, p.body), FlatStack{}, steps);
  }
}

}  // namespace

StageResult stage4_eval_inlined(Term t, SegStack s, std::size_t fuel) {
  return eval_inlined<true>(std::move(t), std::move(s), fuel);
}

StageResult stage5_eval_final(Term t, SegStack s, std::size_t fuel) {
  return eval_inlined<false>(std::move(t), std::move(s), fuel);
}

const char* chain_verdict_name(ChainVerdict v) {
  switch (v) {
    case ChainVerdict::Agree: return "agree";
    case ChainVerdict::DocumentedException: return "documented-exception";
    case ChainVerdict::FuelSkew: return "fuel-skew";
    case ChainVerdict::AllExhausted: return "all-exhausted";
    case ChainVerdict::Divergent: return "divergent";
  }
  return "divergent";
}

namespace {

bool flat_equal(const FlatStack& a, const FlatStack& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (!(*ia == *ib)) return false;
  }
  return ia == a.end() && ib == b.end();
}

bool same_result(const StageResult& a, const StageResult& b, bool compare_steps) {
  if (a.halted() != b.halted()) return false;
  if (compare_steps && a.steps_taken != b.steps_taken) return false;
  if (!a.halted()) return true;
  return a.value->answer == b.value->answer &&
         flat_equal(a.value->residual, b.value->residual);
}

}  // namespace

ChainReport check_stage_chain(const Term& t, std::size_t fuel) {
  ChainReport rep;
  rep.results = {stage0_eval(t, {}, fuel),        stage1_eval_seg(t, {}, fuel),
                 stage2_eval_cps(t, {}, fuel),    stage3_eval_lifted(t, {}, fuel),
                 stage4_eval_inlined(t, {}, fuel), stage5_eval_final(t, {}, fuel)};

  // Stages 0-3 take the same transitions, so they must match exactly, steps
  // included.
  for (std::size_t i = 1; i <= 3; ++i) {
    if (!same_result(rep.results[0], rep.results[i], true)) {
      rep.verdict = ChainVerdict::Divergent;
      rep.detail = "stage " + std::to_string(i) + " disagrees with stage 0";
      return rep;
    }
  }
  // So must stages 4 and 5 (the arity argument is redundant).
  if (!same_result(rep.results[4], rep.results[5], true)) {
    rep.verdict = ChainVerdict::Divergent;
    rep.detail = "stage 5 disagrees with stage 4";
    return rep;
  }

  const StageResult& s3 = rep.results[3];
  const StageResult& s4 = rep.results[4];
  if (!s3.halted() && !s4.halted()) {
    rep.verdict = ChainVerdict::AllExhausted;
    return rep;
  }
  if (s3.halted() && !s4.halted()) {
    // Stages 4-5 pay a step per absorbed frame, so under the same fuel they
    // may run out where 0-3 halted.
    rep.verdict = ChainVerdict::FuelSkew;
    return rep;
  }
  if (!s3.halted() && s4.halted()) {
    rep.verdict = ChainVerdict::Divergent;
    rep.detail = "stages 4-5 halted where stages 0-3 ran out of fuel";
    return rep;
  }

  if (s3.value->answer == s4.value->answer &&
      flat_equal(s3.value->residual, s4.value->residual)) {
    rep.verdict = ChainVerdict::Agree;
    return rep;
  }
  if (s3.value->answer == s4.value->answer && s4.value->residual.empty() &&
      s3.value->answer.is_fun()) {
    rep.verdict = ChainVerdict::DocumentedException;
    rep.detail = "stages 4-5 dropped the residual on an insufficient-arguments halt";
    return rep;
  }
  rep.verdict = ChainVerdict::Divergent;
  rep.detail = "stages 4-5 disagree with stages 0-3 beyond the documented exception";
  return rep;
}

}  // namespace lammult
