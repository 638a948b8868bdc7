#include "lammult/harness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace lammult {

namespace {

// Top frame becomes the innermost application.
Term apply_frames(Term base, const SegStack& s) {
  Term out = std::move(base);
  for (const Frame& f : s) out = Term::app(std::move(out), f);
  return out;
}

}  // namespace

Term unload(const PEConfig& c) {
  if (c.stack.empty()) return spine_normalize(c.control);
  std::vector<Term> args(c.stack.begin(), c.stack.end());
  return spine_normalize(Term::app(c.control, std::move(args)));
}

Term unload(const EAConfig& c) {
  return std::visit(
      Overloaded{[](const EvalConfig& e) {
                   return spine_normalize(apply_frames(e.control, e.stack));
                 },
                 [](const PapConfig& p) {
                   Term base = Term::fun(p.params, p.body);
                   if (!p.acc.empty()) base = Term::app(std::move(base), p.acc);
                   return spine_normalize(apply_frames(std::move(base), p.stack));
                 }},
      c);
}

Term unload(const Outcome<PEConfig>& o) {
  if (!o.halted()) throw std::invalid_argument("unload: run did not halt");
  return unload(*o.final_config);
}

Term unload(const Outcome<EAConfig>& o) {
  if (!o.halted()) throw std::invalid_argument("unload: run did not halt");
  return unload(*o.final_config);
}

Term curry(const Term& t) {
  return t.visit(Overloaded{
      [&](const VarNode&) { return t; },
      [&](const AppNode& a) {
        Term out = curry(a.head);
        for (const Term& arg : a.args) {
          out = Term::app(std::move(out), {curry(arg)});
        }
        return out;
      },
      [&](const FunNode& f) {
        Term out = curry(f.body);
        for (auto it = f.params.rbegin(); it != f.params.rend(); ++it) {
          out = Term::fun(std::vector<Identifier>{*it}, std::move(out));
        }
        return out;
      }});
}

OracleResult oracle_whnf(const Term& t, std::size_t fuel) {
  if (fuel == 0) throw std::invalid_argument("fuel must be at least 1");
  Term head = curry(t);
  std::vector<Term> spine;  // pending arguments, next-to-apply at the back
  std::size_t betas = 0;
  for (;;) {
    if (head.is_app()) {
      const AppNode& a = head.as_app();
      for (auto it = a.args.rbegin(); it != a.args.rend(); ++it) {
        spine.push_back(*it);
      }
      Term next = a.head;
      head = std::move(next);
      continue;
    }
    if (head.is_fun() && !spine.empty()) {
      if (betas == fuel) return {std::nullopt, betas};
      const FunNode& f = head.as_fun();
      Term arg = std::move(spine.back());
      spine.pop_back();
      // Input is curried, so binders are unary.
      Term next = subst({{f.params.front(), std::move(arg)}}, f.body);
      head = std::move(next);
      ++betas;
      continue;
    }
    break;  // abstraction with nothing to apply, or a free-variable head
  }
  Term out = std::move(head);
  while (!spine.empty()) {
    out = Term::app(std::move(out), {std::move(spine.back())});
    spine.pop_back();
  }
  return {std::move(out), betas};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::AllFuelExhausted: return "all-fuel-exhausted";
  }
  return "mismatch";
}

DiffReport differential(const Term& t, std::size_t fuel) {
  DiffReport rep{t};
  RunResult<PEConfig> pe = pe_run(t, fuel);
  RunResult<EAConfig> ea = ea_run(t, fuel);
  RunResult<STGConfig> stg = stg_run(t, fuel);

  auto summarize = [](const auto& outcome) {
    MachineSummary m;
    m.halted = outcome.halted();
    m.steps = outcome.steps;
    m.reason = outcome.reason;
    if (outcome.halted()) m.unloaded = unload(outcome);
    return m;
  };
  rep.pe = summarize(pe.outcome);
  rep.ea = summarize(ea.outcome);
  rep.stg = summarize(stg.outcome);

  ChainReport chain = check_stage_chain(t, fuel);
  rep.chain = chain.verdict;
  rep.chain_detail = chain.detail;

  std::vector<std::string> problems;
  auto check_pair = [&](const MachineSummary& a, const MachineSummary& b,
                        const char* name) {
    if (a.halted && b.halted && !spine_alpha_eq(*a.unloaded, *b.unloaded)) {
      problems.push_back(std::string("unload disagreement: ") + name);
    }
  };
  check_pair(rep.pe, rep.ea, "pe vs ea");
  check_pair(rep.pe, rep.stg, "pe vs stg");
  check_pair(rep.ea, rep.stg, "ea vs stg");

  if (rep.pe.halted && rep.ea.halted && rep.pe.steps > rep.ea.steps) {
    problems.push_back("pe took more steps than ea");
  }
  if (rep.stg.halted && rep.ea.halted && rep.stg.steps > rep.ea.steps) {
    problems.push_back("stg took more steps than ea");
  }

  if (!chain.agree()) {
    problems.push_back("stage chain divergent: " + chain.detail);
  }

  // Oracle relation, checked on the first halted machine; pairwise unload
  // agreement transports it to the others (curry maps spine-alpha-equal
  // terms to alpha-equal ones).
  const MachineSummary* halted_machine = rep.pe.halted  ? &rep.pe
                                         : rep.ea.halted ? &rep.ea
                                         : rep.stg.halted ? &rep.stg
                                                          : nullptr;
  if (halted_machine != nullptr) {
    const std::size_t oracle_fuel = 4 * fuel + 4;
    OracleResult base = oracle_whnf(t, oracle_fuel);
    OracleResult got = oracle_whnf(*halted_machine->unloaded, oracle_fuel);
    if (base.halted() && got.halted()) {
      rep.oracle_conclusive = true;
      rep.oracle_ok = alpha_eq(*base.value, *got.value);
      if (!rep.oracle_ok) {
        problems.push_back(
            "oracle disagreement: whnf of unload differs from whnf of input");
      }
    }
  }

  if (!problems.empty()) {
    rep.verdict = Verdict::Mismatch;
    std::string detail;
    for (const std::string& p : problems) {
      if (!detail.empty()) detail += "; ";
      detail += p;
    }
    rep.detail = std::move(detail);
  } else if (!rep.pe.halted && !rep.ea.halted && !rep.stg.halted) {
    rep.verdict = Verdict::AllFuelExhausted;
  } else {
    rep.verdict = Verdict::Agree;
  }
  return rep;
}

namespace {

std::string stream_difference(const std::vector<std::string>& a,
                              const std::vector<std::string>& b,
                              std::size_t limit) {
  for (std::size_t i = 0; i < limit; ++i) {
    if (a[i] != b[i]) {
      return "rule " + std::to_string(i) + ": compressed " + a[i] +
             " vs stg " + b[i];
    }
  }
  return "stream lengths differ: compressed " + std::to_string(a.size()) +
         " vs stg " + std::to_string(b.size());
}

}  // namespace

FusionReport check_fusion(const Term& t, std::size_t fuel) {
  FusionReport rep;
  RunResult<EAConfig> ea = ea_run(t, fuel);
  RunResult<STGConfig> stg = stg_run(t, fuel);
  rep.ea_steps = ea.outcome.steps;
  rep.stg_steps = stg.outcome.steps;
  rep.ran_to_halt = ea.outcome.halted() && stg.outcome.halted();
  for (const TraceEntry<STGConfig>& e : stg.trace.entries) {
    rep.stg_rules.emplace_back(e.rule);
  }

  const auto& entries = ea.trace.entries;
  const std::size_t n = entries.size();
  const bool ea_halted = ea.outcome.halted();
  auto rule = [&](std::size_t j) -> std::string_view { return entries[j].rule; };
  auto before = [&](std::size_t j) -> const EAConfig& {
    return j == 0 ? ea.trace.initial : entries[j - 1].after;
  };

  bool pattern_ok = true;
  std::size_t i = 0;
  while (i < n) {
    const std::string_view r = rule(i);
    if (r == "E-APP") {
      const EvalConfig* e = std::get_if<EvalConfig>(&before(i));
      if (e == nullptr || !e->control.is_app()) {
        pattern_ok = false;
        break;
      }
      if (!e->control.as_app().head.is_fun()) {
        rep.compressed.emplace_back("STG-TCALL");
        ++i;
        continue;
      }
      // Fun-headed push: the path is E-APP, E-FUN, A-LT, then whichever rule
      // resolves the accumulated frame.
      if (i + 3 > n) break;  // cut mid-path by fuel; drop the partial path
      if (rule(i + 1) != "E-FUN" || rule(i + 2) != "A-LT") {
        pattern_ok = false;
        break;
      }
      const std::size_t j = i + 3;
      if (j == n && !ea_halted) break;  // resolution unknown; drop
      if (j < n && rule(j) == "A-EQ") {
        rep.compressed.emplace_back("STG-EXACT");
        i = j + 1;
        continue;
      }
      if (j < n && rule(j) == "A-GT") {
        rep.compressed.emplace_back("STG-CALLK");
        i = j + 1;
        continue;
      }
      rep.compressed.emplace_back("STG-PAP2");
      i = j;
      continue;
    }
    if (r == "E-FUN") {
      // The control became an abstraction without a fresh push: a returned
      // function meeting a pending frame (or halting as a value).
      const std::size_t j = i + 1;
      if (j == n) break;  // value halt: STG halts with no step at all
      if (rule(j) != "A-LT") {
        pattern_ok = false;
        break;
      }
      const std::size_t k = j + 1;
      if (k == n && !ea_halted) break;
      rep.compressed.emplace_back("STG-RETFUN");
      if (k < n && rule(k) == "A-EQ") {
        rep.compressed.emplace_back("STG-EXACT");
        i = k + 1;
        continue;
      }
      if (k < n && rule(k) == "A-GT") {
        rep.compressed.emplace_back("STG-CALLK");
        i = k + 1;
        continue;
      }
      rep.compressed.emplace_back("STG-PAP2");
      i = k;
      continue;
    }
    if (r == "A-LT") {
      // A pap consuming a further frame.
      const std::size_t j = i + 1;
      if (j == n && !ea_halted) break;
      rep.compressed.emplace_back("STG-PCALL");
      if (j < n && rule(j) == "A-EQ") {
        rep.compressed.emplace_back("STG-EXACT");
        i = j + 1;
        continue;
      }
      if (j < n && rule(j) == "A-GT") {
        rep.compressed.emplace_back("STG-CALLK");
        i = j + 1;
        continue;
      }
      rep.compressed.emplace_back("STG-PAP2");
      i = j;
      continue;
    }
    pattern_ok = false;  // A-EQ / A-GT never start a path
    break;
  }

  if (!pattern_ok) {
    rep.ok = false;
    rep.detail = "unexpected rule pattern in the eval/apply trace at step " +
                 std::to_string(i);
    return rep;
  }
  if (rep.ran_to_halt) {
    rep.ok = rep.compressed == rep.stg_rules;
    if (!rep.ok) {
      rep.detail = stream_difference(
          rep.compressed, rep.stg_rules,
          std::min(rep.compressed.size(), rep.stg_rules.size()));
    }
    return rep;
  }
  const std::size_t limit = std::min(rep.compressed.size(), rep.stg_rules.size());
  rep.ok = std::equal(rep.compressed.begin(),
                      rep.compressed.begin() + static_cast<std::ptrdiff_t>(limit),
                      rep.stg_rules.begin());
  if (!rep.ok) rep.detail = stream_difference(rep.compressed, rep.stg_rules, limit);
  return rep;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

void collect_names(const Term& t, std::set<Identifier>& out) {
  t.visit(Overloaded{[&](const VarNode& v) { out.insert(v.id); },
                     [&](const AppNode& a) {
                       collect_names(a.head, out);
                       for (const Term& arg : a.args) collect_names(arg, out);
                     },
                     [&](const FunNode& f) {
                       out.insert(f.params.begin(), f.params.end());
                       collect_names(f.body, out);
                     }});
}

Term fresh_var_for(const Term& t) {
  std::set<Identifier> names;
  collect_names(t, names);
  std::string name = "h";
  for (unsigned k = 1; names.contains(Identifier{name}); ++k) {
    name = "h" + std::to_string(k);
  }
  return Term::var(name);
}

// Every term obtained from t by replacing exactly one position with one of
// that position's immediate sub-terms, or with the fresh variable.
void all_candidates(const Term& t, const Term& fresh, std::vector<Term>& out) {
  t.visit(Overloaded{
      [&](const VarNode&) {},
      [&](const AppNode& a) {
        out.push_back(a.head);
        for (const Term& arg : a.args) out.push_back(arg);
        out.push_back(fresh);
        std::vector<Term> sub;
        all_candidates(a.head, fresh, sub);
        for (Term& v : sub) out.push_back(Term::app(std::move(v), a.args));
        for (std::size_t k = 0; k < a.args.size(); ++k) {
          sub.clear();
          all_candidates(a.args[k], fresh, sub);
          for (Term& v : sub) {
            std::vector<Term> args2 = a.args;
            args2[k] = std::move(v);
            out.push_back(Term::app(a.head, std::move(args2)));
          }
        }
      },
      [&](const FunNode& f) {
        out.push_back(f.body);
        out.push_back(fresh);
        std::vector<Term> sub;
        all_candidates(f.body, fresh, sub);
        for (Term& v : sub) out.push_back(Term::fun(f.params, std::move(v)));
      }});
}

}  // namespace

Term shrink_mismatch(Term t, std::size_t fuel) {
  for (int round = 0; round < 200; ++round) {
    std::vector<Term> candidates;
    all_candidates(t, fresh_var_for(t), candidates);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Term& a, const Term& b) {
                       return term_size(a) < term_size(b);
                     });
    const std::size_t current = term_size(t);
    bool advanced = false;
    for (const Term& c : candidates) {
      if (term_size(c) >= current) continue;
      if (differential(c, fuel).verdict == Verdict::Mismatch) {
        t = c;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return t;
}

FuzzSummary fuzz(std::uint64_t count, std::size_t max_size, std::size_t fuel,
                 std::uint64_t seed, bool closed) {
  if (count == 0) throw std::invalid_argument("fuzz: count must be at least 1");
  FuzzSummary sum;
  sum.count = count;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t term_seed = mix_seed(seed, i);
    Term t = gen_term(term_seed, max_size, closed);
    DiffReport rep = differential(t, fuel);
    switch (rep.verdict) {
      case Verdict::Agree:
        ++sum.agree;
        break;
      case Verdict::AllFuelExhausted:
        ++sum.all_fuel_exhausted;
        break;
      case Verdict::Mismatch: {
        ++sum.mismatch;
        if (rep.oracle_conclusive && !rep.oracle_ok) ++sum.oracle_violations;
        if (sum.witnesses.size() < 16) {
          Term small = shrink_mismatch(t, fuel);
          sum.witnesses.push_back(
              {i, term_seed, print(t), print(small), rep.detail});
        }
        break;
      }
    }
    if (rep.chain == ChainVerdict::DocumentedException) ++sum.chain_exceptions;
    if (rep.chain == ChainVerdict::FuelSkew) ++sum.fuel_skew;
  }
  return sum;
}

}  // namespace lammult
