#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "lammult/harness.hpp"
#include "lammult/machine_ea.hpp"
#include "lammult/machine_pe.hpp"

using namespace lammult;

namespace {

Term V(const char* n) { return Term::var(std::string(n)); }
Identifier I(const char* n) { return Identifier{std::string(n)}; }

SegStack seg_of(const std::vector<Frame>& frames) {
  SegStack s;
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) s = s.push_front(*it);
  return s;
}

bool terms_equal(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

bool seg_equal(const SegStack& a, const SegStack& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (!terms_equal(*ia, *ib)) return false;
  }
  return ia == a.end() && ib == b.end();
}

bool config_equal(const EAConfig& a, const EAConfig& b) {
  if (a.index() != b.index()) return false;
  if (const EvalConfig* ea = std::get_if<EvalConfig>(&a)) {
    const EvalConfig& eb = std::get<EvalConfig>(b);
    return ea->control == eb.control && seg_equal(ea->stack, eb.stack);
  }
  const PapConfig& pa = std::get<PapConfig>(a);
  const PapConfig& pb = std::get<PapConfig>(b);
  return terms_equal(pa.acc, pb.acc) && pa.arity == pb.arity &&
         pa.body == pb.body && pa.params == pb.params &&
         seg_equal(pa.stack, pb.stack);
}

std::vector<std::string> rules(const Trace<EAConfig>& tr) {
  std::vector<std::string> out;
  for (const TraceEntry<EAConfig>& e : tr.entries) out.emplace_back(e.rule);
  return out;
}

Stepped<EAConfig> expect_step(StepOutcome<EAConfig> o) {
  REQUIRE(std::holds_alternative<Stepped<EAConfig>>(o));
  return std::get<Stepped<EAConfig>>(std::move(o));
}

Halted<EAConfig> expect_halt(StepOutcome<EAConfig> o) {
  REQUIRE(std::holds_alternative<Halted<EAConfig>>(o));
  return std::get<Halted<EAConfig>>(std::move(o));
}

std::size_t frame_count(const SegStack& s) { return s.size(); }

std::size_t config_frames(const EAConfig& c) {
  if (const EvalConfig* e = std::get_if<EvalConfig>(&c)) return frame_count(e->stack);
  return frame_count(std::get<PapConfig>(c).stack);
}

bool no_empty_frame(const EAConfig& c) {
  const SegStack& s = std::holds_alternative<EvalConfig>(c)
                          ? std::get<EvalConfig>(c).stack
                          : std::get<PapConfig>(c).stack;
  return std::all_of(s.begin(), s.end(),
                     [](const Frame& f) { return !f.empty(); });
}

}  // namespace

TEST_CASE("E-APP pushes one frame") {
  EAConfig c{EvalConfig{parse("(f a)"), {}}};
  const Stepped<EAConfig>& s = expect_step(ea_step(c));
  CHECK(std::string(s.rule) == "E-APP");
  const EvalConfig& next = std::get<EvalConfig>(s.next);
  CHECK(next.control == V("f"));
  CHECK(seg_equal(next.stack, seg_of({Frame{V("a")}})));
}

TEST_CASE("E-FUN fires even on an empty stack") {
  EAConfig c{EvalConfig{parse("(\\x. x)"), {}}};
  const Stepped<EAConfig>& s = expect_step(ea_step(c));
  CHECK(std::string(s.rule) == "E-FUN");
  const PapConfig& p = std::get<PapConfig>(s.next);
  CHECK(p.acc.empty());
  CHECK(p.arity == 1);
  CHECK(p.body == V("x"));
  CHECK(p.params == std::vector<Identifier>{I("x")});
  CHECK(p.stack.empty());
}

TEST_CASE("A-EQ substitutes the accumulated arguments") {
  SegStack rest = seg_of({Frame{V("z")}});
  EAConfig c{PapConfig{{V("a"), V("b")}, 2, V("x1"), {I("x1"), I("x2")}, rest}};
  const Stepped<EAConfig>& s = expect_step(ea_step(c));
  CHECK(std::string(s.rule) == "A-EQ");
  const EvalConfig& next = std::get<EvalConfig>(s.next);
  CHECK(next.control == V("a"));
  CHECK(next.stack.same_spine(rest));
}

TEST_CASE("A-GT pushes the surplus as a fresh frame") {
  EAConfig c{PapConfig{{V("a"), V("b"), V("c")},
                       2,
                       parse("(x y)"),
                       {I("x"), I("y")},
                       {}}};
  const Stepped<EAConfig>& s = expect_step(ea_step(c));
  CHECK(std::string(s.rule) == "A-GT");
  const EvalConfig& next = std::get<EvalConfig>(s.next);
  CHECK(next.control == parse("(a b)"));
  CHECK(seg_equal(next.stack, seg_of({Frame{V("c")}})));
}

TEST_CASE("A-LT absorbs exactly one frame, then A-GT splits") {
  EAConfig c{PapConfig{{V("a")},
                       2,
                       parse("(x y)"),
                       {I("x"), I("y")},
                       seg_of({Frame{V("b"), V("c")}})}};
  const Stepped<EAConfig>& lt = expect_step(ea_step(c));
  CHECK(std::string(lt.rule) == "A-LT");
  const PapConfig& p = std::get<PapConfig>(lt.next);
  CHECK(terms_equal(p.acc, {V("a"), V("b"), V("c")}));
  CHECK(p.arity == 2);
  CHECK(p.stack.empty());

  const Stepped<EAConfig>& gt = expect_step(ea_step(lt.next));
  CHECK(std::string(gt.rule) == "A-GT");
  const EvalConfig& next = std::get<EvalConfig>(gt.next);
  CHECK(next.control == parse("(a b)"));
  CHECK(seg_equal(next.stack, seg_of({Frame{V("c")}})));
}

TEST_CASE("a starved pap halts and keeps its accumulator") {
  EAConfig c{PapConfig{{V("a")}, 2, V("x"), {I("x"), I("y")}, {}}};
  const Halted<EAConfig>& h = expect_halt(ea_step(c));
  CHECK(h.reason == HaltReason::TooFewArguments);
  const PapConfig& p = std::get<PapConfig>(h.final_config);
  CHECK(terms_equal(p.acc, {V("a")}));
  CHECK(p.arity == 2);
}

TEST_CASE("a free variable halts with the stack intact") {
  SegStack s = seg_of({Frame{V("a")}});
  const Halted<EAConfig>& h = expect_halt(ea_step(EAConfig{EvalConfig{V("x"), s}}));
  CHECK(h.reason == HaltReason::FreeVariable);
  CHECK(std::get<EvalConfig>(h.final_config).stack.same_spine(s));
}

TEST_CASE("the identity abstraction needs one transition to halt") {
  RunResult<EAConfig> r = ea_run(parse("(\\x. x)"), 10);
  REQUIRE(r.outcome.halted());
  CHECK(r.outcome.steps == 1);
  CHECK(rules(r.trace) == std::vector<std::string>{"E-FUN"});
  CHECK(r.outcome.reason == HaltReason::TooFewArguments);
  const PapConfig& p = std::get<PapConfig>(*r.outcome.final_config);
  CHECK(p.acc.empty());
  CHECK(p.arity == 1);
}

TEST_CASE("the arity-mismatch showcase halts in six steps") {
  Term anchor = parse("(((\\x1 x2 x3 x4. x1) a b) c d)");
  RunResult<EAConfig> r = ea_run(anchor, 100);
  REQUIRE(r.outcome.halted());
  CHECK(r.outcome.steps == 6);
  CHECK(rules(r.trace) == std::vector<std::string>{"E-APP", "E-APP", "E-FUN",
                                                   "A-LT", "A-LT", "A-EQ"});
  CHECK(r.outcome.reason == HaltReason::FreeVariable);
  const EvalConfig& fin = std::get<EvalConfig>(*r.outcome.final_config);
  CHECK(fin.control == V("a"));
  CHECK(fin.stack.empty());

  // One step of fuel less and the run is cut short.
  CHECK(ea_run(anchor, 6).outcome.halted());
  CHECK_FALSE(ea_run(anchor, 5).outcome.halted());
}

TEST_CASE("omega cycles through four rules") {
  Term omega = parse("((\\x. (x x)) (\\x. (x x)))");
  RunResult<EAConfig> r = ea_run(omega, 100);
  CHECK_FALSE(r.outcome.halted());
  CHECK(r.outcome.steps == 100);
  const char* cycle[4] = {"E-APP", "E-FUN", "A-LT", "A-EQ"};
  for (std::size_t i = 0; i < r.trace.entries.size(); ++i) {
    CHECK(std::string(r.trace.entries[i].rule) == cycle[i % 4]);
  }
  const EvalConfig& recur = std::get<EvalConfig>(r.trace.entries[3].after);
  CHECK(recur.control == omega);
  CHECK(recur.stack.empty());
}

TEST_CASE("frame conservation along generated runs") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    Term t = gen_term(rng(), 25, i % 2 == 0);
    RunResult<EAConfig> r = ea_run(t, 100);
    const EAConfig* prev = &r.trace.initial;
    for (const TraceEntry<EAConfig>& e : r.trace.entries) {
      const std::string rule = e.rule;
      const std::ptrdiff_t delta =
          static_cast<std::ptrdiff_t>(config_frames(e.after)) -
          static_cast<std::ptrdiff_t>(config_frames(*prev));
      if (rule == "E-APP" || rule == "A-GT") CHECK(delta == 1);
      if (rule == "A-LT") CHECK(delta == -1);
      if (rule == "A-EQ" || rule == "E-FUN") CHECK(delta == 0);
      CHECK(no_empty_frame(e.after));
      prev = &e.after;
    }
  }
}

TEST_CASE("pap invariants along generated runs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Term t = gen_term(rng(), 25, i % 2 == 0);
    RunResult<EAConfig> r = ea_run(t, 100);

    // Widest frame ever seen on any stack of the run.
    std::size_t widest = 0;
    auto scan = [&](const EAConfig& c) {
      const SegStack& s = std::holds_alternative<EvalConfig>(c)
                              ? std::get<EvalConfig>(c).stack
                              : std::get<PapConfig>(c).stack;
      for (const Frame& f : s) widest = std::max(widest, f.size());
    };
    scan(r.trace.initial);
    for (const TraceEntry<EAConfig>& e : r.trace.entries) scan(e.after);

    auto audit = [&](const EAConfig& c) {
      if (const PapConfig* p = std::get_if<PapConfig>(&c)) {
        CHECK(p->arity == p->params.size());
        CHECK(p->acc.size() < p->arity + std::max<std::size_t>(widest, 1));
      }
    };
    audit(r.trace.initial);
    for (const TraceEntry<EAConfig>& e : r.trace.entries) audit(e.after);
  }
}

TEST_CASE("the eval/apply machine simulates the push/enter machine") {
  std::mt19937_64 rng(29);
  int halted_runs = 0;
  for (int i = 0; i < 300; ++i) {
    Term t = gen_term(rng(), 30, i % 2 == 0);
    const std::size_t fuel = 150;
    RunResult<PEConfig> pe = pe_run(t, fuel);
    if (!pe.outcome.halted()) continue;

    RunResult<EAConfig> ea = ea_run(t, 4 * fuel + 4);
    REQUIRE(ea.outcome.halted());
    CHECK(spine_alpha_eq(unload(pe.outcome), unload(ea.outcome)));
    ++halted_runs;
  }
  CHECK(halted_runs > 150);
}

TEST_CASE("traces replay and step counts match") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    Term t = gen_term(rng(), 25, i % 2 == 0);
    RunResult<EAConfig> r = ea_run(t, 200);
    CHECK(r.outcome.steps == r.trace.entries.size());

    EAConfig current = r.trace.initial;
    CHECK(config_equal(current, EAConfig{EvalConfig{t, {}}}));
    for (const TraceEntry<EAConfig>& e : r.trace.entries) {
      const Stepped<EAConfig>& s = expect_step(ea_step(current));
      CHECK(std::string(s.rule) == std::string(e.rule));
      CHECK(config_equal(s.next, e.after));
      current = e.after;
    }
    if (r.outcome.halted()) {
      const Halted<EAConfig>& h = expect_halt(ea_step(current));
      CHECK(h.reason == *r.outcome.reason);
      CHECK(config_equal(h.final_config, *r.outcome.final_config));
    }
  }
}

TEST_CASE("fuel must be positive") {
  CHECK_THROWS_WITH_AS(ea_run(V("x"), 0), "fuel must be at least 1",
                       std::invalid_argument);
}
