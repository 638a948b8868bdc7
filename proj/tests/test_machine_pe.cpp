#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "lammult/machine_pe.hpp"

using namespace lammult;

namespace {

Term V(const char* n) { return Term::var(std::string(n)); }

FlatStack of(const std::vector<Term>& xs) { return flat_push(xs, {}); }

bool stack_equal(const FlatStack& a, const FlatStack& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (!(*ia == *ib)) return false;
  }
  return ia == a.end() && ib == b.end();
}

bool config_equal(const PEConfig& a, const PEConfig& b) {
  return a.control == b.control && stack_equal(a.stack, b.stack);
}

std::vector<std::string> rules(const Trace<PEConfig>& tr) {
  std::vector<std::string> out;
  for (const TraceEntry<PEConfig>& e : tr.entries) out.emplace_back(e.rule);
  return out;
}

Stepped<PEConfig> expect_step(StepOutcome<PEConfig> o) {
  REQUIRE(std::holds_alternative<Stepped<PEConfig>>(o));
  return std::get<Stepped<PEConfig>>(std::move(o));
}

Halted<PEConfig> expect_halt(StepOutcome<PEConfig> o) {
  REQUIRE(std::holds_alternative<Halted<PEConfig>>(o));
  return std::get<Halted<PEConfig>>(std::move(o));
}

}  // namespace

TEST_CASE("K-APP pushes the arguments with the first one topmost") {
  PEConfig c{parse("(f a b)"), {}};
  const Stepped<PEConfig>& s = expect_step(pe_step(c));
  CHECK(std::string(s.rule) == "K-APP");
  CHECK(s.next.control == V("f"));
  CHECK(stack_equal(s.next.stack, of({V("a"), V("b")})));

  // Pushing on top of an existing stack keeps the old entries below.
  PEConfig c2{parse("(f a b)"), of({V("z")})};
  const Stepped<PEConfig>& s2 = expect_step(pe_step(c2));
  CHECK(stack_equal(s2.next.stack, of({V("a"), V("b"), V("z")})));
}

TEST_CASE("K-FUN substitutes simultaneously and consumes exactly n entries") {
  PEConfig c{parse("(\\x y. x)"), of({V("a"), V("b")})};
  const Stepped<PEConfig>& s = expect_step(pe_step(c));
  CHECK(std::string(s.rule) == "K-FUN");
  CHECK(s.next.control == V("a"));
  CHECK(s.next.stack.empty());

  PEConfig c2{parse("(\\x y z. z)"), of({V("a"), V("b"), V("c"), V("d")})};
  const Stepped<PEConfig>& s2 = expect_step(pe_step(c2));
  CHECK(s2.next.control == V("c"));
  CHECK(stack_equal(s2.next.stack, of({V("d")})));

  // The substitution really is simultaneous: [a/x, x/y] in (x y).
  PEConfig c3{parse("(\\x y. (x y))"), of({V("a"), V("x")})};
  const Stepped<PEConfig>& s3 = expect_step(pe_step(c3));
  CHECK(s3.next.control == parse("(a x)"));
}

TEST_CASE("halting leaves the configuration intact") {
  FlatStack s = of({V("a")});
  const Halted<PEConfig>& under = expect_halt(pe_step({parse("(\\x y. x)"), s}));
  CHECK(under.reason == HaltReason::TooFewArguments);
  CHECK(under.final_config.stack.same_spine(s));
  CHECK(under.final_config.control == parse("(\\x y. x)"));

  const Halted<PEConfig>& free = expect_halt(pe_step({V("x"), s}));
  CHECK(free.reason == HaltReason::FreeVariable);
  CHECK(free.final_config.stack.same_spine(s));
}

TEST_CASE("the identity abstraction is already a value") {
  RunResult<PEConfig> r = pe_run(parse("(\\x. x)"), 10);
  REQUIRE(r.outcome.halted());
  CHECK(r.outcome.steps == 0);
  CHECK(r.outcome.reason == HaltReason::TooFewArguments);
  CHECK(r.outcome.final_config->control.is_fun());
  CHECK(r.outcome.final_config->stack.empty());
  CHECK(r.trace.entries.empty());
}

TEST_CASE("the arity-mismatch showcase halts in three steps") {
  Term anchor = parse("(((\\x1 x2 x3 x4. x1) a b) c d)");
  RunResult<PEConfig> r = pe_run(anchor, 100);
  REQUIRE(r.outcome.halted());
  CHECK(r.outcome.steps == 3);
  CHECK(r.outcome.reason == HaltReason::FreeVariable);
  CHECK(rules(r.trace) == std::vector<std::string>{"K-APP", "K-APP", "K-FUN"});
  CHECK(r.outcome.final_config->control == V("a"));
  CHECK(r.outcome.final_config->stack.empty());
}

TEST_CASE("omega exhausts its fuel in a two-rule cycle") {
  Term omega = parse("((\\x. (x x)) (\\x. (x x)))");
  RunResult<PEConfig> r = pe_run(omega, 100);
  CHECK_FALSE(r.outcome.halted());
  CHECK(r.outcome.steps == 100);
  CHECK(r.trace.entries.size() == 100);
  for (std::size_t i = 0; i < r.trace.entries.size(); ++i) {
    CHECK(std::string(r.trace.entries[i].rule) == (i % 2 == 0 ? "K-APP" : "K-FUN"));
  }
  // After one full cycle the configuration recurs exactly.
  CHECK(r.trace.entries[1].after.control == omega);
  CHECK(r.trace.entries[1].after.stack.empty());
}

TEST_CASE("detecting a halt costs no fuel") {
  Term anchor = parse("(((\\x1 x2 x3 x4. x1) a b) c d)");
  RunResult<PEConfig> tight = pe_run(anchor, 3);
  CHECK(tight.outcome.halted());
  CHECK(tight.outcome.steps == 3);

  RunResult<PEConfig> starved = pe_run(anchor, 2);
  CHECK_FALSE(starved.outcome.halted());
  CHECK(starved.outcome.steps == 2);
}

TEST_CASE("fuel must be positive") {
  CHECK_THROWS_WITH_AS(pe_run(V("x"), 0), "fuel must be at least 1",
                       std::invalid_argument);
}

TEST_CASE("K-APP dismantles the application it consumes") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    Term t = gen_term(rng(), 20, false);
    if (!t.is_app()) continue;
    FlatStack s = of({V("p"), V("q")});
    const Stepped<PEConfig>& step = expect_step(pe_step({t, s}));
    CHECK(std::string(step.rule) == "K-APP");
    const AppNode& a = t.as_app();
    CHECK(step.next.control == a.head);
    CHECK(stack_equal(step.next.stack, flat_push(a.args, s)));
  }
}

TEST_CASE("traces replay and step counts match") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    Term t = gen_term(rng(), 25, i % 2 == 0);
    RunResult<PEConfig> r = pe_run(t, 200);
    CHECK(r.outcome.steps == r.trace.entries.size());

    PEConfig current = r.trace.initial;
    CHECK(config_equal(current, PEConfig{t, {}}));
    for (const TraceEntry<PEConfig>& e : r.trace.entries) {
      const Stepped<PEConfig>& s = expect_step(pe_step(current));
      CHECK(std::string(s.rule) == std::string(e.rule));
      CHECK(config_equal(s.next, e.after));
      current = e.after;
    }
    if (r.outcome.halted()) {
      const Halted<PEConfig>& h = expect_halt(pe_step(current));
      CHECK(h.reason == *r.outcome.reason);
      CHECK(config_equal(h.final_config, *r.outcome.final_config));
    } else {
      CHECK(r.trace.entries.size() == 200);
    }
  }
}
