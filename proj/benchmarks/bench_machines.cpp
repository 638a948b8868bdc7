#include <benchmark/benchmark.h>

#include "lammult/derivation.hpp"
#include "lammult/harness.hpp"

using namespace lammult;

namespace {

const char* const kAnchor = "(((\\x1 x2 x3 x4. x1) a b) c d)";
const char* const kOmega = "((\\x. (x x)) (\\x. (x x)))";

// ((plus two two) f x) with grouped arities; fully reduces to (f (f (f (f x)))).
const char* const kChurch =
    "(((\\m n. (\\f x. ((m f) ((n f) x)))) (\\f x. (f (f x))) (\\f x. (f (f x)))) f x)";

Term parsed(const char* text) { return parse(text); }

void BM_pe_anchor(benchmark::State& state) {
  Term t = parsed(kAnchor);
  for (auto _ : state) benchmark::DoNotOptimize(pe_run(t, 100).outcome.steps);
}
BENCHMARK(BM_pe_anchor);

void BM_ea_anchor(benchmark::State& state) {
  Term t = parsed(kAnchor);
  for (auto _ : state) benchmark::DoNotOptimize(ea_run(t, 100).outcome.steps);
}
BENCHMARK(BM_ea_anchor);

void BM_stg_anchor(benchmark::State& state) {
  Term t = parsed(kAnchor);
  for (auto _ : state) benchmark::DoNotOptimize(stg_run(t, 100).outcome.steps);
}
BENCHMARK(BM_stg_anchor);

void BM_pe_church(benchmark::State& state) {
  Term t = parsed(kChurch);
  for (auto _ : state) benchmark::DoNotOptimize(pe_run(t, 1000).outcome.steps);
}
BENCHMARK(BM_pe_church);

void BM_ea_church(benchmark::State& state) {
  Term t = parsed(kChurch);
  for (auto _ : state) benchmark::DoNotOptimize(ea_run(t, 1000).outcome.steps);
}
BENCHMARK(BM_ea_church);

void BM_stg_church(benchmark::State& state) {
  Term t = parsed(kChurch);
  for (auto _ : state) benchmark::DoNotOptimize(stg_run(t, 1000).outcome.steps);
}
BENCHMARK(BM_stg_church);

void BM_pe_omega_bounded(benchmark::State& state) {
  Term t = parsed(kOmega);
  for (auto _ : state) benchmark::DoNotOptimize(pe_run(t, 200).outcome.steps);
}
BENCHMARK(BM_pe_omega_bounded);

void BM_stage0_church(benchmark::State& state) {
  Term t = parsed(kChurch);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stage0_eval(t, {}, 1000).steps_taken);
  }
}
BENCHMARK(BM_stage0_church);

void BM_stage5_church(benchmark::State& state) {
  Term t = parsed(kChurch);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stage5_eval_final(t, {}, 1000).steps_taken);
  }
}
BENCHMARK(BM_stage5_church);

void BM_flat_pop(benchmark::State& state) {
  Term a = Term::var("a");
  FlatStack s;
  for (int i = 0; i < 64; ++i) s = s.push_front(a);
  for (auto _ : state) benchmark::DoNotOptimize(is_found(flat_pop(48, s)));
}
BENCHMARK(BM_flat_pop);

void BM_seg_pop(benchmark::State& state) {
  Term a = Term::var("a");
  SegStack s;
  for (int i = 0; i < 16; ++i) s = seg_push({a, a, a, a}, s);
  for (auto _ : state) benchmark::DoNotOptimize(is_found(seg_pop(48, s)));
}
BENCHMARK(BM_seg_pop);

void BM_differential_generated(benchmark::State& state) {
  Term t = gen_term(7, 50, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(differential(t, 1000).verdict);
  }
}
BENCHMARK(BM_differential_generated);

}  // namespace

BENCHMARK_MAIN();
