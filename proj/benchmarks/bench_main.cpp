#include "clasp/aarhus.hpp"
#include "clasp/diagrams.hpp"
#include "clasp/magnus.hpp"

#include <benchmark/benchmark.h>

using namespace clasp;

namespace {

ColoredTree beta5() {
  return tree_from_branches(parse_bracket("[1,2]"), parse_bracket("[1,3]"), parse_bracket("[2,3]"), 3);
}

ColoredTree h7() {
  return tree_from_branches(parse_bracket("[1,2]"), parse_bracket("[1,3]"), parse_bracket("[[2,3],[1,2]]"), 3);
}

void BM_Canonicalize(benchmark::State& state) {
  const ColoredTree t = tree_from_body(1, parse_bracket("[[[1,2],[3,[1,2]]],[[2,3],[3,1]]]"), 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(t));
}
BENCHMARK(BM_Canonicalize);

void BM_IsZero(benchmark::State& state) {
  TreeVector v(3);
  for (const auto& t : enumerate_trees(static_cast<int>(state.range(0)), 3)) v.add(t, Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(is_zero(v));
}
BENCHMARK(BM_IsZero)->DenseRange(3, 5);

void BM_Dim(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dim(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_Dim)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TreeExpansion(benchmark::State& state) {
  const Word w = parse_word("[[x1,x2],[x1,x3]]");
  for (auto _ : state) benchmark::DoNotOptimize(tree_expansion(w, static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_TreeExpansion)->DenseRange(4, 6);

void BM_Glue(benchmark::State& state) {
  const SurgeryPresentation s = compile_surgery(build_clasper(validate_pattern(beta5())));
  const LeggedSeries series = arm_filter(s, leading_series(s, 5));
  for (auto _ : state) benchmark::DoNotOptimize(glue(series));
}
BENCHMARK(BM_Glue)->Unit(benchmark::kMicrosecond);

void BM_BruteGlue(benchmark::State& state) {
  const SurgeryPresentation s = compile_surgery(build_clasper(validate_pattern(beta5())));
  const LeggedSeries series = arm_filter(s, leading_series(s, 5));
  for (auto _ : state) benchmark::DoNotOptimize(brute_glue(series));
}
BENCHMARK(BM_BruteGlue)->Unit(benchmark::kMicrosecond);

void BM_ZminBeta5(benchmark::State& state) {
  const ColoredTree t = beta5();
  for (auto _ : state) benchmark::DoNotOptimize(zmin(t, 0));
}
BENCHMARK(BM_ZminBeta5)->Unit(benchmark::kMillisecond);

void BM_ZminOnePattern(benchmark::State& state) {
  const ColoredTree t = h7();
  for (auto _ : state) benchmark::DoNotOptimize(zmin(t, 1));
}
BENCHMARK(BM_ZminOnePattern)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
