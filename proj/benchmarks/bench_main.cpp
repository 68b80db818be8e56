#include <benchmark/benchmark.h>

#include "grouplab/char_table.hpp"
#include "grouplab/corpus.hpp"
#include "grouplab/cyclotomic.hpp"
#include "grouplab/group.hpp"
#include "grouplab/theory.hpp"

namespace {

const char* const kSpecs[] = {"symmetric:4", "quaternion:32", "heisenberg:3:1", "extraspecial:2:2:-",
                              "dihedral:64", "heisenberg:5:1", "symmetric:5"};

void BM_ConjugacyClasses(benchmark::State& state) {
  const auto g = grouplab::build_named_group(kSpecs[state.range(0)]);
  state.SetLabel(g.name());
  for (auto _ : state) benchmark::DoNotOptimize(grouplab::conjugacy_classes(g));
}
BENCHMARK(BM_ConjugacyClasses)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

void BM_CharacterTable(benchmark::State& state) {
  const auto g = grouplab::build_named_group(kSpecs[state.range(0)]);
  state.SetLabel(g.name());
  for (auto _ : state) benchmark::DoNotOptimize(grouplab::character_table(g));
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_NormalSubgroups(benchmark::State& state) {
  const auto g = grouplab::build_named_group(kSpecs[state.range(0)]);
  state.SetLabel(g.name());
  for (auto _ : state) benchmark::DoNotOptimize(grouplab::normal_subgroups(g));
}
BENCHMARK(BM_NormalSubgroups)->DenseRange(0, 6)->Unit(benchmark::kMicrosecond);

void BM_TheoremSuite(benchmark::State& state) {
  const auto t = grouplab::character_table(grouplab::build_named_group(kSpecs[state.range(0)]));
  state.SetLabel(t.group().name());
  for (auto _ : state) benchmark::DoNotOptimize(grouplab::theorem_suite(t));
}
BENCHMARK(BM_TheoremSuite)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CyclotomicProduct(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  auto a = grouplab::Cyclotomic::zeta(m, 1) + grouplab::Cyclotomic::zeta(m, 3);
  auto b = grouplab::Cyclotomic::zeta(m, 2) + grouplab::Cyclotomic::embed(grouplab::Rational(1, 2), m);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicProduct)->Arg(8)->Arg(24)->Arg(60)->Arg(105);

}  // namespace
BENCHMARK_MAIN();
