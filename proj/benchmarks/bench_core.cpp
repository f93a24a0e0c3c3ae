#include <benchmark/benchmark.h>

#include "shiftlab/automorphisms.hpp"
#include "shiftlab/block_code.hpp"
#include "shiftlab/language.hpp"
#include "shiftlab/rectangle.hpp"
#include "shiftlab/spec.hpp"

using namespace shiftlab;

namespace {

void BM_SftEnumeration(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Language golden(make_sft("01", {"11"}));
    benchmark::DoNotOptimize(golden.words(n).words.size());
  }
}
BENCHMARK(BM_SftEnumeration)->Arg(12)->Arg(16)->Arg(20);

void BM_SubstitutionTable(benchmark::State& state) {
  for (auto _ : state) {
    Language fib(make_substitution({{'0', "01"}, {'1', "0"}}, '0'));
    benchmark::DoNotOptimize(fib.complexity_table(40).back());
  }
}
BENCHMARK(BM_SubstitutionTable);

void BM_MechanicalTable(benchmark::State& state) {
  for (auto _ : state) {
    Language sturmian(make_mechanical(-1, 5, 2));
    benchmark::DoNotOptimize(sturmian.complexity_table(40).back());
  }
}
BENCHMARK(BM_MechanicalTable);

void BM_AutomorphismSearchGolden(benchmark::State& state) {
  for (auto _ : state) {
    Language golden(make_sft("01", {"11"}));
    auto found = enumerate_automorphisms(golden, 1, 3, 8);
    benchmark::DoNotOptimize(found.certificates.size());
  }
}
BENCHMARK(BM_AutomorphismSearchGolden);

void BM_AutomorphismSearchFib(benchmark::State& state) {
  for (auto _ : state) {
    Language fib(make_substitution({{'0', "01"}, {'1', "0"}}, '0'));
    auto found = enumerate_automorphisms(fib, 2, 4, 24);
    benchmark::DoNotOptimize(found.certificates.size());
  }
}
BENCHMARK(BM_AutomorphismSearchFib);

// shift codes collapse a window count to one lookup of the 1D table
void BM_RectShiftShortcut(benchmark::State& state) {
  Language golden(make_sft("01", {"11"}));
  SlidingBlockCode sigma = shift_power_code(golden, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rect_complexity(golden, sigma, 16, 16));
}
BENCHMARK(BM_RectShiftShortcut);

// non-shift codes walk every seed and deduplicate the built windows
void BM_RectSeedEnumeration(benchmark::State& state) {
  Language full(make_full_shift("01"));
  SlidingBlockCode flip(full.spec(), 0, {{"0", '1'}, {"1", '0'}});
  for (auto _ : state)
    benchmark::DoNotOptimize(rect_complexity(full, flip, 10, 5));
}
BENCHMARK(BM_RectSeedEnumeration);

void BM_OrderModShift(benchmark::State& state) {
  Language golden(make_sft("01", {"11"}));
  AutomorphismCertificate cert{shift_power_code(golden, 1), shift_power_code(golden, -1), 8,
                               true};
  for (auto _ : state) {
    auto r = order_mod_shift(golden, cert, 8, 24);
    benchmark::DoNotOptimize(r.power);
  }
}
BENCHMARK(BM_OrderModShift);

}  // namespace

BENCHMARK_MAIN();
