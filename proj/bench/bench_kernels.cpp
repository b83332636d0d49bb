// Serial reference vs OpenMP kernel for each parallel entry point.
// Arg 0 = serial, 1 = parallel.

#include "dioph/approx.hpp"
#include "dioph/heights.hpp"
#include "dioph/io.hpp"
#include "dioph/lattice.hpp"
#include "dioph/wronskian.hpp"

#include <benchmark/benchmark.h>

using namespace dioph;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_Northcott(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(northcott_enumerate(3, Rational(3, 2), mode(st)));
  label(st);
}

void BM_SuccessiveMinima(benchmark::State& st) {
  ConvexBody b{{{3, 1, 0, 2}, {1, -2, 1, 0}, {0, 1, 4, -1}, {2, 0, 1, 3}},
               {Rational(7, 2), Rational(5, 3), 4, Rational(9, 4)}};
  for (auto _ : st) benchmark::DoNotOptimize(successive_minima(b, mode(st)));
  label(st);
}

void BM_Wronskian(benchmark::State& st) {
  std::vector<QPoly> fam;
  for (const char* s : {"1", "x1", "x2", "x1*x2", "x1^2 + x2", "x2^2 - x1*x2"})
    fam.push_back(parse_multi_poly(s, 2));
  for (auto _ : st) benchmark::DoNotOptimize(are_linearly_independent(fam, mode(st)));
  label(st);
}

void BM_ExponentReport(benchmark::State& st) {
  AlgebraicNumber a = AlgebraicNumber::real_root(parse_int_poly("x^3-2"), 0);
  Integer q_max = Integer(1) << 200;
  for (auto _ : st) benchmark::DoNotOptimize(exponent_report(a, q_max, mode(st)));
  label(st);
}

}  // namespace

BENCHMARK(BM_Northcott)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuccessiveMinima)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wronskian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExponentReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
