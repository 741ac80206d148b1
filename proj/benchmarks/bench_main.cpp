#include <benchmark/benchmark.h>

#include "singerlab/ff.hpp"
#include "singerlab/groupgen.hpp"
#include "singerlab/matrix.hpp"
#include "singerlab/poly.hpp"
#include "singerlab/reflect.hpp"
#include "singerlab/verify.hpp"

using namespace singerlab;

static void BM_FieldMul(benchmark::State& state) {
  const FieldRef f = make_field(2, static_cast<unsigned>(state.range(0)));
  Value acc = 1;
  const Value g = f->primitive_element();
  for (auto _ : state) {
    acc = f->mul(acc, g);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

static void BM_CharPoly(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const FieldRef f = make_field(3, 1);
  const Matrix c = companion(find_primitive_poly(n, f));
  const Matrix g = c * c + Matrix::identity(f, n);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPoly)->DenseRange(2, 8, 2);

static void BM_ClosureGL2(benchmark::State& state) {
  const FieldRef f = make_field(static_cast<std::uint32_t>(state.range(0)), 1);
  const Matrix c = companion(find_primitive_poly(2, f));
  const Matrix t = enumerate_reflections(2, f).front();
  for (auto _ : state) benchmark::DoNotOptimize(group_closure({c, t}).order);
}
BENCHMARK(BM_ClosureGL2)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

static void BM_ClosureGL3F3(benchmark::State& state) {
  const FieldRef f = make_field(3, 1);
  const Matrix c = companion(find_primitive_poly(3, f));
  const Matrix t = enumerate_reflections(3, f).back();
  for (auto _ : state) benchmark::DoNotOptimize(group_closure({c, t}).order);
}
BENCHMARK(BM_ClosureGL3F3)->Unit(benchmark::kMillisecond);

static void BM_EnumerateFactorizations(benchmark::State& state) {
  const FieldRef f = make_field(static_cast<std::uint32_t>(state.range(0)), 1);
  const Matrix g = companion(find_primitive_poly(3, f));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_factorizations(g).size());
}
BENCHMARK(BM_EnumerateFactorizations)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_VerifyMain2(benchmark::State& state) {
  const FieldRef f = make_field(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_main2(2, f).checked);
}
BENCHMARK(BM_VerifyMain2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
