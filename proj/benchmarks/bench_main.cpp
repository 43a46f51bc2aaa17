#include <benchmark/benchmark.h>

#include <random>

#include "octlie/engine.hpp"
#include "octlie/f4.hpp"
#include "octlie/structure.hpp"
#include "octlie/verify.hpp"

using namespace octlie;

static void BM_OctonionMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(-9, 9);
  Octonion x(AlgebraKind::compact), y(AlgebraKind::compact);
  for (int i = 0; i < 8; ++i) {
    x[i] = pick(rng);
    y[i] = pick(rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(x, y));
  }
}
BENCHMARK(BM_OctonionMultiply);

static void BM_EngineBracketPair(benchmark::State& state) {
  Engine e8(AlgebraId::e8, AlgebraKind::compact, AlgebraKind::compact);
  int i = 0, j = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e8.bracket_basis(i, j));
    j = (j + 7) % 248;
    if (j <= i) j = i + 1;
  }
}
BENCHMARK(BM_EngineBracketPair);

static void BM_TableBuild(benchmark::State& state) {
  AlgebraId id = static_cast<AlgebraId>(state.range(0));
  std::optional<AlgebraKind> l;
  if (id == AlgebraId::so16 || id == AlgebraId::e8) l = AlgebraKind::compact;
  Engine eng(id, AlgebraKind::compact, l);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eng.build_table());
  }
  state.SetLabel(algebra_name(id));
}
BENCHMARK(BM_TableBuild)
    ->Arg(static_cast<int>(AlgebraId::so9))
    ->Arg(static_cast<int>(AlgebraId::so16))
    ->Arg(static_cast<int>(AlgebraId::f4))
    ->Arg(static_cast<int>(AlgebraId::e8))
    ->Unit(benchmark::kMillisecond);

static void BM_JacobiAdHom(benchmark::State& state) {
  StructureConstants t = Engine(AlgebraId::f4, AlgebraKind::compact, std::nullopt).build_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_jacobi(t).pass);
  }
  state.SetLabel("f4");
}
BENCHMARK(BM_JacobiAdHom)->Unit(benchmark::kMillisecond);

static void BM_KillingInertia(benchmark::State& state) {
  StructureConstants t =
      Engine(AlgebraId::so16, AlgebraKind::compact, AlgebraKind::split).build_table();
  for (auto _ : state) {
    benchmark::DoNotOptimize(killing(t).in.n_plus);
  }
  state.SetLabel("so16 mixed");
}
BENCHMARK(BM_KillingInertia)->Unit(benchmark::kMillisecond);

static void BM_AlbertAction(benchmark::State& state) {
  F4Algebra f4(AlgebraKind::compact);
  std::vector<Rational> g(52);
  g[3] = 1;
  g[40] = Rational(1, 2);
  ActionMat3 act = f4.realize_action(g);
  AlbertElement h = AlbertElement::U(AlgebraKind::compact, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(albert_apply(act, h));
  }
}
BENCHMARK(BM_AlbertAction);

BENCHMARK_MAIN();
