#include <benchmark/benchmark.h>

#include "homnambu/axioms.hpp"
#include "homnambu/catalog.hpp"
#include "homnambu/derivations.hpp"
#include "homnambu/iterated.hpp"
#include "homnambu/prelie3.hpp"

namespace {

using namespace homnambu;

HomSuperAlgebra osp(long lambda) { return catalog_build("osp12", {{"lambda", Scalar(lambda)}}).algebra; }

void BM_HomJacobiOsp(benchmark::State& state) {
  const auto alg = osp(2);
  for (auto _ : state) benchmark::DoNotOptimize(check_hom_jacobi(alg).passed());
}
BENCHMARK(BM_HomJacobiOsp);

void BM_IteratedBracketOsp(benchmark::State& state) {
  const auto alg = osp(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterated_bracket(alg, n).bracket().size());
}
BENCHMARK(BM_IteratedBracketOsp)->DenseRange(3, 5);

void BM_NambuIteratedOsp(benchmark::State& state) {
  const auto it = iterated_bracket(osp(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_nambu_identity(it).passed());
}
BENCHMARK(BM_NambuIteratedOsp)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_SolveDerivationsOsp(benchmark::State& state) {
  const auto alg = osp(2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_derivation_space(alg, 0, kEven).size());
}
BENCHMARK(BM_SolveDerivationsOsp)->Unit(benchmark::kMillisecond);

void BM_PreLieAxiomsZeroProduct(benchmark::State& state) {
  const auto base = osp(1);
  const TriProduct t(NaryBracket(base.space(), 3), base.alpha());
  for (auto _ : state) benchmark::DoNotOptimize(check_3_pre_lie(t).passed());
}
BENCHMARK(BM_PreLieAxiomsZeroProduct)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
