#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "mrb/cohomology.hpp"
#include "mrb/linfinity.hpp"
#include "mrb/operators.hpp"

using namespace mrb;

namespace {

Exec mode(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_SearchDiagonal(benchmark::State& state) {
  const auto A = fx::simple4();
  const std::vector<Scalar> values = {Scalar(-2), Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
  for (auto _ : state) benchmark::DoNotOptimize(search_mrb(A, Scalar(1), values, SearchShape::diagonal, 100000, mode(state)));
  label(state);
}

void BM_SearchFull(benchmark::State& state) {
  const auto A = fx::trilie3();
  const std::vector<Scalar> values = {Scalar(-1), Scalar(0), Scalar(1)};
  for (auto _ : state) benchmark::DoNotOptimize(search_mrb(A, Scalar(1), values, SearchShape::full, 100000, mode(state)));
  label(state);
}

void BM_CoboundaryMatrix(benchmark::State& state) {
  const auto rep = adjoint(fx::simple4());
  for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(rep, 1, mode(state)));
  label(state);
}

void BM_FundamentalIdentity(benchmark::State& state) {
  std::mt19937 g(7);
  const auto A = fx::random_tensor(g, 6, {-2, -1, 0, 1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(check_fundamental_identity(A, mode(state)));
  label(state);
}

void BM_CircleProduct(benchmark::State& state) {
  std::mt19937 g(11);
  const auto P = fx::random_cochain(g, 4, 4, 1);
  const auto Q = fx::random_cochain(g, 4, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(circle_product(P, Q, mode(state)));
  label(state);
}

void BM_GradedBracket(benchmark::State& state) {
  const auto mu = bracket_cochain(fx::simple4());
  for (auto _ : state) benchmark::DoNotOptimize(graded_bracket(mu, mu, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_SearchDiagonal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchFull)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoboundaryMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FundamentalIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CircleProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GradedBracket)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
