#include "qpg/examples.hpp"
#include "qpg/graded_lie.hpp"
#include "qpg/graded_poisson.hpp"
#include "qpg/parser.hpp"
#include "qpg/quasi_poisson.hpp"

#include <benchmark/benchmark.h>

using namespace qpg;

static void BM_GroebnerSL2Product(benchmark::State& state) {
  auto H = sl2_double();
  for (auto _ : state) {
    auto R = CoordinateRing::make(H.space.ring()->vars(), H.space.ring()->ideal_generators(),
                                  H.space.ring()->order());
    benchmark::DoNotOptimize(R->groebner_basis().size());
  }
}
BENCHMARK(BM_GroebnerSL2Product)->Unit(benchmark::kMillisecond);

static void BM_SchoutenConjugation(benchmark::State& state) {
  auto H = sl2_conjugation();
  for (auto _ : state) benchmark::DoNotOptimize(schouten(H.space.pi, H.space.pi));
}
BENCHMARK(BM_SchoutenConjugation)->Unit(benchmark::kMillisecond);

static void BM_QuasiPoissonDouble(benchmark::State& state) {
  auto H = sl2_double();
  for (auto _ : state) benchmark::DoNotOptimize(check_quasi_poisson(H.space).all_passed());
}
BENCHMARK(BM_QuasiPoissonDouble)->Unit(benchmark::kMillisecond);

static void BM_GradedJacobiQ(benchmark::State& state) {
  auto L = state.range(0) == 0 ? so3_algebra() : sl2_algebra();
  auto Q = build_Q(L);
  for (auto _ : state) benchmark::DoNotOptimize(check_graded_lie(Q).all_passed());
}
BENCHMARK(BM_GradedJacobiQ)->Arg(0)->Arg(1);

static void BM_GbigPoisson(benchmark::State& state) {
  auto G = sl2_group("x");
  for (auto _ : state) {
    auto P = build_Gbig(G);
    benchmark::DoNotOptimize(check_graded_poisson(*P.algebra).all_passed());
  }
}
BENCHMARK(BM_GbigPoisson)->Unit(benchmark::kMillisecond);

static void BM_ParsePolynomial(benchmark::State& state) {
  auto R = CoordinateRing::make({"x", "y", "z"});
  for (auto _ : state) benchmark::DoNotOptimize(parse_polynomial("(x+2*y-1/3*z)^6 - x^6", *R));
}
BENCHMARK(BM_ParsePolynomial);

BENCHMARK_MAIN();
