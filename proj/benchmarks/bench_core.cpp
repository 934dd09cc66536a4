#include "nambu/analysis.hpp"
#include "nambu/bracket.hpp"
#include "nambu/groebner.hpp"
#include "nambu/quotient.hpp"
#include "nambu/random_poly.hpp"
#include "nambu/structures.hpp"

#include <benchmark/benchmark.h>

using namespace nambu;

static void BM_PolyMul(benchmark::State& state) {
  PolyRng rng(1);
  const auto ctx = indexed_context("x", 4);
  const auto terms = static_cast<std::size_t>(state.range(0));
  const auto a = rng.poly(ctx, 6, 9, terms);
  const auto b = rng.poly(ctx, 6, 9, terms);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(8)->Arg(32)->Arg(128);

static void BM_Buchberger(benchmark::State& state) {
  const auto order = state.range(0) == 0 ? MonomialOrder::grevlex() : MonomialOrder::lex();
  PolyRng rng(7);
  const auto ctx = indexed_context("x", 3);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(rng.poly(ctx, 3, 9, 3));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, order));
}
BENCHMARK(BM_Buchberger)->Arg(0)->Arg(1);

static void BM_MalcevTableBracket(benchmark::State& state) {
  const auto spec = make_malcev_splittable();
  const auto& ctx = spec.bracket.context();
  PolyRng rng(3);
  const auto deg = static_cast<unsigned>(state.range(0));
  const auto f = rng.poly(ctx, deg, 9, 6);
  const auto g = rng.poly(ctx, deg, 9, 6);
  for (auto _ : state) benchmark::DoNotOptimize(spec.bracket({f, g}));
}
BENCHMARK(BM_MalcevTableBracket)->Arg(2)->Arg(4);

static void BM_JacobianBracket(benchmark::State& state) {
  const auto spec = make_quadric(3);
  const auto& ctx = spec.bracket.context();
  PolyRng rng(4);
  const auto f = rng.poly(ctx, 3, 9, 5);
  const auto g = rng.poly(ctx, 3, 9, 5);
  const auto h = rng.poly(ctx, 3, 9, 5);
  for (auto _ : state) benchmark::DoNotOptimize(spec.bracket({f, g, h}));
}
BENCHMARK(BM_JacobianBracket);

static void BM_Saturation(benchmark::State& state) {
  const auto spec = make_algebra(state.range(0) == 0 ? "sl2" : "malcev-splittable");
  const QuotientContext q(spec.bracket, *spec.casimir, 1);
  const std::vector<Polynomial> seeds{Polynomial::variable(q.context(), 0)};
  for (auto _ : state) benchmark::DoNotOptimize(saturate_poisson_ideal(q, seeds));
}
BENCHMARK(BM_Saturation)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
