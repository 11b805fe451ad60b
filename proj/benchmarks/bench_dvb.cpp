#include <benchmark/benchmark.h>

#include "dvb/builtins.hpp"
#include "dvb/canonical.hpp"
#include "dvb/poisson.hpp"
#include "dvb/sampling.hpp"

namespace {

using namespace dvb;

void BM_EvalJet(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const SmoothMap f = builtin_maps(static_cast<std::size_t>(n))[6];
  Sampler rng(1, 0);
  const Jet2 j(rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n));
  for (auto _ : state) benchmark::DoNotOptimize(eval_jet(f, j));
}
BENCHMARK(BM_EvalJet)->Arg(1)->Arg(3)->Arg(5);

void BM_JNaturality(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const SmoothMap f = builtin_diffeomorphisms(static_cast<std::size_t>(n))[2];
  Sampler rng(2, 0);
  const T2MElement xi{rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n)};
  for (auto _ : state) benchmark::DoNotOptimize(j_naturality_residual(f, xi));
}
BENCHMARK(BM_JNaturality)->Arg(1)->Arg(5);

void BM_Tulczyjew(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Sampler rng(3, 0);
  const TangentCotangentElement xi{rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n)};
  for (auto _ : state) benchmark::DoNotOptimize(tulczyjew(xi));
}
BENCHMARK(BM_Tulczyjew)->Arg(1)->Arg(5);

void BM_Proposition(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Sampler rng(4, 0);
  const CotangentCotangentElement w{rng.vec(n), rng.vec(n), rng.vec(n), rng.vec(n)};
  for (auto _ : state) benchmark::DoNotOptimize(proposition_composite_residual(w));
}
BENCHMARK(BM_Proposition)->Arg(1)->Arg(4);

void BM_Jacobiator(benchmark::State& state) {
  Sampler rng(5, 0);
  const PoissonBivector pi = PoissonBivector::so3();
  const Expr f = rng.quadratic(3), g = rng.quadratic(3), h = rng.quadratic(3);
  const Vec x = rng.vec(3);
  for (auto _ : state) benchmark::DoNotOptimize(jacobiator(pi, f, g, h, x));
}
BENCHMARK(BM_Jacobiator);

void BM_AnchorHomomorphism(benchmark::State& state) {
  Sampler rng(6, 0);
  const PoissonBivector pi = PoissonBivector::canonical(2);
  const OneForm a = OneForm::explicit_components(rng.quadratic_components(4));
  const OneForm b = OneForm::exact(4, rng.quadratic(4)).times(rng.quadratic(4));
  const Vec x = rng.vec(4);
  for (auto _ : state) benchmark::DoNotOptimize(anchor_homomorphism_residual(pi, a, b, x));
}
BENCHMARK(BM_AnchorHomomorphism);

}  // namespace

BENCHMARK_MAIN();
