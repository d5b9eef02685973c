#include <benchmark/benchmark.h>

#include "openmarkov/blackbox.hpp"
#include "openmarkov/coarse.hpp"
#include "openmarkov/dynamics.hpp"
#include "openmarkov/generators.hpp"
#include "openmarkov/subspace.hpp"

using namespace openmarkov;

namespace {

OpenMarkov random_process(std::size_t n, std::uint64_t seed) {
  InstanceGenerator gen(seed);
  const std::size_t b = std::min<std::size_t>(n, 3);
  return gen.open_process("x", n, FinSet::numbered("s", b), FinSet::numbered("t", b));
}

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RatMatrix h = random_process(n, 1).generator();
  for (auto _ : state) benchmark::DoNotOptimize(kernel(h));
}
BENCHMARK(BM_Kernel)->RangeMultiplier(2)->Range(4, 32);

void BM_Compose(benchmark::State& state) {
  InstanceGenerator gen(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const FinSet t = FinSet::numbered("t", 2);
  const OpenMarkov m = gen.open_process("x", n, FinSet::numbered("s", 2), t);
  const OpenMarkov k = gen.open_process("y", n, t, FinSet::numbered("u", 2));
  for (auto _ : state) benchmark::DoNotOptimize(compose_open(m, k));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(4, 32);

void BM_BlackBox(benchmark::State& state) {
  const OpenMarkov m = random_process(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(black_box(m));
}
BENCHMARK(BM_BlackBox)->RangeMultiplier(2)->Range(4, 32);

void BM_CoarseGrain(benchmark::State& state) {
  InstanceGenerator gen(4);
  const OpenMarkov target = random_process(static_cast<std::size_t>(state.range(0)), 4);
  const OpenMarkovMorphism m = gen.lift(target, 3);
  const StochasticSection s = uniform_section(m.p);
  for (auto _ : state) benchmark::DoNotOptimize(coarse_grain(m.source.generator(), s));
}
BENCHMARK(BM_CoarseGrain)->RangeMultiplier(2)->Range(2, 16);

void BM_Expm(benchmark::State& state) {
  const Eigen::MatrixXd h = to_real(random_process(static_cast<std::size_t>(state.range(0)), 5).generator());
  for (auto _ : state) benchmark::DoNotOptimize(expm(h, 1.0));
}
BENCHMARK(BM_Expm)->RangeMultiplier(4)->Range(4, 256);

void BM_IntegrateMaster(benchmark::State& state) {
  const OpenMarkov m = random_process(static_cast<std::size_t>(state.range(0)), 6);
  const auto n = static_cast<Eigen::Index>(m.states().size());
  const Eigen::VectorXd v0 = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_master(m, zero_flows(m), v0, 1.0, 1e-3));
}
BENCHMARK(BM_IntegrateMaster)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
