#include <benchmark/benchmark.h>

#include "nsfd/nsfd.hpp"

namespace {

using namespace nsfd;

const problems::GhaffariSystem kParams = problems::GhaffariSystem::reference();

NsfdScheme scheme_with(WeightFunction tau) {
  return {kParams.system(), DenominatorFunction::identity(), std::move(tau)};
}

void BM_NsfdStepLyapunovWeight(benchmark::State& state) {
  const auto sys = kParams.system();
  const auto scheme = scheme_with(
      WeightFunction::from_lyapunov_bound(problems::ghaffari_lyapunov(kParams, 1.0), sys, 0.001));
  State y{0.5, 0.01};
  for (auto _ : state) {
    y = nsfd_step(scheme, y, 0.8);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_NsfdStepLyapunovWeight);

void BM_NsfdStepCombinedWeight(benchmark::State& state) {
  const auto sys = kParams.system();
  const auto scheme =
      scheme_with(WeightFunction::combined(problems::ghaffari_lyapunov(kParams, 1.0), sys, 0.001));
  const State y{0.5, 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(nsfd_step(scheme, y, 0.8));
}
BENCHMARK(BM_NsfdStepCombinedWeight);

void BM_ReferenceStep(benchmark::State& state) {
  const auto method = static_cast<OneStepMethod>(state.range(0));
  const auto sys = kParams.system();
  const State y{0.5, 0.01};
  for (auto _ : state) benchmark::DoNotOptimize(step_with(method, sys, y, 1e-3));
  state.SetLabel(std::string(method_name(method)));
}
BENCHMARK(BM_ReferenceStep)->DenseRange(0, 2);

void BM_IntegrateStreaming(benchmark::State& state) {
  const auto sys = kParams.system();
  const auto v = problems::ghaffari_lyapunov(kParams, 1.0);
  const auto scheme = scheme_with(WeightFunction::from_lyapunov_bound(v, sys, 0.001));
  IntegrationOptions options;
  options.monitor = v;
  options.keep_states = false;
  double last = 0.0;
  options.observer = [&last](const StepRecord& r) { last = r.v; };
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(scheme, State{0.5, 0.01}, 0.001, steps, options));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_IntegrateStreaming)->Arg(10'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
