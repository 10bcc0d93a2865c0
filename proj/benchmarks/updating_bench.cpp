#include <benchmark/benchmark.h>

#include "varbelief/varbelief.hpp"

using namespace varbelief;

namespace {

struct Fixture {
  StateSpacePtr space;
  Distribution prior;
  Experiment experiment;
};

Fixture make_fixture(std::size_t num_states, std::size_t num_signals, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::string> labels, signals;
  for (std::size_t s = 0; s < num_states; ++s) labels.push_back("s" + std::to_string(s));
  for (std::size_t x = 0; x < num_signals; ++x) signals.push_back("x" + std::to_string(x));
  auto space = make_state_space(std::move(labels));
  Distribution prior(space, sample_simplex(rng, num_states, 1e-4));
  std::vector<std::vector<double>> rows;
  for (std::size_t s = 0; s < num_states; ++s) {
    rows.push_back(sample_simplex(rng, num_signals, 1e-4));
  }
  Experiment experiment(space, std::move(signals), std::move(rows));
  return {std::move(space), std::move(prior), std::move(experiment)};
}

}  // namespace

static void BM_BayesUpdate(benchmark::State& state) {
  const auto fx = make_fixture(state.range(0), 8, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bayes_update(fx.prior, fx.experiment, 0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BayesUpdate)->RangeMultiplier(4)->Range(4, 256)->Complexity();

static void BM_ExponentialUpdate(benchmark::State& state) {
  const auto fx = make_fixture(state.range(0), 8, 11);
  const ExponentParams params(2.0, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponential_update(fx.prior, fx.experiment, 0, params));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExponentialUpdate)->RangeMultiplier(4)->Range(4, 256)->Complexity();

static void BM_GibbsFromPotential(benchmark::State& state) {
  SplitMix64 rng(13);
  const std::size_t n = state.range(0);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) labels.push_back("s" + std::to_string(s));
  const auto space = make_state_space(std::move(labels));
  std::vector<double> g(n);
  for (double& v : g) v = -5.0 + 10.0 * rng.uniform_unit();
  for (auto _ : state) {
    benchmark::DoNotOptimize(gibbs_from_potential(space, g));
  }
}
BENCHMARK(BM_GibbsFromPotential)->Arg(8)->Arg(64)->Arg(512);

static void BM_SolveConvex(benchmark::State& state) {
  const auto fx = make_fixture(state.range(0), 6, 17);
  const ObjectiveSpec spec(fx.prior, fx.experiment, 0, {1.0, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_convex(spec));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveConvex)->RangeMultiplier(4)->Range(4, 64)->Complexity();

static void BM_Crosscheck(benchmark::State& state) {
  const auto fx = make_fixture(16, 6, 19);
  const ObjectiveSpec spec(fx.prior, fx.experiment, 0, {0.5, -1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(crosscheck(spec));
  }
}
BENCHMARK(BM_Crosscheck);

static void BM_GretherFit(benchmark::State& state) {
  const auto fx = make_fixture(4, 3, 23);
  const auto data = simulate_dataset(29, fx.experiment, {2.0, 0.5}, state.range(0), 0.02);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grether_fit(data));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GretherFit)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_OrderDependence(benchmark::State& state) {
  const auto fx = make_fixture(4, 4, 31);
  const SignalSequence seq(fx.experiment, {"x0", "x1", "x2", "x3"});
  const ExponentParams rule(1.7, 0.8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(order_dependence(fx.prior, seq, rule, 24));
  }
}
BENCHMARK(BM_OrderDependence);

BENCHMARK_MAIN();
