#include <benchmark/benchmark.h>

#include "playbench/dataset.hpp"
#include "playbench/kmeans.hpp"
#include "playbench/mlp321.hpp"
#include "playbench/perceptron.hpp"
#include "playbench/session.hpp"

using namespace playbench;

static void BM_RngNext(benchmark::State& state) {
  Rng64 rng(1);
  for (auto _ : state) {
    const auto d = rng_next(rng);
    rng = d.rng;
    benchmark::DoNotOptimize(d.value);
  }
}
BENCHMARK(BM_RngNext);

static void BM_AssignClusters(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const auto centers = gen_mass_centers(k, {}, Rng64(1));
  const auto cloud = gen_point_cloud(n, {}, centers.rng);
  for (auto _ : state) benchmark::DoNotOptimize(assign_clusters(cloud.value, centers.value));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_AssignClusters)->Args({100, 5})->Args({2000, 20})->Args({100000, 10});

static void BM_PerceptronTrain(benchmark::State& state) {
  const auto table = truth_table(Gate::or2);
  perceptron::State init;
  init.lr = 0.1;
  init.w1 = -0.9;
  init.w2 = -0.8;
  for (auto _ : state) benchmark::DoNotOptimize(perceptron::train(init, table, 1000));
}
BENCHMARK(BM_PerceptronTrain);

static void BM_MlpTrainBias(benchmark::State& state) {
  const auto table = truth_table(Gate::or3);
  mlp321::State init;
  init.mode = mlp321::Mode::bias_augmented;
  init.w = {-0.77, 0.40, 0.23, -0.85, -0.57};
  for (auto _ : state) benchmark::DoNotOptimize(mlp321::train(init, table, 5000));
}
BENCHMARK(BM_MlpTrainBias);

static void BM_Representable(benchmark::State& state) {
  const std::vector<double> grid{-1, -0.5, 0, 0.5, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mlp321::representable(Gate::and3, mlp321::Mode::paper_faithful, grid));
  }
}
BENCHMARK(BM_Representable);

static void BM_SessionRunAndExport(benchmark::State& state) {
  auto config = default_config(Model::mlp321);
  config.mode = mlp321::Mode::bias_augmented;
  config.init = InitPolicy::uniform();
  config.seed = 3;
  for (auto _ : state) {
    Session s(config);
    s.run();
    benchmark::DoNotOptimize(s.export_trace(TraceFormat::json));
  }
}
BENCHMARK(BM_SessionRunAndExport);
BENCHMARK_MAIN();
