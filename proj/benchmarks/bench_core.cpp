// ProxShift - proximal splitting with strong convexity shifting
// Copyright 2026 ProxShift Contributors
// Licensed under Apache 2.0

#include <benchmark/benchmark.h>

#include <memory>

#include "proxshift/quadratic.hpp"
#include "proxshift/rates.hpp"
#include "proxshift/solvers.hpp"

namespace {

using namespace proxshift;

InstanceParams sized_params(Eigen::Index n) {
  InstanceParams params;
  params.rows = n;
  params.cols = n;
  params.a = 0.58;
  params.b = 0.1;
  params.rho = 0.1;
  params.seed = 2;
  return params;
}

void BM_make_instance(benchmark::State& state) {
  const InstanceParams params = sized_params(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_instance(params));
  }
}
BENCHMARK(BM_make_instance)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_instance_grad(benchmark::State& state) {
  const QuadraticInstance inst = make_instance(sized_params(state.range(0)));
  const Vec x = Vec::Constant(inst.cols, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(instance_grad(inst, x));
  }
}
BENCHMARK(BM_instance_grad)->Arg(50)->Arg(200);

void BM_instance_prox(benchmark::State& state) {
  const QuadraticInstance inst = make_instance(sized_params(state.range(0)));
  const Vec x = Vec::Constant(inst.cols, 0.25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(instance_prox(inst, 1.0, x));
  }
}
BENCHMARK(BM_instance_prox)->Arg(50)->Arg(200);

void BM_spectral_constants(benchmark::State& state) {
  const QuadraticInstance inst = make_instance(sized_params(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_constants(inst.gram));
  }
}
BENCHMARK(BM_spectral_constants)->Arg(50)->Arg(200)
    ->Unit(benchmark::kMillisecond);

void BM_fista_iterations(benchmark::State& state) {
  const auto inst = std::make_shared<const QuadraticInstance>(
      make_instance(sized_params(state.range(0))));
  const CompositeProblem problem = as_problem(inst);
  SolverConfig config;
  config.max_iters = 100;
  config.snapshot_stride = 0;
  const Vec x0 = Vec::Zero(inst->cols);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fista_run(problem, config, x0, x0));
  }
}
BENCHMARK(BM_fista_iterations)->Arg(50)->Arg(200)
    ->Unit(benchmark::kMillisecond);

void BM_fbs_iterations(benchmark::State& state) {
  const auto inst = std::make_shared<const QuadraticInstance>(
      make_instance(sized_params(state.range(0))));
  const CompositeProblem problem = as_problem(inst);
  SolverConfig config;
  config.max_iters = 100;
  config.snapshot_stride = 0;
  const Vec x0 = Vec::Zero(inst->cols);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fbs_run(problem, config, x0));
  }
}
BENCHMARK(BM_fbs_iterations)->Arg(50)->Arg(200)
    ->Unit(benchmark::kMillisecond);

void BM_rate_certificate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fista_delta_certificate(0.0105, 0.1, 1.0, 0.05));
  }
}
BENCHMARK(BM_rate_certificate);

}  // namespace

BENCHMARK_MAIN();
