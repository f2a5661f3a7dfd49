// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "panogeo/attention.hpp"

using namespace panogeo;

namespace {

ViewSet bench_viewset(int n_views, int h, int channels) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  std::uniform_real_distribution<double> off(-0.4, 0.4);
  ViewSet vs;
  for (int v = 0; v < n_views; ++v) {
    ErpImage grid(2 * h, h, channels);
    for (float& val : grid.data()) val = dist(rng);
    vs.grids.push_back(std::move(grid));
    Pose pose;
    const double a = 0.1 * v;
    pose.R << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
    pose.t = Eigen::Vector3d(off(rng), off(rng), off(rng));
    vs.poses.push_back(pose);
  }
  vs.config.k_refs = 2;
  vs.config.samples = 10;
  return vs;
}

}  // namespace

static void BMSoftmaxAttention(benchmark::State& state) {
  std::mt19937 rng(4);
  const int entries = 20, dim = 92, out_dim = 8;
  Eigen::VectorXd q = Eigen::VectorXd::Random(dim);
  Eigen::MatrixXd keys = Eigen::MatrixXd::Random(entries, dim);
  Eigen::MatrixXd values = Eigen::MatrixXd::Random(entries, out_dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(attention(q, keys, values));
  }
}
BENCHMARK(BMSoftmaxAttention);

static void BMGatherKv(benchmark::State& state) {
  const ViewSet vs = bench_viewset(4, static_cast<int>(state.range(0)), 8);
  const std::vector<int> refs = select_reference_views(0, vs.poses, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gather_kv(0, refs, vs));
  }
}
BENCHMARK(BMGatherKv)->Arg(16)->Arg(32);

static void BMForward(benchmark::State& state) {
  const ViewSet vs = bench_viewset(4, 32, 8);
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(epipolar_attention_forward(vs, threads));
  }
}
BENCHMARK(BMForward)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
