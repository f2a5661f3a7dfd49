// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>

#include "panogeo/epipolar.hpp"

using namespace panogeo;

namespace {

RelativePose bench_rel() {
  RelativePose rel;
  const double a = 0.35;
  rel.R << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  rel.t = Eigen::Vector3d(0.8, 0.15, -0.4);
  return rel;
}

}  // namespace

static void BMEpipolarPlane(benchmark::State& state) {
  const RelativePose rel = bench_rel();
  double x = 100.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(epipolar_plane({x, 231.25}, rel, 1024, 512));
    x += 3.7;
    if (x >= 1024) x -= 1024;
  }
}
BENCHMARK(BMEpipolarPlane);

static void BMEpipolarCurveRow(benchmark::State& state) {
  const RelativePose rel = bench_rel();
  const EpipolarPlane plane = epipolar_plane({300.5, 231.25}, rel, 1024, 512);
  for (auto _ : state) {
    double acc = 0.0;
    for (int c = 0; c < 1024; ++c) {
      acc += epipolar_y(plane, c + 0.5, 1024, 512);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BMEpipolarCurveRow);

static void BMEpipolarOracle(benchmark::State& state) {
  const RelativePose rel = bench_rel();
  std::vector<double> depths(20);
  for (int i = 0; i < 20; ++i) depths[i] = 0.1 + i * 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        epipolar_oracle({300.5, 231.25}, rel, depths, 1024, 512));
  }
}
BENCHMARK(BMEpipolarOracle);

static void BMRasterize(benchmark::State& state) {
  const RelativePose rel = bench_rel();
  const EpipolarPlane plane = epipolar_plane({300.5, 231.25}, rel, 1024, 512);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rasterize_epipolar(plane, 1024, 512));
  }
}
BENCHMARK(BMRasterize);
