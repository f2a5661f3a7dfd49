// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "panogeo/cubemap.hpp"
#include "panogeo/erp.hpp"

using namespace panogeo;

namespace {

ErpImage random_erp(int width, int height, int channels) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  ErpImage img(width, height, channels);
  for (float& v : img.data()) v = dist(rng);
  return img;
}

}  // namespace

static void BMPixelSphereRoundTrip(benchmark::State& state) {
  double x = 13.25, y = 201.5;
  for (auto _ : state) {
    const auto pix = sphere_to_pixel(pixel_to_sphere(x, y, 1024, 512), 1024, 512);
    benchmark::DoNotOptimize(pix);
    x += 0.37;
    if (x >= 1024) x -= 1024;
  }
}
BENCHMARK(BMPixelSphereRoundTrip);

static void BMCartSphereRoundTrip(benchmark::State& state) {
  Eigen::Vector3d v(0.3, -0.5, 0.81);
  v.normalize();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphere_to_cart(cart_to_sphere(v)));
  }
}
BENCHMARK(BMCartSphereRoundTrip);

static void BMErpSample(benchmark::State& state) {
  const ErpImage img = random_erp(1024, 512, 3);
  std::array<float, 3> out;
  double x = 0.0;
  for (auto _ : state) {
    img.sample(x, 200.25, out);
    benchmark::DoNotOptimize(out);
    x += 1.618;
    if (x >= 1024) x -= 1024;
  }
}
BENCHMARK(BMErpSample);

static void BMWrapAugment(benchmark::State& state) {
  const ErpImage img = random_erp(1024, 512, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wrap_augment(img, 0.25));
  }
}
BENCHMARK(BMWrapAugment);

static void BMCubemapToErp(benchmark::State& state) {
  CubeMap cube(static_cast<int>(state.range(0)), 3);
  std::mt19937 rng(2);
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  for (auto& f : cube.faces) {
    for (float& v : f.data()) v = dist(rng);
  }
  const int height = 2 * static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cubemap_to_erp(cube, height));
  }
}
BENCHMARK(BMCubemapToErp)->Arg(64)->Arg(128)->Arg(256);
