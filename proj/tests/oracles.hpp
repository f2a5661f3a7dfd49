// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used only to check the library. They
// follow the defining formulas directly (no separable filters, no shared
// helpers) so they stay an honest second route.

#pragma once

#include <cmath>
#include <vector>

#include "panogeo/erp.hpp"
#include "panogeo/image.hpp"

namespace oracle {

inline double psnr_reference(const panogeo::Image& a, const panogeo::Image& b) {
  const auto da = a.data();
  const auto db = b.data();
  double mse = 0.0;
  for (size_t i = 0; i < da.size(); ++i) {
    const double d = double(da[i]) - double(db[i]);
    mse += d * d;
  }
  mse /= double(da.size());
  if (mse <= 0.0) return 99.0;
  return std::min(99.0, 10.0 * std::log10(1.0 / mse));
}

// Direct per-window evaluation of the SSIM formula: for every valid center
// pixel, Gaussian-weighted moments are summed over the full 11x11 window.
inline double ssim_reference(const panogeo::Image& a, const panogeo::Image& b) {
  const int w = a.width();
  const int h = a.height();
  const int win = 11;
  const int half = win / 2;
  const double sigma = 1.5;
  const double c1 = 0.01 * 0.01;
  const double c2 = 0.03 * 0.03;

  const auto gray = [](const panogeo::Image& img, int x, int y) {
    if (img.channels() >= 3) {
      return 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) +
             0.114 * img.at(x, y, 2);
    }
    return double(img.at(x, y, 0));
  };

  std::vector<double> kernel(win * win);
  double ksum = 0.0;
  for (int j = 0; j < win; ++j) {
    for (int i = 0; i < win; ++i) {
      const double dx = i - half;
      const double dy = j - half;
      kernel[j * win + i] = std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma));
      ksum += kernel[j * win + i];
    }
  }
  for (double& k : kernel) k /= ksum;

  double total = 0.0;
  int count = 0;
  for (int y = half; y < h - half; ++y) {
    for (int x = half; x < w - half; ++x) {
      double mu_a = 0.0, mu_b = 0.0;
      for (int j = 0; j < win; ++j) {
        for (int i = 0; i < win; ++i) {
          const double k = kernel[j * win + i];
          mu_a += k * gray(a, x + i - half, y + j - half);
          mu_b += k * gray(b, x + i - half, y + j - half);
        }
      }
      double var_a = 0.0, var_b = 0.0, cov = 0.0;
      for (int j = 0; j < win; ++j) {
        for (int i = 0; i < win; ++i) {
          const double k = kernel[j * win + i];
          const double va = gray(a, x + i - half, y + j - half) - mu_a;
          const double vb = gray(b, x + i - half, y + j - half) - mu_b;
          var_a += k * va * va;
          var_b += k * vb * vb;
          cov += k * va * vb;
        }
      }
      const double num = (2 * mu_a * mu_b + c1) * (2 * cov + c2);
      const double den =
          (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2);
      total += num / den;
      ++count;
    }
  }
  return total / count;
}

}  // namespace oracle
