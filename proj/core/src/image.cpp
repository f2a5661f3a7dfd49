// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/image.hpp"

#include <algorithm>
#include <cmath>

#include "panogeo/errors.hpp"

namespace panogeo {

Image::Image(int width, int height, int channels)
    : width_(width), height_(height), channels_(channels) {
  if (width <= 0 || height <= 0 || channels <= 0) {
    throw validation_error("Image dimensions must be positive");
  }
  data_.assign(static_cast<size_t>(width) * height * channels, 0.0f);
}

Image Image::constant(int width, int height, int channels, float value) {
  Image img(width, height, channels);
  std::fill(img.data_.begin(), img.data_.end(), value);
  return img;
}

void Image::sample_clamped(double x, double y, std::span<float> out) const {
  const double xi = x - 0.5;
  const double yi = y - 0.5;
  const double xf = std::floor(xi);
  const double yf = std::floor(yi);
  const double fx = xi - xf;
  const double fy = yi - yf;

  const auto clampc = [this](long v) {
    return static_cast<int>(std::clamp<long>(v, 0, width_ - 1));
  };
  const auto clampr = [this](long v) {
    return static_cast<int>(std::clamp<long>(v, 0, height_ - 1));
  };
  const int x0 = clampc(static_cast<long>(xf));
  const int x1 = clampc(static_cast<long>(xf) + 1);
  const int y0 = clampr(static_cast<long>(yf));
  const int y1 = clampr(static_cast<long>(yf) + 1);

  const double w00 = (1.0 - fx) * (1.0 - fy);
  const double w10 = fx * (1.0 - fy);
  const double w01 = (1.0 - fx) * fy;
  const double w11 = fx * fy;
  for (int c = 0; c < channels_; ++c) {
    out[c] = static_cast<float>(w00 * at(x0, y0, c) + w10 * at(x1, y0, c) +
                                w01 * at(x0, y1, c) + w11 * at(x1, y1, c));
  }
}

bool Image::is_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](float v) { return std::isfinite(v); });
}

}  // namespace panogeo
