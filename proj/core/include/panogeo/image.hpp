// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace panogeo {

/// Plain float raster, row-major, channels interleaved. Used for cube faces,
/// perspective renders and anything without the 2:1 panoramic constraint.
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels);

  static Image constant(int width, int height, int channels, float value);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }

  float& at(int x, int y, int c) { return data_[index(x, y, c)]; }
  float at(int x, int y, int c) const { return data_[index(x, y, c)]; }

  std::span<float> pixel(int x, int y) {
    return {data_.data() + index(x, y, 0), static_cast<size_t>(channels_)};
  }
  std::span<const float> pixel(int x, int y) const {
    return {data_.data() + index(x, y, 0), static_cast<size_t>(channels_)};
  }

  std::span<float> data() { return data_; }
  std::span<const float> data() const { return data_; }

  // Bilinear sample at continuous coordinates; pixel (i, j) is centered at
  // (i + 0.5, j + 0.5). Both axes clamp at the border.
  void sample_clamped(double x, double y, std::span<float> out) const;

  bool is_finite() const;

 private:
  size_t index(int x, int y, int c) const {
    return (static_cast<size_t>(y) * width_ + x) * channels_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<float> data_;
};

}  // namespace panogeo
