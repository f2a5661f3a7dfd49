// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <span>

#include "panogeo/image.hpp"

namespace panogeo {

/// Direction on the unit sphere. theta is azimuth in (-pi, pi], phi is
/// elevation in [-pi/2, pi/2]; phi = +pi/2 is straight up.
struct SphericalDir {
  double theta = 0.0;
  double phi = 0.0;
};

// Equirectangular pixel <-> sphere mapping:
//   theta = (0.5 - x/W) * 2*pi,  phi = (0.5 - y/H) * pi
// applied to continuous pixel coordinates; integer pixel (i, j) sits at
// (i + 0.5, j + 0.5). Column 0 is theta just under +pi, row 0 is the north
// pole. x is taken modulo W, y is clamped to [0, H]. Requires W == 2*H.
SphericalDir pixel_to_sphere(double x, double y, int width, int height);

// Exact inverse of pixel_to_sphere; x is wrapped into [0, W).
Eigen::Vector2d sphere_to_pixel(const SphericalDir& dir, int width, int height);

// (cos(phi)*sin(theta), sin(phi), cos(phi)*cos(theta)); unit by construction.
Eigen::Vector3d sphere_to_cart(const SphericalDir& dir);

// Normalizes v, then inverts sphere_to_cart. theta is defined as 0 at the
// poles. Throws validation_error on a zero vector.
SphericalDir cart_to_sphere(const Eigen::Vector3d& v);

/// Equirectangular raster: width is exactly twice the height, the horizontal
/// axis is periodic. Color images use values in [0, 1]; depth maps carry
/// meters in a single channel.
class ErpImage {
 public:
  ErpImage() = default;
  ErpImage(int width, int height, int channels);
  explicit ErpImage(Image img);

  static ErpImage constant(int width, int height, int channels, float value);

  int width() const { return img_.width(); }
  int height() const { return img_.height(); }
  int channels() const { return img_.channels(); }

  float& at(int x, int y, int c) { return img_.at(x, y, c); }
  float at(int x, int y, int c) const { return img_.at(x, y, c); }

  std::span<float> pixel(int x, int y) { return img_.pixel(x, y); }
  std::span<const float> pixel(int x, int y) const { return img_.pixel(x, y); }

  std::span<float> data() { return img_.data(); }
  std::span<const float> data() const { return img_.data(); }

  const Image& image() const { return img_; }

  // Bilinear sample with horizontal wrap and vertical clamp, pixel centers at
  // (i + 0.5, j + 0.5).
  void sample(double x, double y, std::span<float> out) const;
  std::vector<float> sample(double x, double y) const;

  bool is_finite() const { return img_.is_finite(); }

 private:
  Image img_;
};

// Cyclic horizontal shift: the rightmost round(fraction*W) columns are moved
// to the left edge. fraction must lie in [0, 1).
ErpImage wrap_augment(const ErpImage& img, double fraction);

}  // namespace panogeo
