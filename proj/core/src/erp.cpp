// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/erp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "panogeo/errors.hpp"

namespace panogeo {

namespace {

constexpr double kPi = std::numbers::pi;

void check_erp_size(int width, int height) {
  if (height < 1 || width != 2 * height) {
    throw validation_error("equirectangular raster requires W == 2*H, got " +
                           std::to_string(width) + "x" + std::to_string(height));
  }
}

double wrap_coord(double x, int width) {
  double w = std::fmod(x, static_cast<double>(width));
  if (w < 0.0) w += width;
  // fmod of a value just below 0 can round back up to width
  if (w >= width) w = 0.0;
  return w;
}

}  // namespace

SphericalDir pixel_to_sphere(double x, double y, int width, int height) {
  check_erp_size(width, height);
  const double xw = wrap_coord(x, width);
  const double yc = std::clamp(y, 0.0, static_cast<double>(height));
  SphericalDir d;
  d.theta = (0.5 - xw / width) * 2.0 * kPi;
  d.phi = (0.5 - yc / height) * kPi;
  return d;
}

Eigen::Vector2d sphere_to_pixel(const SphericalDir& dir, int width, int height) {
  check_erp_size(width, height);
  const double x = wrap_coord(width * (0.5 - dir.theta / (2.0 * kPi)), width);
  const double y = height * (0.5 - dir.phi / kPi);
  return {x, y};
}

Eigen::Vector3d sphere_to_cart(const SphericalDir& dir) {
  const double cp = std::cos(dir.phi);
  return {cp * std::sin(dir.theta), std::sin(dir.phi), cp * std::cos(dir.theta)};
}

SphericalDir cart_to_sphere(const Eigen::Vector3d& v) {
  const double norm = v.norm();
  if (norm == 0.0) {
    throw validation_error("cart_to_sphere: zero vector has no direction");
  }
  const Eigen::Vector3d n = v / norm;
  SphericalDir d;
  d.phi = std::asin(std::clamp(n.y(), -1.0, 1.0));
  const double planar = std::hypot(n.x(), n.z());
  d.theta = planar == 0.0 ? 0.0 : std::atan2(n.x(), n.z());
  if (d.theta <= -kPi) d.theta += 2.0 * kPi;
  return d;
}

ErpImage::ErpImage(int width, int height, int channels) {
  check_erp_size(width, height);
  img_ = Image(width, height, channels);
}

ErpImage::ErpImage(Image img) {
  check_erp_size(img.width(), img.height());
  img_ = std::move(img);
}

ErpImage ErpImage::constant(int width, int height, int channels, float value) {
  check_erp_size(width, height);
  return ErpImage(Image::constant(width, height, channels, value));
}

void ErpImage::sample(double x, double y, std::span<float> out) const {
  const int w = width();
  const int h = height();
  const double xi = wrap_coord(x, w) - 0.5;
  const double yi = std::clamp(y, 0.0, static_cast<double>(h)) - 0.5;
  const double xf = std::floor(xi);
  const double yf = std::floor(yi);
  const double fx = xi - xf;
  const double fy = yi - yf;

  long c0 = static_cast<long>(xf);
  if (c0 < 0) c0 += w;
  const int x0 = static_cast<int>(c0 % w);
  const int x1 = (x0 + 1) % w;
  const int y0 = static_cast<int>(std::clamp<long>(static_cast<long>(yf), 0, h - 1));
  const int y1 = static_cast<int>(std::clamp<long>(static_cast<long>(yf) + 1, 0, h - 1));

  const double w00 = (1.0 - fx) * (1.0 - fy);
  const double w10 = fx * (1.0 - fy);
  const double w01 = (1.0 - fx) * fy;
  const double w11 = fx * fy;
  for (int c = 0; c < channels(); ++c) {
    out[c] = static_cast<float>(w00 * at(x0, y0, c) + w10 * at(x1, y0, c) +
                                w01 * at(x0, y1, c) + w11 * at(x1, y1, c));
  }
}

std::vector<float> ErpImage::sample(double x, double y) const {
  std::vector<float> out(channels());
  sample(x, y, out);
  return out;
}

ErpImage wrap_augment(const ErpImage& img, double fraction) {
  if (fraction < 0.0 || fraction >= 1.0) {
    throw validation_error("wrap_augment: fraction must lie in [0, 1)");
  }
  const int w = img.width();
  const int shift = static_cast<int>(std::lround(fraction * w)) % w;
  ErpImage out(w, img.height(), img.channels());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < w; ++x) {
      const int src = (x + w - shift) % w;
      for (int c = 0; c < img.channels(); ++c) {
        out.at(x, y, c) = img.at(src, y, c);
      }
    }
  }
  return out;
}

}  // namespace panogeo
