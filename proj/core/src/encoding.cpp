// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/encoding.hpp"

#include <Eigen/Geometry>
#include <cmath>

#include "panogeo/errors.hpp"

namespace panogeo {

PluckerCoords plucker(const Ray& ray) {
  return {ray.origin.cross(ray.dir), ray.dir};
}

void harmonic(std::span<const double> values, int levels, double base,
              std::span<double> out) {
  if (levels < 1) throw validation_error("harmonic: levels must be >= 1");
  if (out.size() != values.size() * 2 * static_cast<size_t>(levels)) {
    throw validation_error("harmonic: output span has the wrong size");
  }
  size_t k = 0;
  for (double v : values) {
    double freq = 1.0;
    for (int l = 0; l < levels; ++l) {
      out[k++] = std::sin(freq * v);
      out[k++] = std::cos(freq * v);
      freq *= base;
    }
  }
}

std::vector<double> harmonic(std::span<const double> values, int levels,
                             double base) {
  std::vector<double> out(values.size() * 2 * static_cast<size_t>(levels));
  harmonic(values, levels, base, out);
  return out;
}

std::vector<double> harmonic(double value, int levels, double base) {
  return harmonic(std::span<const double>(&value, 1), levels, base);
}

void positional_encoding(const PluckerCoords& ray, double depth,
                         const EncodingConfig& cfg, std::span<double> out) {
  if (out.size() != static_cast<size_t>(cfg.encoded_size())) {
    throw validation_error("positional_encoding: output span has the wrong size");
  }
  const Eigen::Matrix<double, 6, 1> r = ray.stacked();
  harmonic(std::span<const double>(r.data(), 6), cfg.l_ray, cfg.base,
           out.subspan(0, 12 * cfg.l_ray));
  harmonic(std::span<const double>(&depth, 1), cfg.l_depth, cfg.base,
           out.subspan(12 * cfg.l_ray, 2 * cfg.l_depth));
}

std::vector<double> positional_encoding(const PluckerCoords& ray, double depth,
                                        const EncodingConfig& cfg) {
  std::vector<double> out(cfg.encoded_size());
  positional_encoding(ray, depth, cfg, out);
  return out;
}

}  // namespace panogeo
