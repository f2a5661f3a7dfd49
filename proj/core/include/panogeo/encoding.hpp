// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "panogeo/ray.hpp"

namespace panogeo {

/// Line coordinates (origin x dir, dir): invariant to sliding the origin
/// along the ray, so two rays on the same line encode identically.
struct PluckerCoords {
  Eigen::Vector3d moment;
  Eigen::Vector3d dir;

  Eigen::Matrix<double, 6, 1> stacked() const {
    Eigen::Matrix<double, 6, 1> v;
    v << moment, dir;
    return v;
  }
};

/// Harmonic frequency counts for the ray block and the depth scalar; inputs
/// are encoded raw (no normalization) at frequencies base^0 .. base^(L-1).
struct EncodingConfig {
  int l_ray = 6;
  int l_depth = 6;
  double base = 2.0;

  // 6 ray components * 2L_r plus 2L_z for the depth.
  int encoded_size() const { return 12 * l_ray + 2 * l_depth; }
};

PluckerCoords plucker(const Ray& ray);

// Per input scalar emits [sin(b^0 x), cos(b^0 x), ..., sin(b^{L-1} x),
// cos(b^{L-1} x)]; blocks of consecutive scalars are concatenated.
void harmonic(std::span<const double> values, int levels, double base,
              std::span<double> out);
std::vector<double> harmonic(std::span<const double> values, int levels,
                             double base);
std::vector<double> harmonic(double value, int levels, double base);

// [harmonic(plucker, L_r), harmonic(depth, L_z)], length 12*L_r + 2*L_z.
void positional_encoding(const PluckerCoords& ray, double depth,
                         const EncodingConfig& cfg, std::span<double> out);
std::vector<double> positional_encoding(const PluckerCoords& ray, double depth,
                                        const EncodingConfig& cfg);

}  // namespace panogeo
