// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "panogeo/erp.hpp"
#include "panogeo/pose.hpp"

namespace panogeo {

enum class EpipolarDegeneracy {
  Regular,       // proper great circle, solvable as y(x)
  PureRotation,  // zero baseline: no epipolar plane exists
  Epipole,       // target ray passes through the source camera center
  PolarCircle,   // plane contains both poles: curve is two vertical lines
};

const char* to_string(EpipolarDegeneracy d);

/// Plane through the source camera center containing the projected target ray.
/// n is its unit normal in source-camera coordinates. The quotient
/// coefficients a1 = n_x/n_z and a2 = n_y/n_z exist only when |n_z| is
/// meaningfully nonzero; the n-form solver works whenever the plane does.
struct EpipolarPlane {
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  EpipolarDegeneracy degeneracy = EpipolarDegeneracy::Regular;

  bool solvable() const {
    return degeneracy == EpipolarDegeneracy::Regular ||
           degeneracy == EpipolarDegeneracy::PolarCircle;
  }
  bool has_quotient(double eps = 1e-9) const {
    return degeneracy == EpipolarDegeneracy::Regular && std::abs(n.z()) > eps;
  }
  double a1() const;
  double a2() const;
};

// Builds the epipolar plane for a target pixel observed from the source view,
// given the target->source relative pose. Degenerate configurations come back
// tagged instead of as NaN coefficients.
EpipolarPlane epipolar_plane(const Eigen::Vector2d& pix, const RelativePose& rel,
                             int width, int height);

// Row of the epipolar curve at pixel column x, solving
//   n_x cos(phi) sin(theta) + n_y sin(phi) + n_z cos(phi) cos(theta) = 0
// for phi. Requires a Regular plane; throws degeneracy_error otherwise.
double epipolar_y(const EpipolarPlane& plane, double x, int width, int height);

// The same curve through the quotient coefficients:
//   y = H * [ arctan((a1 sin(2 pi x / W) - cos(2 pi x / W)) / a2) / pi + 0.5 ]
double epipolar_y_quotient(double a1, double a2, double x, int width, int height);

// For PolarCircle planes: the two pixel columns of the vertical lines where
// n_x sin(theta) + n_z cos(theta) = 0.
std::array<double, 2> polar_columns(const EpipolarPlane& plane, int width,
                                    int height);

// Brute-force route: lifts the target pixel to each depth, maps it through the
// relative pose and projects it into the source view. Depths that land on the
// source camera center are skipped.
std::vector<Eigen::Vector2d> epipolar_oracle(const Eigen::Vector2d& pix,
                                             const RelativePose& rel,
                                             std::span<const double> depths,
                                             int width, int height);

/// Drawable form of the curve: one polyline vertex per column for Regular
/// planes, or two vertical segments for PolarCircle. Segments never cross the
/// horizontal wrap seam.
using Polyline = std::vector<Eigen::Vector2d>;

std::vector<Polyline> rasterize_epipolar(const EpipolarPlane& plane, int width,
                                         int height);

// Recolors the polyline pixels of an overlay image in place.
void draw_polylines(ErpImage& img, const std::vector<Polyline>& lines,
                    std::span<const float> color);

}  // namespace panogeo
