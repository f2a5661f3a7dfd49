// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <vector>

#include "panogeo/erp.hpp"
#include "panogeo/pose.hpp"

namespace panogeo {

/// World-space ray with a unit direction.
struct Ray {
  Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  Eigen::Vector3d dir = Eigen::Vector3d::UnitZ();
};

/// Strictly increasing depths and the corresponding points origin + z * dir.
struct RaySamples {
  std::vector<double> depths;
  std::vector<Eigen::Vector3d> points;
};

/// Projection of a world point into a spherical camera: continuous pixel plus
/// the spherical depth (Euclidean distance to the camera center).
struct Reprojection {
  Eigen::Vector2d pix;
  double depth;
};

// Ray through a pixel: origin is the camera center, direction the rotated
// pixel direction.
Ray ray_for_pixel(const Pose& pose, const Eigen::Vector2d& pix, int width,
                  int height);

// S depths uniform in [z_near, z_far], endpoints included. Requires
// 0 < z_near < z_far and S >= 2.
RaySamples sample_ray(const Ray& ray, int samples, double z_near, double z_far);

// Projects a world point into the reference view. Throws degeneracy_error if
// the point coincides with the reference camera center.
Reprojection reproject(const Eigen::Vector3d& point, const Pose& pose_ref,
                       int width, int height);

}  // namespace panogeo
