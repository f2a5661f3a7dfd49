// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace panogeo {

/// Camera-to-world rigid transform: R rotates camera coordinates into world
/// coordinates, t is the camera center in the world frame (meters).
struct Pose {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();

  static Pose identity() { return {}; }

  bool is_valid(double tol = 1e-10) const;
};

/// Maps view-i camera coordinates into view-j camera coordinates:
/// p_j = R * p_i + t.
struct RelativePose {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();

  RelativePose inverse() const { return {R.transpose(), -R.transpose() * t}; }
};

// {R_j^T R_i, R_j^T (t_i - t_j)} under the camera-to-world convention.
RelativePose relative_pose(const Pose& pose_i, const Pose& pose_j);

}  // namespace panogeo
