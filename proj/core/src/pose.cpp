// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/pose.hpp"

#include <Eigen/LU>

namespace panogeo {

bool Pose::is_valid(double tol) const {
  const double ortho = (R.transpose() * R - Eigen::Matrix3d::Identity()).norm();
  return ortho <= tol && std::abs(R.determinant() - 1.0) <= tol;
}

RelativePose relative_pose(const Pose& pose_i, const Pose& pose_j) {
  RelativePose rel;
  rel.R = pose_j.R.transpose() * pose_i.R;
  rel.t = pose_j.R.transpose() * (pose_i.t - pose_j.t);
  return rel;
}

}  // namespace panogeo
