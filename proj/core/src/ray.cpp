// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/ray.hpp"

#include "panogeo/errors.hpp"

namespace panogeo {

Ray ray_for_pixel(const Pose& pose, const Eigen::Vector2d& pix, int width,
                  int height) {
  Ray ray;
  ray.origin = pose.t;
  ray.dir = pose.R * sphere_to_cart(pixel_to_sphere(pix.x(), pix.y(), width, height));
  return ray;
}

RaySamples sample_ray(const Ray& ray, int samples, double z_near, double z_far) {
  if (samples < 2) {
    throw validation_error("sample_ray: need at least 2 samples");
  }
  if (!(z_near > 0.0) || !(z_far > z_near)) {
    throw validation_error("sample_ray: require 0 < z_near < z_far");
  }
  RaySamples out;
  out.depths.resize(samples);
  out.points.resize(samples);
  const double step = (z_far - z_near) / (samples - 1);
  for (int j = 0; j < samples; ++j) {
    out.depths[j] = z_near + j * step;
    out.points[j] = ray.origin + out.depths[j] * ray.dir;
  }
  return out;
}

Reprojection reproject(const Eigen::Vector3d& point, const Pose& pose_ref,
                       int width, int height) {
  const Eigen::Vector3d cam = pose_ref.R.transpose() * (point - pose_ref.t);
  const double depth = cam.norm();
  if (depth < 1e-12) {
    throw degeneracy_error("reproject: point coincides with the camera center");
  }
  return {sphere_to_pixel(cart_to_sphere(cam), width, height), depth};
}

}  // namespace panogeo
