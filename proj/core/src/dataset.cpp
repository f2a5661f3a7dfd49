// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "panogeo/errors.hpp"
#include "panogeo/ray.hpp"

namespace panogeo {

double zero_depth_ratio(const ErpImage& depth) {
  if (depth.channels() != 1) {
    throw validation_error("zero_depth_ratio: depth must have one channel");
  }
  const auto data = depth.data();
  const size_t zeros =
      std::count_if(data.begin(), data.end(), [](float v) { return v == 0.0f; });
  return static_cast<double>(zeros) / static_cast<double>(data.size());
}

WarpResult warp_frame(const Frame& src, const Pose& dst_pose) {
  const int w = src.color.width();
  const int h = src.color.height();
  if (src.depth.width() != w || src.depth.height() != h) {
    throw validation_error("warp_frame: color and depth resolutions differ");
  }
  if (src.depth.channels() != 1) {
    throw validation_error("warp_frame: depth must have one channel");
  }

  WarpResult out{ErpImage(w, h, src.color.channels()),
                 std::vector<std::uint8_t>(static_cast<size_t>(w) * h, 0)};
  std::vector<float> zbuf(static_cast<size_t>(w) * h,
                          std::numeric_limits<float>::infinity());

  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const float z = src.depth.at(x, y, 0);
      if (!(z > 0.0f)) continue;
      const Ray ray = ray_for_pixel(src.pose, {x + 0.5, y + 0.5}, w, h);
      const Eigen::Vector3d point = ray.origin + static_cast<double>(z) * ray.dir;

      const Eigen::Vector3d cam = dst_pose.R.transpose() * (point - dst_pose.t);
      const double depth = cam.norm();
      if (depth < 1e-12) continue;
      const Eigen::Vector2d pix = sphere_to_pixel(cart_to_sphere(cam), w, h);

      const int dx = std::min(w - 1, static_cast<int>(pix.x()));
      const int dy = std::clamp(static_cast<int>(pix.y()), 0, h - 1);
      const size_t di = static_cast<size_t>(dy) * w + dx;
      if (depth < zbuf[di]) {
        zbuf[di] = static_cast<float>(depth);
        out.mask[di] = 1;
        for (int c = 0; c < src.color.channels(); ++c) {
          out.color.at(dx, dy, c) = src.color.at(x, y, c);
        }
      }
    }
  }
  return out;
}

double content_change_ratio(const Frame& a, const Frame& b, double tau_pix) {
  if (a.color.width() != b.color.width() ||
      a.color.height() != b.color.height() ||
      a.color.channels() != b.color.channels()) {
    throw validation_error("content_change_ratio: frame resolutions differ");
  }
  const WarpResult warped = warp_frame(b, a.pose);
  const int w = a.color.width();
  const int h = a.color.height();
  size_t changed = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      if (!warped.mask[i]) {
        ++changed;  // disocclusion counts as new content
        continue;
      }
      float diff = 0.0f;
      for (int c = 0; c < a.color.channels(); ++c) {
        diff = std::max(diff,
                        std::abs(warped.color.at(x, y, c) - a.color.at(x, y, c)));
      }
      if (diff > tau_pix) ++changed;
    }
  }
  return static_cast<double>(changed) / (static_cast<double>(w) * h);
}

SplitManifest split_trajectory(const Trajectory& traj, int n, double tau_pix,
                               double tau_change) {
  if (n < 1) throw validation_error("split_trajectory: n must be >= 1");
  SplitManifest manifest;
  const int count = static_cast<int>(traj.frames.size());
  if (count < n) return manifest;

  std::vector<double> ratios;  // ratios[i] compares frames i and i+1
  ratios.reserve(count - 1);
  for (int i = 0; i + 1 < count; ++i) {
    ratios.push_back(
        content_change_ratio(traj.frames[i], traj.frames[i + 1], tau_pix));
  }

  FrameGroup first;
  for (int i = 0; i < n; ++i) first.frames.push_back(i);
  for (int i = 0; i + 1 < n; ++i) first.change_ratios.push_back(ratios[i]);
  manifest.stage1.push_back(std::move(first));

  // stage-2 groups are disjoint: accept qualifying windows earliest first
  // and resume after each accepted one
  int start = 0;
  while (start + n <= count) {
    bool all_changing = n >= 2;
    for (int i = start; i + 1 < start + n; ++i) {
      if (ratios[i] <= tau_change) {
        all_changing = false;
        break;
      }
    }
    if (!all_changing) {
      ++start;
      continue;
    }
    FrameGroup group;
    for (int i = start; i < start + n; ++i) group.frames.push_back(i);
    for (int i = start; i + 1 < start + n; ++i) {
      group.change_ratios.push_back(ratios[i]);
    }
    manifest.stage2.push_back(std::move(group));
    start += n;
  }
  return manifest;
}

}  // namespace panogeo
