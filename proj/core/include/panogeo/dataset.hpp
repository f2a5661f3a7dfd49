// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "panogeo/erp.hpp"
#include "panogeo/pose.hpp"

namespace panogeo {

/// One rendered panorama with its single-channel depth map (meters, 0 marks
/// invalid geometry) and camera pose.
struct Frame {
  ErpImage color;
  ErpImage depth;
  Pose pose;
  std::string caption;
};

struct Trajectory {
  std::string scene_id;
  std::vector<Frame> frames;
};

/// Color splatted into another viewpoint plus a per-pixel coverage mask.
struct WarpResult {
  ErpImage color;
  std::vector<std::uint8_t> mask;  // row-major, 1 where a splat landed
};

struct FrameGroup {
  std::vector<int> frames;
  std::vector<double> change_ratios;  // consecutive-pair ratios inside the group
};

struct SplitManifest {
  std::vector<FrameGroup> stage1;  // near-static groups
  std::vector<FrameGroup> stage2;  // content-changing groups
};

// Fraction of exactly-zero pixels in a 1-channel depth map.
double zero_depth_ratio(const ErpImage& depth);

// Forward-splats every src pixel with depth > 0 into the destination
// viewpoint; nearer spherical depth wins. Uncovered pixels stay masked out.
WarpResult warp_frame(const Frame& src, const Pose& dst_pose);

// Warps b into a's viewpoint with b's own depth, then counts the fraction of
// pixels that changed: covered pixels whose max-channel difference exceeds
// tau_pix, plus every uncovered pixel.
double content_change_ratio(const Frame& a, const Frame& b, double tau_pix);

// Stage 1 takes the first n frames (minimal motion). Stage 2 takes n-frame
// windows whose consecutive change ratios all exceed tau_change; windows are
// packed greedily from the left so groups in a stage never overlap.
SplitManifest split_trajectory(const Trajectory& traj, int n, double tau_pix,
                               double tau_change = 0.40);

}  // namespace panogeo
