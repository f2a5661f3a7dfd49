// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <vector>

#include "panogeo/attention.hpp"
#include "panogeo/pose.hpp"

namespace panogeo::io {

// Pose files hold a JSON array of 4x4 row-major camera-to-world matrices with
// bottom row [0, 0, 0, 1]. Rotations are validated to 1e-6 and then snapped to
// the nearest exact rotation.
std::vector<Pose> read_poses(const std::filesystem::path& path);
void write_poses(const std::filesystem::path& path, std::span<const Pose> poses);

// Attention config JSON: {K, S, z_near, z_far, L_r, L_z, base,
// projection_mode}; projection_mode is "identity" or "custom" with w_q/w_k/w_v
// naming 2-D .tnsr files. Missing keys keep their defaults.
AttentionConfig read_attention_config(const std::filesystem::path& path);

}  // namespace panogeo::io
