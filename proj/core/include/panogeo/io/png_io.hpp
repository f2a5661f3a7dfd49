// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "panogeo/image.hpp"

namespace panogeo::io {

// 8-bit PNG in, floats in [0, 1] out. Gray maps to 1 channel, RGB/RGBA to 3
// (alpha dropped).
Image read_png(const std::filesystem::path& path);

// Writes 1-channel gray or 3-channel RGB, clamped to [0, 1] and rounded to
// 8 bits. Encoder settings are pinned so equal pixels give equal bytes.
void write_png(const std::filesystem::path& path, const Image& img);

}  // namespace panogeo::io
