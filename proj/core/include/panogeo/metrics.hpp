// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <utility>

#include "panogeo/erp.hpp"
#include "panogeo/image.hpp"
#include "panogeo/pose.hpp"

namespace panogeo {

// Reported PSNR is capped here so identical images stay representable.
inline constexpr double kPsnrCap = 99.0;

// 10*log10(1/MSE) for values in [0, 1]; identical inputs report the cap.
double psnr(const Image& a, const Image& b);
double psnr(const ErpImage& a, const ErpImage& b);

// Mean local SSIM over the valid region: 11x11 Gaussian window, sigma 1.5,
// K1 = 0.01, K2 = 0.03, dynamic range 1. Color inputs are converted to
// ITU-R 601 luma first. Requires both sides of the window to fit, so images
// must be at least 11x11.
double ssim(const Image& a, const Image& b);
double ssim(const ErpImage& a, const ErpImage& b);

// PSNR/SSIM between the first and last frame of a loop whose first and last
// poses coincide; throws validation_error when they do not.
std::pair<double, double> first_last_consistency(std::span<const ErpImage> frames,
                                                 std::span<const Pose> poses);

}  // namespace panogeo
