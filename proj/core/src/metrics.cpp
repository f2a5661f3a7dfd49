// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/metrics.hpp"

#include <cmath>
#include <vector>

#include "panogeo/errors.hpp"

namespace panogeo {

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

void check_same_shape(const Image& a, const Image& b, const char* op) {
  if (a.width() != b.width() || a.height() != b.height() ||
      a.channels() != b.channels()) {
    throw validation_error(std::string(op) + ": image shapes differ");
  }
}

std::vector<double> luma(const Image& img) {
  std::vector<double> out(static_cast<size_t>(img.width()) * img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      double v;
      if (img.channels() >= 3) {
        v = 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) +
            0.114 * img.at(x, y, 2);
      } else {
        v = img.at(x, y, 0);
      }
      out[static_cast<size_t>(y) * img.width() + x] = v;
    }
  }
  return out;
}

std::vector<double> gaussian_kernel() {
  std::vector<double> k(kWindow);
  const int half = kWindow / 2;
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double d = i - half;
    k[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

// Separable Gaussian filter, valid region only.
std::vector<double> filter_valid(const std::vector<double>& in, int w, int h,
                                 const std::vector<double>& k, int& out_w,
                                 int& out_h) {
  const int half = kWindow / 2;
  out_w = w - 2 * half;
  out_h = h - 2 * half;
  std::vector<double> horiz(static_cast<size_t>(out_w) * h, 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        acc += k[i] * in[static_cast<size_t>(y) * w + x + i];
      }
      horiz[static_cast<size_t>(y) * out_w + x] = acc;
    }
  }
  std::vector<double> out(static_cast<size_t>(out_w) * out_h, 0.0);
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        acc += k[i] * horiz[static_cast<size_t>(y + i) * out_w + x];
      }
      out[static_cast<size_t>(y) * out_w + x] = acc;
    }
  }
  return out;
}

}  // namespace

double psnr(const Image& a, const Image& b) {
  check_same_shape(a, b, "psnr");
  const auto da = a.data();
  const auto db = b.data();
  double mse = 0.0;
  for (size_t i = 0; i < da.size(); ++i) {
    const double d = static_cast<double>(da[i]) - static_cast<double>(db[i]);
    mse += d * d;
  }
  mse /= static_cast<double>(da.size());
  if (mse <= 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(1.0 / mse));
}

double psnr(const ErpImage& a, const ErpImage& b) {
  return psnr(a.image(), b.image());
}

double ssim(const Image& a, const Image& b) {
  check_same_shape(a, b, "ssim");
  if (a.width() < kWindow || a.height() < kWindow) {
    throw validation_error("ssim: images must be at least 11x11");
  }
  const int w = a.width();
  const int h = a.height();
  const std::vector<double> la = luma(a);
  const std::vector<double> lb = luma(b);

  std::vector<double> aa(la.size()), bb(la.size()), ab(la.size());
  for (size_t i = 0; i < la.size(); ++i) {
    aa[i] = la[i] * la[i];
    bb[i] = lb[i] * lb[i];
    ab[i] = la[i] * lb[i];
  }

  const auto kernel = gaussian_kernel();
  int vw = 0, vh = 0;
  const auto mu_a = filter_valid(la, w, h, kernel, vw, vh);
  const auto mu_b = filter_valid(lb, w, h, kernel, vw, vh);
  const auto m_aa = filter_valid(aa, w, h, kernel, vw, vh);
  const auto m_bb = filter_valid(bb, w, h, kernel, vw, vh);
  const auto m_ab = filter_valid(ab, w, h, kernel, vw, vh);

  double total = 0.0;
  for (size_t i = 0; i < mu_a.size(); ++i) {
    const double var_a = m_aa[i] - mu_a[i] * mu_a[i];
    const double var_b = m_bb[i] - mu_b[i] * mu_b[i];
    const double cov = m_ab[i] - mu_a[i] * mu_b[i];
    const double num = (2.0 * mu_a[i] * mu_b[i] + kC1) * (2.0 * cov + kC2);
    const double den =
        (mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + kC1) * (var_a + var_b + kC2);
    total += num / den;
  }
  return total / static_cast<double>(mu_a.size());
}

double ssim(const ErpImage& a, const ErpImage& b) {
  return ssim(a.image(), b.image());
}

std::pair<double, double> first_last_consistency(
    std::span<const ErpImage> frames, std::span<const Pose> poses) {
  if (frames.size() < 2 || poses.size() != frames.size()) {
    throw validation_error("first_last_consistency: need matching frames/poses");
  }
  const Pose& first = poses.front();
  const Pose& last = poses.back();
  if ((first.R - last.R).norm() > 1e-9 || (first.t - last.t).norm() > 1e-9) {
    throw validation_error(
        "first_last_consistency: first and last poses must coincide");
  }
  return {psnr(frames.front(), frames.back()), ssim(frames.front(), frames.back())};
}

}  // namespace panogeo
