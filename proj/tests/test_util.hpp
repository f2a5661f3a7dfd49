// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "panogeo/erp.hpp"
#include "panogeo/pose.hpp"

namespace testutil {

namespace fs = std::filesystem;

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    const auto base = fs::temp_directory_path();
    path_ = base / ("panogeo_test_" + std::to_string(::getpid()) + "_" +
                    std::to_string(counter.fetch_add(1)));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline panogeo::Pose make_pose(const Eigen::Matrix3d& r,
                               const Eigen::Vector3d& t) {
  panogeo::Pose p;
  p.R = r;
  p.t = t;
  return p;
}

inline Eigen::Matrix3d rot_y(double a) {
  Eigen::Matrix3d r;
  r << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  return r;
}

inline Eigen::Matrix3d rot_x(double a) {
  Eigen::Matrix3d r;
  r << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
  return r;
}

inline Eigen::Matrix3d rot_z(double a) {
  Eigen::Matrix3d r;
  r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return r;
}

inline Eigen::Matrix3d random_rotation(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  return rot_y(angle(rng)) * rot_x(angle(rng)) * rot_z(angle(rng));
}

// Smooth, seam-continuous test pattern: a low-frequency function of the view
// direction, one value per channel.
inline float direction_pattern(const Eigen::Vector3d& d, int channel) {
  switch (channel % 3) {
    case 0:
      return 0.5f + 0.25f * static_cast<float>(std::sin(2.0 * d.x()) * std::cos(d.y()));
    case 1:
      return 0.5f + 0.25f * static_cast<float>(std::sin(2.0 * d.y() + 0.7));
    default:
      return 0.5f + 0.25f * static_cast<float>(std::cos(2.0 * d.z() - 0.3));
  }
}

inline panogeo::ErpImage make_smooth_erp(int width, int height, int channels) {
  panogeo::ErpImage img(width, height, channels);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const Eigen::Vector3d d = panogeo::sphere_to_cart(
          panogeo::pixel_to_sphere(x + 0.5, y + 0.5, width, height));
      for (int c = 0; c < channels; ++c) {
        img.at(x, y, c) = direction_pattern(d, c);
      }
    }
  }
  return img;
}

inline panogeo::ErpImage make_random_erp(int width, int height, int channels,
                                         std::mt19937& rng) {
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  panogeo::ErpImage img(width, height, channels);
  for (float& v : img.data()) v = dist(rng);
  return img;
}

/// Captured stdout and exit code of one CLI invocation.
struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the binary named by the PANOGEO_CLI environment variable (or an
// explicit path) with the given arguments; stderr is discarded.
inline CliResult run_cli(const std::string& args,
                         const char* binary = nullptr) {
  const char* bin = binary ? binary : std::getenv("PANOGEO_CLI");
  if (!bin) return {};
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {};
  CliResult result;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.out.append(buf, n);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace testutil
