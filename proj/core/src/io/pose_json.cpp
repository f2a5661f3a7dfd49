// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/io/pose_json.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <fstream>

#include <json.hpp>

#include "panogeo/errors.hpp"
#include "panogeo/io/tnsr.hpp"

namespace panogeo::io {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw io_error("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

Eigen::Matrix3d snap_to_rotation(const Eigen::Matrix3d& m) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < 0.0) {
    Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
    flip(2, 2) = -1.0;
    r = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return r;
}

Eigen::MatrixXd load_matrix(const std::filesystem::path& path) {
  const Tensor t = read_tnsr(path);
  if (t.dims.size() != 2) {
    throw validation_error("projection tensor must be 2-D: " + path.string());
  }
  Eigen::MatrixXd m(t.dims[0], t.dims[1]);
  for (std::uint64_t r = 0; r < t.dims[0]; ++r) {
    for (std::uint64_t c = 0; c < t.dims[1]; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          t.data[r * t.dims[1] + c];
    }
  }
  return m;
}

}  // namespace

std::vector<Pose> read_poses(const std::filesystem::path& path) {
  const json j = load_json(path);
  if (!j.is_array()) {
    throw validation_error("pose file must be a JSON array: " + path.string());
  }
  std::vector<Pose> poses;
  poses.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 4) {
      throw validation_error("pose must be a 4x4 matrix: " + path.string());
    }
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r) {
      if (!entry[r].is_array() || entry[r].size() != 4) {
        throw validation_error("pose must be a 4x4 matrix: " + path.string());
      }
      for (int c = 0; c < 4; ++c) m(r, c) = entry[r][c].get<double>();
    }
    if ((m.row(3) - Eigen::RowVector4d(0, 0, 0, 1)).norm() > 1e-9) {
      throw validation_error("pose bottom row must be [0,0,0,1]: " +
                             path.string());
    }
    const Eigen::Matrix3d r = m.topLeftCorner<3, 3>();
    if ((r.transpose() * r - Eigen::Matrix3d::Identity()).norm() > 1e-6 ||
        r.determinant() < 0.0) {
      throw validation_error("pose rotation is not orthonormal: " +
                             path.string());
    }
    Pose pose;
    pose.R = snap_to_rotation(r);
    pose.t = m.topRightCorner<3, 1>();
    poses.push_back(pose);
  }
  return poses;
}

void write_poses(const std::filesystem::path& path,
                 std::span<const Pose> poses) {
  json out = json::array();
  for (const auto& pose : poses) {
    json m = json::array();
    for (int r = 0; r < 3; ++r) {
      m.push_back({pose.R(r, 0), pose.R(r, 1), pose.R(r, 2), pose.t(r)});
    }
    m.push_back({0.0, 0.0, 0.0, 1.0});
    out.push_back(m);
  }
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw io_error("cannot write " + path.string());
  file << out.dump(2) << '\n';
}

AttentionConfig read_attention_config(const std::filesystem::path& path) {
  const json j = load_json(path);
  if (!j.is_object()) {
    throw validation_error("attention config must be a JSON object: " +
                           path.string());
  }
  AttentionConfig cfg;
  cfg.k_refs = j.value("K", cfg.k_refs);
  cfg.samples = j.value("S", cfg.samples);
  cfg.z_near = j.value("z_near", cfg.z_near);
  cfg.z_far = j.value("z_far", cfg.z_far);
  cfg.enc.l_ray = j.value("L_r", cfg.enc.l_ray);
  cfg.enc.l_depth = j.value("L_z", cfg.enc.l_depth);
  cfg.enc.base = j.value("base", cfg.enc.base);

  const std::string mode = j.value("projection_mode", "identity");
  if (mode == "identity") {
    cfg.proj.mode = ProjectionMode::Identity;
  } else if (mode == "custom") {
    cfg.proj.mode = ProjectionMode::Custom;
    for (const char* key : {"w_q", "w_k", "w_v"}) {
      if (!j.contains(key)) {
        throw validation_error(std::string("custom projection needs ") + key +
                               ": " + path.string());
      }
    }
    const auto base_dir = path.parent_path();
    cfg.proj.w_q = load_matrix(base_dir / j.at("w_q").get<std::string>());
    cfg.proj.w_k = load_matrix(base_dir / j.at("w_k").get<std::string>());
    cfg.proj.w_v = load_matrix(base_dir / j.at("w_v").get<std::string>());
  } else {
    throw validation_error("unknown projection_mode '" + mode + "' in " +
                           path.string());
  }
  return cfg;
}

}  // namespace panogeo::io
