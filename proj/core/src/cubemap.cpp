// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/cubemap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "panogeo/errors.hpp"

namespace panogeo {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix3d rot_y(double a) {
  Eigen::Matrix3d r;
  r << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  return r;
}

Eigen::Matrix3d rot_x(double a) {
  Eigen::Matrix3d r;
  r << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
  return r;
}

}  // namespace

CubeMap::CubeMap(int edge, int channels) : edge(edge), channels(channels) {
  if (edge < 1 || channels < 1) {
    throw validation_error("CubeMap: edge and channels must be positive");
  }
  for (auto& f : faces) f = Image(edge, edge, channels);
}

Eigen::Matrix3d cube_face_rotation(CubeFace face) {
  switch (face) {
    case CubeFace::Front:
      return Eigen::Matrix3d::Identity();
    case CubeFace::Back:
      return rot_y(kPi);
    case CubeFace::Left:
      return rot_y(-kPi / 2);
    case CubeFace::Right:
      return rot_y(kPi / 2);
    case CubeFace::Up:
      return rot_x(-kPi / 2);
    case CubeFace::Down:
      return rot_x(kPi / 2);
  }
  throw validation_error("unknown cube face");
}

Eigen::Vector3d cube_face_axis(CubeFace face) {
  return cube_face_rotation(face) * Eigen::Vector3d(0, 0, 1);
}

Eigen::Vector3d cube_face_dir(CubeFace face, double fx, double fy, int edge) {
  const double u = 2.0 * fx / edge - 1.0;
  const double v = 2.0 * fy / edge - 1.0;
  const Eigen::Vector3d local = Eigen::Vector3d(-u, -v, 1.0).normalized();
  return cube_face_rotation(face) * local;
}

ErpImage cubemap_to_erp(const CubeMap& cube, int height) {
  if (height < 2) throw validation_error("cubemap_to_erp: height must be >= 2");
  for (const auto& f : cube.faces) {
    if (f.width() != cube.edge || f.height() != cube.edge ||
        f.channels() != cube.channels) {
      throw validation_error("cubemap_to_erp: inconsistent face shapes");
    }
  }

  std::array<Eigen::Matrix3d, 6> inv;  // world -> face-local
  std::array<Eigen::Vector3d, 6> axes;
  for (int f = 0; f < 6; ++f) {
    inv[f] = cube_face_rotation(static_cast<CubeFace>(f)).transpose();
    axes[f] = cube_face_axis(static_cast<CubeFace>(f));
  }

  const int width = 2 * height;
  ErpImage out(width, height, cube.channels);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const Eigen::Vector3d d =
          sphere_to_cart(pixel_to_sphere(x + 0.5, y + 0.5, width, height));
      int best = 0;
      double best_dot = axes[0].dot(d);
      for (int f = 1; f < 6; ++f) {
        const double dot = axes[f].dot(d);
        if (dot > best_dot) {
          best_dot = dot;
          best = f;
        }
      }
      const Eigen::Vector3d local = inv[best] * d;
      const double u = std::clamp(-local.x() / local.z(), -1.0, 1.0);
      const double v = std::clamp(-local.y() / local.z(), -1.0, 1.0);
      const double fx = (u + 1.0) * 0.5 * cube.edge;
      const double fy = (v + 1.0) * 0.5 * cube.edge;
      cube.faces[best].sample_clamped(fx, fy, out.pixel(x, y));
    }
  }
  return out;
}

CubeMap erp_to_cubemap(const ErpImage& img, int edge) {
  if (edge < 1) throw validation_error("erp_to_cubemap: edge must be >= 1");
  CubeMap cube(edge, img.channels());
  for (int f = 0; f < 6; ++f) {
    Image& face = cube.faces[f];
    for (int j = 0; j < edge; ++j) {
      for (int i = 0; i < edge; ++i) {
        const Eigen::Vector3d d =
            cube_face_dir(static_cast<CubeFace>(f), i + 0.5, j + 0.5, edge);
        const Eigen::Vector2d pix =
            sphere_to_pixel(cart_to_sphere(d), img.width(), img.height());
        img.sample(pix.x(), pix.y(), face.pixel(i, j));
      }
    }
  }
  return cube;
}

Image erp_to_perspective(const ErpImage& img, double fov,
                         const Eigen::Matrix3d& rot, int width, int height) {
  if (!(fov > 0.0 && fov < kPi)) {
    throw validation_error("erp_to_perspective: fov must lie in (0, pi)");
  }
  if ((rot.transpose() * rot - Eigen::Matrix3d::Identity()).norm() > 1e-6) {
    throw validation_error("erp_to_perspective: rotation is not orthonormal");
  }
  if (width < 1 || height < 1) {
    throw validation_error("erp_to_perspective: output size must be positive");
  }

  const double tx = std::tan(fov / 2.0);
  const double ty = tx * height / width;
  Image out(width, height, img.channels());
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      const double u = (2.0 * (i + 0.5) / width - 1.0) * tx;
      const double v = (2.0 * (j + 0.5) / height - 1.0) * ty;
      const Eigen::Vector3d d = rot * Eigen::Vector3d(-u, -v, 1.0).normalized();
      const Eigen::Vector2d pix =
          sphere_to_pixel(cart_to_sphere(d), img.width(), img.height());
      img.sample(pix.x(), pix.y(), out.pixel(i, j));
    }
  }
  return out;
}

}  // namespace panogeo
