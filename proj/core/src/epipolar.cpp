// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/epipolar.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "panogeo/errors.hpp"

namespace panogeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEpsTranslation = 1e-9;  // meters
constexpr double kEpsCross = 1e-9;        // on unit-scaled inputs
constexpr double kEpsPolar = 1e-9;

}  // namespace

const char* to_string(EpipolarDegeneracy d) {
  switch (d) {
    case EpipolarDegeneracy::Regular:
      return "regular";
    case EpipolarDegeneracy::PureRotation:
      return "pure_rotation";
    case EpipolarDegeneracy::Epipole:
      return "epipole";
    case EpipolarDegeneracy::PolarCircle:
      return "polar_circle";
  }
  return "unknown";
}

double EpipolarPlane::a1() const {
  if (!has_quotient()) {
    throw degeneracy_error("epipolar plane has no quotient coefficients");
  }
  return n.x() / n.z();
}

double EpipolarPlane::a2() const {
  if (!has_quotient()) {
    throw degeneracy_error("epipolar plane has no quotient coefficients");
  }
  return n.y() / n.z();
}

EpipolarPlane epipolar_plane(const Eigen::Vector2d& pix, const RelativePose& rel,
                             int width, int height) {
  EpipolarPlane plane;
  if (rel.t.norm() < kEpsTranslation) {
    plane.degeneracy = EpipolarDegeneracy::PureRotation;
    return plane;
  }

  const Eigen::Vector3d p =
      sphere_to_cart(pixel_to_sphere(pix.x(), pix.y(), width, height));
  const Eigen::Vector3d p_src = rel.R * p + rel.t;  // target ray point in source
  const Eigen::Vector3d o_src = rel.t;              // target center in source

  const Eigen::Vector3d cross =
      o_src.normalized().cross(p_src.normalized());
  if (cross.norm() < kEpsCross) {
    plane.degeneracy = EpipolarDegeneracy::Epipole;
    return plane;
  }
  plane.n = cross.normalized();
  plane.degeneracy = std::abs(plane.n.y()) < kEpsPolar
                         ? EpipolarDegeneracy::PolarCircle
                         : EpipolarDegeneracy::Regular;
  return plane;
}

double epipolar_y(const EpipolarPlane& plane, double x, int width, int height) {
  if (plane.degeneracy != EpipolarDegeneracy::Regular) {
    throw degeneracy_error(std::string("epipolar_y: plane is ") +
                           to_string(plane.degeneracy));
  }
  const double theta = pixel_to_sphere(x, height / 2.0, width, height).theta;
  const double phi = std::atan(
      -(plane.n.x() * std::sin(theta) + plane.n.z() * std::cos(theta)) /
      plane.n.y());
  return sphere_to_pixel({theta, phi}, width, height).y();
}

double epipolar_y_quotient(double a1, double a2, double x, int width,
                           int height) {
  const double ang = 2.0 * kPi * x / width;
  return height *
         (std::atan((a1 * std::sin(ang) - std::cos(ang)) / a2) / kPi + 0.5);
}

std::array<double, 2> polar_columns(const EpipolarPlane& plane, int width,
                                    int height) {
  if (plane.degeneracy != EpipolarDegeneracy::PolarCircle) {
    throw degeneracy_error("polar_columns: plane is not a polar circle");
  }
  // n_x sin(theta) + n_z cos(theta) = 0 has two solutions half a turn apart.
  const double theta0 = std::atan2(-plane.n.z(), plane.n.x());
  double theta1 = theta0 > 0.0 ? theta0 - kPi : theta0 + kPi;
  const double x0 = sphere_to_pixel({theta0, 0.0}, width, height).x();
  const double x1 = sphere_to_pixel({theta1, 0.0}, width, height).x();
  return {std::min(x0, x1), std::max(x0, x1)};
}

std::vector<Eigen::Vector2d> epipolar_oracle(const Eigen::Vector2d& pix,
                                             const RelativePose& rel,
                                             std::span<const double> depths,
                                             int width, int height) {
  const Eigen::Vector3d p =
      sphere_to_cart(pixel_to_sphere(pix.x(), pix.y(), width, height));
  std::vector<Eigen::Vector2d> out;
  out.reserve(depths.size());
  for (double z : depths) {
    if (!(z > 0.0)) {
      throw validation_error("epipolar_oracle: depths must be positive");
    }
    const Eigen::Vector3d mapped = rel.R * (z * p) + rel.t;
    if (mapped.norm() < 1e-12) continue;  // sample sits on the source center
    out.push_back(sphere_to_pixel(cart_to_sphere(mapped), width, height));
  }
  return out;
}

std::vector<Polyline> rasterize_epipolar(const EpipolarPlane& plane, int width,
                                         int height) {
  if (!plane.solvable()) {
    throw degeneracy_error(std::string("rasterize_epipolar: plane is ") +
                           to_string(plane.degeneracy));
  }
  std::vector<Polyline> lines;
  if (plane.degeneracy == EpipolarDegeneracy::PolarCircle) {
    const auto cols = polar_columns(plane, width, height);
    for (double cx : cols) {
      lines.push_back({{cx, 0.0}, {cx, static_cast<double>(height)}});
    }
    return lines;
  }
  Polyline line;
  line.reserve(width);
  for (int c = 0; c < width; ++c) {
    const double x = c + 0.5;
    line.push_back({x, epipolar_y(plane, x, width, height)});
  }
  lines.push_back(std::move(line));
  return lines;
}

void draw_polylines(ErpImage& img, const std::vector<Polyline>& lines,
                    std::span<const float> color) {
  if (static_cast<int>(color.size()) != img.channels()) {
    throw validation_error("draw_polylines: color channel count mismatch");
  }
  const auto put = [&](int x, int y) {
    if (y < 0 || y >= img.height()) return;
    const int xw = ((x % img.width()) + img.width()) % img.width();
    for (int c = 0; c < img.channels(); ++c) img.at(xw, y, c) = color[c];
  };
  const auto draw_segment = [&](const Eigen::Vector2d& a,
                                const Eigen::Vector2d& b) {
    const int x0 = static_cast<int>(std::floor(a.x()));
    const int y0 = static_cast<int>(std::floor(a.y()));
    const int x1 = static_cast<int>(std::floor(b.x()));
    const int y1 = static_cast<int>(std::floor(b.y()));
    const int steps = std::max({std::abs(x1 - x0), std::abs(y1 - y0), 1});
    for (int s = 0; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      put(static_cast<int>(std::lround(x0 + t * (x1 - x0))),
          static_cast<int>(std::lround(y0 + t * (y1 - y0))));
    }
  };
  for (const auto& line : lines) {
    for (size_t i = 0; i + 1 < line.size(); ++i) {
      draw_segment(line[i], line[i + 1]);
    }
    if (line.size() == 1) {
      put(static_cast<int>(std::floor(line[0].x())),
          static_cast<int>(std::floor(line[0].y())));
    }
  }
}

}  // namespace panogeo
