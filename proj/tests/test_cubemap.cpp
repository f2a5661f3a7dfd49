// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "panogeo/cubemap.hpp"
#include "panogeo/errors.hpp"
#include "panogeo/metrics.hpp"
#include "test_util.hpp"

using namespace panogeo;

namespace {

constexpr double kPi = std::numbers::pi;

CubeMap distinct_faces(int edge) {
  CubeMap cube(edge, 1);
  const float colors[6] = {0.1f, 0.2f, 0.3f, 0.4f, 0.5f, 0.6f};
  for (int f = 0; f < 6; ++f) {
    cube.faces[f] = Image::constant(edge, edge, 1, colors[f]);
  }
  return cube;
}

CubeMap smooth_cube(int edge, int channels) {
  CubeMap cube(edge, channels);
  for (int f = 0; f < 6; ++f) {
    for (int j = 0; j < edge; ++j) {
      for (int i = 0; i < edge; ++i) {
        const Eigen::Vector3d d =
            cube_face_dir(static_cast<CubeFace>(f), i + 0.5, j + 0.5, edge);
        for (int c = 0; c < channels; ++c) {
          cube.faces[f].at(i, j, c) = testutil::direction_pattern(d, c);
        }
      }
    }
  }
  return cube;
}

}  // namespace

TEST_CASE("face axes form the documented frame") {
  CHECK((cube_face_axis(CubeFace::Front) - Eigen::Vector3d(0, 0, 1)).norm() < 1e-15);
  CHECK((cube_face_axis(CubeFace::Back) - Eigen::Vector3d(0, 0, -1)).norm() < 1e-12);
  CHECK((cube_face_axis(CubeFace::Left) - Eigen::Vector3d(-1, 0, 0)).norm() < 1e-12);
  CHECK((cube_face_axis(CubeFace::Right) - Eigen::Vector3d(1, 0, 0)).norm() < 1e-12);
  CHECK((cube_face_axis(CubeFace::Up) - Eigen::Vector3d(0, 1, 0)).norm() < 1e-12);
  CHECK((cube_face_axis(CubeFace::Down) - Eigen::Vector3d(0, -1, 0)).norm() < 1e-12);
}

TEST_CASE("stitching distinct constant faces places them by direction") {
  const CubeMap cube = distinct_faces(32);
  const ErpImage erp = cubemap_to_erp(cube, 64);

  // image center looks down +z
  CHECK(erp.at(64, 32, 0) == doctest::Approx(0.1f));
  // the top row is the up face everywhere
  for (int x = 0; x < 128; x += 7) {
    CHECK(erp.at(x, 0, 0) == doctest::Approx(0.5f));
  }
  // the bottom row is the down face everywhere
  for (int x = 0; x < 128; x += 7) {
    CHECK(erp.at(x, 63, 0) == doctest::Approx(0.6f));
  }
  // theta = +pi/2 is +x, the right face; it sits a quarter turn left of center
  CHECK(erp.at(32, 32, 0) == doctest::Approx(0.4f));
  // theta = -pi/2 is -x, the left face
  CHECK(erp.at(96, 32, 0) == doctest::Approx(0.3f));
  // the seam column is the back face
  CHECK(erp.at(0, 32, 0) == doctest::Approx(0.2f));
}

TEST_CASE("identical constant faces stitch to a constant panorama") {
  CubeMap cube(16, 2);
  for (auto& f : cube.faces) f = Image::constant(16, 16, 2, 0.77f);
  const ErpImage erp = cubemap_to_erp(cube, 32);
  for (float v : erp.data()) CHECK(v == doctest::Approx(0.77f));
}

TEST_CASE("cubemap -> erp -> cubemap round trip stays above 40 dB") {
  const CubeMap cube = smooth_cube(256, 1);
  const ErpImage erp = cubemap_to_erp(cube, 512);
  const CubeMap back = erp_to_cubemap(erp, 256);
  for (int f = 0; f < 6; ++f) {
    const double db = psnr(cube.faces[f], back.faces[f]);
    INFO("face ", kCubeFaceNames[f]);
    CHECK(db > 40.0);
  }
}

TEST_CASE("perspective render at 90 degrees reproduces cube faces") {
  const int edge = 128;
  const CubeMap cube = smooth_cube(edge, 1);
  const ErpImage erp = cubemap_to_erp(cube, 256);

  SUBCASE("identity rotation gives the front face") {
    const Image view = erp_to_perspective(erp, kPi / 2,
                                          Eigen::Matrix3d::Identity(), edge, edge);
    CHECK(psnr(view, cube.face(CubeFace::Front)) > 40.0);
  }

  SUBCASE("a 90 degree yaw gives the right face") {
    const Image view =
        erp_to_perspective(erp, kPi / 2, testutil::rot_y(kPi / 2), edge, edge);
    CHECK(psnr(view, cube.face(CubeFace::Right)) > 40.0);
  }
}

TEST_CASE("perspective render of constant faces is exact away from seams") {
  const CubeMap cube = distinct_faces(64);
  const ErpImage erp = cubemap_to_erp(cube, 128);
  const Image view = erp_to_perspective(erp, kPi / 2,
                                        Eigen::Matrix3d::Identity(), 64, 64);
  for (int j = 8; j < 56; ++j) {
    for (int i = 8; i < 56; ++i) {
      CHECK(view.at(i, j, 0) == doctest::Approx(0.1f).epsilon(1e-4));
    }
  }
}

TEST_CASE("a 1x1 perspective render equals the forward sample") {
  const ErpImage erp = testutil::make_smooth_erp(64, 32, 3);
  const Image view = erp_to_perspective(erp, kPi / 2,
                                        Eigen::Matrix3d::Identity(), 1, 1);
  const Eigen::Vector2d fwd = sphere_to_pixel(cart_to_sphere({0, 0, 1}), 64, 32);
  const auto expected = erp.sample(fwd.x(), fwd.y());
  for (int c = 0; c < 3; ++c) {
    CHECK(view.at(0, 0, c) == doctest::Approx(expected[c]));
  }
}

TEST_CASE("erp_to_perspective validates its inputs") {
  const ErpImage erp = testutil::make_smooth_erp(32, 16, 1);
  CHECK_THROWS_AS(erp_to_perspective(erp, 0.0, Eigen::Matrix3d::Identity(), 8, 8),
                  validation_error);
  CHECK_THROWS_AS(erp_to_perspective(erp, kPi, Eigen::Matrix3d::Identity(), 8, 8),
                  validation_error);
  Eigen::Matrix3d skewed = Eigen::Matrix3d::Identity();
  skewed(0, 1) = 0.1;
  CHECK_THROWS_AS(erp_to_perspective(erp, 1.0, skewed, 8, 8), validation_error);
}
