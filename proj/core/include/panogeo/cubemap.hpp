// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <array>
#include <string_view>

#include "panogeo/erp.hpp"
#include "panogeo/image.hpp"

namespace panogeo {

// Face order is part of the on-disk layout (stitch reads <name>.png per face).
enum class CubeFace { Front = 0, Back, Left, Right, Up, Down };

inline constexpr std::array<std::string_view, 6> kCubeFaceNames = {
    "front", "back", "left", "right", "up", "down"};

/// Six square 90-degree faces in a right-handed, y-up, z-forward frame.
///
/// Face axes (world direction of the face center):
///   front +z   back -z   left -x   right +x   up +y   down -y
/// Within a face, moving right in the image heads toward decreasing azimuth
/// and moving down heads toward decreasing elevation, matching the
/// equirectangular mapping; the local pixel direction of face coords
/// (u, v) in [-1, 1]^2 is normalize((-u, -v, 1)) rotated by the face rotation.
struct CubeMap {
  CubeMap() = default;
  CubeMap(int edge, int channels);

  int edge = 0;
  int channels = 0;
  std::array<Image, 6> faces;

  Image& face(CubeFace f) { return faces[static_cast<int>(f)]; }
  const Image& face(CubeFace f) const { return faces[static_cast<int>(f)]; }
};

// Camera-to-face rotation: world_dir = rotation * local_pinhole_dir.
Eigen::Matrix3d cube_face_rotation(CubeFace face);

// Outward axis of a face (its center direction).
Eigen::Vector3d cube_face_axis(CubeFace face);

// World direction of continuous face coordinates (fx, fy) in [0, edge].
Eigen::Vector3d cube_face_dir(CubeFace face, double fx, double fy, int edge);

// Stitches six faces into a 2H x H equirectangular image: every output pixel
// picks the face whose axis is closest to its direction and samples it
// bilinearly.
ErpImage cubemap_to_erp(const CubeMap& cube, int height);

// Resamples an equirectangular image onto six square faces of the given edge.
CubeMap erp_to_cubemap(const ErpImage& img, int edge);

// Pinhole render of the panorama. fov is the horizontal field of view in
// radians, in (0, pi); the vertical extent scales by height/width. rot is the
// camera-to-world rotation and must be orthonormal.
Image erp_to_perspective(const ErpImage& img, double fov,
                         const Eigen::Matrix3d& rot, int width, int height);

}  // namespace panogeo
