// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

#include "panogeo/encoding.hpp"
#include "panogeo/erp.hpp"
#include "panogeo/pose.hpp"

namespace panogeo {

/// Feature maps share the panoramic layout: w = 2h, wrap-aware sampling.
using FeatureGrid = ErpImage;

enum class ProjectionMode { Identity, Custom };

/// Linear maps applied to enhanced vectors [feature | encoding]. Identity
/// mode uses the enhanced vector itself for queries and keys and the raw
/// feature block for values, which keeps constant fields fixed points of the
/// module.
struct Projections {
  ProjectionMode mode = ProjectionMode::Identity;
  Eigen::MatrixXd w_q;
  Eigen::MatrixXd w_k;
  Eigen::MatrixXd w_v;
};

struct AttentionConfig {
  int k_refs = 2;
  int samples = 10;
  double z_near = 0.1;
  double z_far = 10.0;
  EncodingConfig enc;
  Projections proj;
};

/// N feature grids with their camera poses and one attention configuration.
struct ViewSet {
  std::vector<FeatureGrid> grids;
  std::vector<Pose> poses;
  AttentionConfig config;

  int views() const { return static_cast<int>(grids.size()); }
  void validate() const;  // throws validation_error
};

// The k views (excluding target) with the smallest camera-center distance;
// ties break toward the lower index. Result is sorted ascending.
std::vector<int> select_reference_views(int target, std::span<const Pose> poses,
                                        int k);

/// Enhanced key/value vectors for every target pixel: k_refs * samples
/// entries of dimension channels + encoded_size, plus where each sample
/// landed and whether it was projectable.
struct GatherResult {
  int h = 0;
  int w = 0;
  int k_refs = 0;
  int samples = 0;
  int dim = 0;

  std::vector<double> enhanced;       // [pixel][entry][dim]
  std::vector<std::uint8_t> valid;    // [pixel][entry]
  std::vector<Eigen::Vector2d> reproj;  // [pixel][entry]

  int entries_per_pixel() const { return k_refs * samples; }
  const double* entry(int pixel, int e) const {
    return enhanced.data() +
           (static_cast<size_t>(pixel) * entries_per_pixel() + e) * dim;
  }
};

GatherResult gather_kv(int target, std::span<const int> refs,
                       const ViewSet& viewset);

// Numerically stable softmax over q . k_i / sqrt(d); rows of `keys` are the
// key vectors. Entries whose mask byte is zero get weight zero; weights over
// the rest sum to one. An empty mask means all entries participate.
Eigen::VectorXd softmax_weights(const Eigen::VectorXd& q,
                                const Eigen::MatrixXd& keys,
                                std::span<const std::uint8_t> mask = {});

// softmax(q k^T / sqrt(d)) v with rows of `values` as the value vectors.
Eigen::VectorXd attention(const Eigen::VectorXd& q, const Eigen::MatrixXd& keys,
                          const Eigen::MatrixXd& values,
                          std::span<const std::uint8_t> mask = {});

struct ViewStats {
  std::vector<int> references;
  double entropy_mean = 0.0;
  double weight_min = 0.0;
  double weight_max = 0.0;
  std::int64_t invalid_samples = 0;
};

struct ForwardResult {
  std::vector<FeatureGrid> outputs;
  std::vector<ViewStats> stats;
};

// Runs the attention module with every view as target once. Deterministic:
// per-pixel reductions have a fixed order, so the result is independent of
// n_threads.
ForwardResult epipolar_attention_forward(const ViewSet& viewset,
                                         int n_threads = 1);

}  // namespace panogeo
