// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/attention.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "panogeo/errors.hpp"
#include "panogeo/ray.hpp"

namespace panogeo {

void ViewSet::validate() const {
  if (views() < 2) {
    throw validation_error("ViewSet: need at least 2 views");
  }
  if (poses.size() != grids.size()) {
    throw validation_error("ViewSet: pose count does not match grid count");
  }
  const int h = grids[0].height();
  const int w = grids[0].width();
  const int c = grids[0].channels();
  for (const auto& g : grids) {
    if (g.height() != h || g.width() != w || g.channels() != c) {
      throw validation_error("ViewSet: grids must share one shape");
    }
    if (!g.is_finite()) {
      throw validation_error("ViewSet: grids must be finite");
    }
  }
  for (const auto& p : poses) {
    if (!p.is_valid(1e-6)) {
      throw validation_error("ViewSet: pose rotation is not orthonormal");
    }
  }
  if (config.k_refs < 1 || config.k_refs > views() - 1) {
    throw validation_error("K exceeds available reference views");
  }
  if (config.samples < 2) {
    throw validation_error("ViewSet: need at least 2 ray samples");
  }
  if (!(config.z_near > 0.0) || !(config.z_far > config.z_near)) {
    throw validation_error("ViewSet: require 0 < z_near < z_far");
  }
  if (config.enc.l_ray < 1 || config.enc.l_depth < 1) {
    throw validation_error("ViewSet: encoding frequency counts must be >= 1");
  }
  if (config.proj.mode == ProjectionMode::Custom) {
    const int dim = c + config.enc.encoded_size();
    const auto& p = config.proj;
    if (p.w_q.cols() != dim || p.w_k.cols() != dim || p.w_v.cols() != dim) {
      throw validation_error(
          "ViewSet: projection columns must equal enhanced dimension " +
          std::to_string(dim));
    }
    if (p.w_q.rows() != p.w_k.rows()) {
      throw validation_error("ViewSet: w_q and w_k must share a row count");
    }
    if (p.w_q.rows() < 1 || p.w_v.rows() < 1) {
      throw validation_error("ViewSet: projections must have at least one row");
    }
  }
}

std::vector<int> select_reference_views(int target, std::span<const Pose> poses,
                                        int k) {
  const int n = static_cast<int>(poses.size());
  if (target < 0 || target >= n) {
    throw validation_error("select_reference_views: target out of range");
  }
  if (k < 1 || k > n - 1) {
    throw validation_error("K exceeds available reference views");
  }
  std::vector<std::pair<double, int>> order;
  order.reserve(n - 1);
  for (int i = 0; i < n; ++i) {
    if (i == target) continue;
    order.emplace_back((poses[i].t - poses[target].t).norm(), i);
  }
  std::sort(order.begin(), order.end());
  std::vector<int> refs(k);
  for (int i = 0; i < k; ++i) refs[i] = order[i].second;
  std::sort(refs.begin(), refs.end());
  return refs;
}

GatherResult gather_kv(int target, std::span<const int> refs,
                       const ViewSet& viewset) {
  viewset.validate();
  const int n = viewset.views();
  if (target < 0 || target >= n) {
    throw validation_error("gather_kv: target out of range");
  }
  for (int r : refs) {
    if (r < 0 || r >= n || r == target) {
      throw validation_error("gather_kv: invalid reference index");
    }
  }

  const auto& cfg = viewset.config;
  const FeatureGrid& tgrid = viewset.grids[target];
  const int h = tgrid.height();
  const int w = tgrid.width();
  const int channels = tgrid.channels();
  const int k_refs = static_cast<int>(refs.size());
  const int samples = cfg.samples;
  const int enc_ray = 12 * cfg.enc.l_ray;
  const int enc_depth = 2 * cfg.enc.l_depth;

  GatherResult out;
  out.h = h;
  out.w = w;
  out.k_refs = k_refs;
  out.samples = samples;
  out.dim = channels + enc_ray + enc_depth;
  const size_t n_entries = static_cast<size_t>(h) * w * k_refs * samples;
  out.enhanced.assign(n_entries * out.dim, 0.0);
  out.valid.assign(n_entries, 0);
  out.reproj.assign(n_entries, Eigen::Vector2d::Zero());

  // The depth grid is shared by every pixel, so its encoding is too.
  const double step = (cfg.z_far - cfg.z_near) / (samples - 1);
  std::vector<double> depth_enc(static_cast<size_t>(samples) * enc_depth);
  std::vector<double> depths(samples);
  for (int j = 0; j < samples; ++j) {
    depths[j] = cfg.z_near + j * step;
    harmonic(std::span<const double>(&depths[j], 1), cfg.enc.l_depth,
             cfg.enc.base,
             std::span<double>(depth_enc.data() + static_cast<size_t>(j) * enc_depth,
                               enc_depth));
  }

  std::vector<double> ray_enc(enc_ray);
  std::vector<float> feat(channels);
  for (int py = 0; py < h; ++py) {
    for (int px = 0; px < w; ++px) {
      const Ray ray = ray_for_pixel(viewset.poses[target],
                                    {px + 0.5, py + 0.5}, w, h);
      const PluckerCoords pl = plucker(ray);
      const Eigen::Matrix<double, 6, 1> stacked = pl.stacked();
      harmonic(std::span<const double>(stacked.data(), 6), cfg.enc.l_ray,
               cfg.enc.base, ray_enc);

      const size_t pixel = static_cast<size_t>(py) * w + px;
      for (int ki = 0; ki < k_refs; ++ki) {
        const Pose& rpose = viewset.poses[refs[ki]];
        const FeatureGrid& rgrid = viewset.grids[refs[ki]];
        for (int j = 0; j < samples; ++j) {
          const size_t e = pixel * k_refs * samples +
                           static_cast<size_t>(ki) * samples + j;
          double* dst = out.enhanced.data() + e * out.dim;

          const Eigen::Vector3d point = ray.origin + depths[j] * ray.dir;
          const Eigen::Vector3d cam = rpose.R.transpose() * (point - rpose.t);
          if (cam.norm() < 1e-12) {
            // Sample sits on the reference camera center: zero feature,
            // flagged invalid; the encoding block is still written so entry
            // layout stays uniform.
            std::copy(ray_enc.begin(), ray_enc.end(), dst + channels);
            std::copy(depth_enc.begin() + static_cast<size_t>(j) * enc_depth,
                      depth_enc.begin() + static_cast<size_t>(j + 1) * enc_depth,
                      dst + channels + enc_ray);
            continue;
          }
          const Eigen::Vector2d pix =
              sphere_to_pixel(cart_to_sphere(cam), w, h);
          rgrid.sample(pix.x(), pix.y(), feat);
          for (int c = 0; c < channels; ++c) dst[c] = feat[c];
          std::copy(ray_enc.begin(), ray_enc.end(), dst + channels);
          std::copy(depth_enc.begin() + static_cast<size_t>(j) * enc_depth,
                    depth_enc.begin() + static_cast<size_t>(j + 1) * enc_depth,
                    dst + channels + enc_ray);
          out.valid[e] = 1;
          out.reproj[e] = pix;
        }
      }
    }
  }
  return out;
}

Eigen::VectorXd softmax_weights(const Eigen::VectorXd& q,
                                const Eigen::MatrixXd& keys,
                                std::span<const std::uint8_t> mask) {
  if (keys.cols() != q.size()) {
    throw validation_error("softmax_weights: key dimension mismatch");
  }
  if (!mask.empty() && static_cast<Eigen::Index>(mask.size()) != keys.rows()) {
    throw validation_error("softmax_weights: mask size mismatch");
  }
  const Eigen::Index n = keys.rows();
  const double scale = 1.0 / std::sqrt(static_cast<double>(q.size()));
  Eigen::VectorXd w(n);

  double max_score = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!mask.empty() && !mask[i]) {
      w[i] = -std::numeric_limits<double>::infinity();
      continue;
    }
    w[i] = keys.row(i).dot(q) * scale;
    max_score = std::max(max_score, w[i]);
  }
  if (!std::isfinite(max_score)) {
    return Eigen::VectorXd::Zero(n);  // every entry masked
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    w[i] = std::isfinite(w[i]) ? std::exp(w[i] - max_score) : 0.0;
    sum += w[i];
  }
  return w / sum;
}

Eigen::VectorXd attention(const Eigen::VectorXd& q, const Eigen::MatrixXd& keys,
                          const Eigen::MatrixXd& values,
                          std::span<const std::uint8_t> mask) {
  if (values.rows() != keys.rows()) {
    throw validation_error("attention: key/value counts differ");
  }
  return values.transpose() * softmax_weights(q, keys, mask);
}

namespace {

struct ThreadAccum {
  double weight_min = std::numeric_limits<double>::infinity();
  double weight_max = 0.0;
  std::int64_t invalid = 0;
};

}  // namespace

ForwardResult epipolar_attention_forward(const ViewSet& viewset, int n_threads) {
  viewset.validate();
  if (n_threads < 1) {
    throw validation_error("epipolar_attention_forward: n_threads must be >= 1");
  }

  const auto& cfg = viewset.config;
  const int n = viewset.views();
  const int h = viewset.grids[0].height();
  const int w = viewset.grids[0].width();
  const int channels = viewset.grids[0].channels();
  const int dim = channels + cfg.enc.encoded_size();
  const bool identity = cfg.proj.mode == ProjectionMode::Identity;
  const int out_channels =
      identity ? channels : static_cast<int>(cfg.proj.w_v.rows());

  // The query's depth slot encodes z = 0, the camera-side end of the ray.
  std::vector<double> query_depth_enc =
      harmonic(0.0, cfg.enc.l_depth, cfg.enc.base);

  ForwardResult result;
  result.outputs.reserve(n);
  result.stats.assign(n, {});
  for (int t = 0; t < n; ++t) {
    result.outputs.emplace_back(w, h, out_channels);
  }

  for (int t = 0; t < n; ++t) {
    const auto refs = select_reference_views(t, viewset.poses, cfg.k_refs);
    const GatherResult gathered = gather_kv(t, refs, viewset);
    const int per_pixel = gathered.entries_per_pixel();
    FeatureGrid& out = result.outputs[t];
    const FeatureGrid& tgrid = viewset.grids[t];

    // Entropy is accumulated per row and reduced in a fixed order afterwards
    // so the reported stats do not depend on the thread count.
    std::vector<double> row_entropy(h, 0.0);
    std::vector<ThreadAccum> accums(n_threads);
    auto run_rows = [&](int row_begin, int row_end, ThreadAccum& acc) {
      Eigen::VectorXd q_enh(dim);
      Eigen::MatrixXd keys(per_pixel, dim);
      Eigen::VectorXd q;
      Eigen::MatrixXd keys_proj;
      Eigen::MatrixXd values;
      for (int py = row_begin; py < row_end; ++py) {
        double entropy_row = 0.0;
        for (int px = 0; px < w; ++px) {
          const size_t pixel = static_cast<size_t>(py) * w + px;

          for (int c = 0; c < channels; ++c) q_enh[c] = tgrid.at(px, py, c);
          const Ray ray =
              ray_for_pixel(viewset.poses[t], {px + 0.5, py + 0.5}, w, h);
          const Eigen::Matrix<double, 6, 1> stacked = plucker(ray).stacked();
          harmonic(std::span<const double>(stacked.data(), 6), cfg.enc.l_ray,
                   cfg.enc.base,
                   std::span<double>(q_enh.data() + channels, 12 * cfg.enc.l_ray));
          std::copy(query_depth_enc.begin(), query_depth_enc.end(),
                    q_enh.data() + channels + 12 * cfg.enc.l_ray);

          for (int e = 0; e < per_pixel; ++e) {
            keys.row(e) = Eigen::Map<const Eigen::VectorXd>(
                gathered.entry(static_cast<int>(pixel), e), dim);
          }
          const std::span<const std::uint8_t> mask(
              gathered.valid.data() + pixel * per_pixel,
              static_cast<size_t>(per_pixel));

          Eigen::VectorXd weights;
          Eigen::VectorXd o;
          if (identity) {
            weights = softmax_weights(q_enh, keys, mask);
            o = keys.leftCols(channels).transpose() * weights;
          } else {
            q = cfg.proj.w_q * q_enh;
            keys_proj = keys * cfg.proj.w_k.transpose();
            values = keys * cfg.proj.w_v.transpose();
            weights = softmax_weights(q, keys_proj, mask);
            o = values.transpose() * weights;
          }
          for (int c = 0; c < out_channels; ++c) {
            out.at(px, py, c) = static_cast<float>(o[c]);
          }

          double entropy = 0.0;
          for (int e = 0; e < per_pixel; ++e) {
            const double wv = weights[e];
            if (wv > 0.0) {
              entropy -= wv * std::log(wv);
              acc.weight_min = std::min(acc.weight_min, wv);
              acc.weight_max = std::max(acc.weight_max, wv);
            }
            if (!mask[e]) ++acc.invalid;
          }
          entropy_row += entropy;
        }
        row_entropy[py] = entropy_row;
      }
    };

    if (n_threads == 1) {
      run_rows(0, h, accums[0]);
    } else {
      std::vector<std::thread> pool;
      const int rows_per = (h + n_threads - 1) / n_threads;
      for (int ti = 0; ti < n_threads; ++ti) {
        const int begin = ti * rows_per;
        const int end = std::min(h, begin + rows_per);
        if (begin >= end) break;
        pool.emplace_back(run_rows, begin, end, std::ref(accums[ti]));
      }
      for (auto& th : pool) th.join();
    }

    ViewStats stats;
    stats.references = refs;
    stats.weight_min = std::numeric_limits<double>::infinity();
    for (const auto& acc : accums) {
      stats.weight_min = std::min(stats.weight_min, acc.weight_min);
      stats.weight_max = std::max(stats.weight_max, acc.weight_max);
      stats.invalid_samples += acc.invalid;
    }
    double entropy_total = 0.0;
    for (double e : row_entropy) entropy_total += e;
    stats.entropy_mean = entropy_total / (static_cast<double>(h) * w);
    if (!std::isfinite(stats.weight_min)) stats.weight_min = 0.0;
    result.stats[t] = stats;
  }
  return result;
}

}  // namespace panogeo
