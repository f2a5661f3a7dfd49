// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Multiplexed command-line front end. Machine-readable JSON goes to stdout,
// human messages to stderr. Exit codes: 0 success, 1 I/O, 2 geometric
// degeneracy, 3 validation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "panogeo/attention.hpp"
#include "panogeo/cubemap.hpp"
#include "panogeo/dataset.hpp"
#include "panogeo/epipolar.hpp"
#include "panogeo/errors.hpp"
#include "panogeo/io/png_io.hpp"
#include "panogeo/io/pose_json.hpp"
#include "panogeo/io/tnsr.hpp"
#include "panogeo/metrics.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace panogeo;

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

struct SizeArg {
  int width = 1024;
  int height = 512;
};

SizeArg parse_size(const std::string& text) {
  SizeArg s;
  const auto sep = text.find('x');
  if (sep == std::string::npos) {
    throw validation_error("--size expects WxH, got '" + text + "'");
  }
  try {
    s.width = std::stoi(text.substr(0, sep));
    s.height = std::stoi(text.substr(sep + 1));
  } catch (const std::exception&) {
    throw validation_error("--size expects WxH, got '" + text + "'");
  }
  return s;
}

Eigen::Vector2d parse_pixel(const std::string& text) {
  const auto sep = text.find(',');
  if (sep == std::string::npos) {
    throw validation_error("--pixel expects x,y, got '" + text + "'");
  }
  try {
    return {std::stod(text.substr(0, sep)), std::stod(text.substr(sep + 1))};
  } catch (const std::exception&) {
    throw validation_error("--pixel expects x,y, got '" + text + "'");
  }
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw validation_error("expected a comma-separated number list, got '" +
                             text + "'");
    }
  }
  if (out.empty()) {
    throw validation_error("expected a comma-separated number list, got '" +
                           text + "'");
  }
  return out;
}

Pose load_pose(const std::string& path, int index) {
  const auto poses = io::read_poses(path);
  if (index < 0 || index >= static_cast<int>(poses.size())) {
    throw validation_error("pose index " + std::to_string(index) +
                           " out of range for " + path);
  }
  return poses[static_cast<size_t>(index)];
}

Eigen::Matrix3d rot_x(double a) {
  Eigen::Matrix3d r;
  r << 1, 0, 0, 0, std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a);
  return r;
}

Eigen::Matrix3d rot_y(double a) {
  Eigen::Matrix3d r;
  r << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  return r;
}

Eigen::Matrix3d rot_z(double a) {
  Eigen::Matrix3d r;
  r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return r;
}

json vec3_json(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

// ---------------------------------------------------------------------------

struct EpipolarArgs {
  std::string pose_a, pose_b;
  int index_a = 0, index_b = 0;
  std::string pixel = "512,256";
  std::string size = "1024x512";
  std::string image;
  std::string out = "overlay.png";
  std::string oracle_depths;
};

int run_epipolar(const EpipolarArgs& args) {
  const SizeArg size = parse_size(args.size);
  const Eigen::Vector2d pix = parse_pixel(args.pixel);
  const Pose pose_a = load_pose(args.pose_a, args.index_a);
  const Pose pose_b = load_pose(args.pose_b, args.index_b);

  ErpImage canvas;
  if (!args.image.empty()) {
    canvas = ErpImage(io::read_png(args.image));
    if (canvas.width() != size.width || canvas.height() != size.height) {
      throw validation_error("--image size does not match --size");
    }
  } else {
    canvas = ErpImage(size.width, size.height, 3);
  }

  const RelativePose rel = relative_pose(pose_a, pose_b);
  const EpipolarPlane plane =
      epipolar_plane(pix, rel, size.width, size.height);
  if (!plane.solvable()) {
    const char* msg = plane.degeneracy == EpipolarDegeneracy::PureRotation
                          ? "pure rotation / zero baseline"
                          : "target ray passes through the source camera";
    std::cerr << "epipolar: " << msg << "\n";
    std::cout << json{{"error", msg}, {"degeneracy", to_string(plane.degeneracy)}}
              << "\n";
    return 2;
  }

  json report;
  report["degeneracy"] = to_string(plane.degeneracy);
  report["normal"] = vec3_json(plane.n);
  if (plane.has_quotient()) {
    report["a1"] = plane.a1();
    report["a2"] = plane.a2();
  }
  if (plane.degeneracy == EpipolarDegeneracy::PolarCircle) {
    const auto cols = polar_columns(plane, size.width, size.height);
    report["columns"] = {cols[0], cols[1]};
  }

  if (!args.oracle_depths.empty()) {
    const auto depths = parse_double_list(args.oracle_depths);
    const auto points =
        epipolar_oracle(pix, rel, depths, size.width, size.height);
    double max_dev = 0.0;
    for (const auto& p : points) {
      const Eigen::Vector3d d = sphere_to_cart(
          pixel_to_sphere(p.x(), p.y(), size.width, size.height));
      max_dev = std::max(
          max_dev, std::abs(std::asin(std::clamp(plane.n.dot(d), -1.0, 1.0))));
    }
    report["oracle_points"] = json::array();
    for (const auto& p : points) report["oracle_points"].push_back({p.x(), p.y()});
    report["oracle_max_deviation_rad"] = max_dev;
  }

  const auto lines = rasterize_epipolar(plane, size.width, size.height);
  const std::vector<float> red = canvas.channels() == 3
                                     ? std::vector<float>{1.0f, 0.0f, 0.0f}
                                     : std::vector<float>{1.0f};
  draw_polylines(canvas, lines, red);
  io::write_png(args.out, canvas.image());

  std::cout << report << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct StitchArgs {
  std::string faces_dir;
  int height = 512;
  std::string out = "erp.png";
};

int run_stitch(const StitchArgs& args) {
  std::vector<std::string> missing;
  std::vector<Image> faces;
  for (const auto name : kCubeFaceNames) {
    const fs::path p = fs::path(args.faces_dir) / (std::string(name) + ".png");
    if (!fs::exists(p)) {
      missing.push_back(p.string());
      continue;
    }
    faces.push_back(io::read_png(p));
  }
  if (!missing.empty()) {
    std::string msg = "missing cube faces:";
    for (const auto& m : missing) msg += " " + m;
    throw io_error(msg);
  }

  const int edge = faces[0].width();
  const int channels = faces[0].channels();
  for (size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].width() != faces[f].height()) {
      throw validation_error(std::string("cube face ") +
                             std::string(kCubeFaceNames[f]) + " is not square");
    }
    if (faces[f].width() != edge || faces[f].channels() != channels) {
      throw validation_error("cube faces disagree in size or channels");
    }
  }

  CubeMap cube(edge, channels);
  for (int f = 0; f < 6; ++f) cube.faces[f] = std::move(faces[f]);
  const ErpImage erp = cubemap_to_erp(cube, args.height);
  io::write_png(args.out, erp.image());

  std::cout << json{{"out", args.out},
                    {"width", erp.width()},
                    {"height", erp.height()}}
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct ProjectArgs {
  std::string erp;
  double fov_deg = 90.0;
  double yaw_deg = 0.0;
  double pitch_deg = 0.0;
  double roll_deg = 0.0;
  int width = 512;
  int height = 512;
  std::string out = "view.png";
};

int run_project(const ProjectArgs& args) {
  const ErpImage erp(io::read_png(args.erp));
  const Eigen::Matrix3d rot = rot_y(args.yaw_deg * kDegToRad) *
                              rot_x(-args.pitch_deg * kDegToRad) *
                              rot_z(args.roll_deg * kDegToRad);
  const Image view = erp_to_perspective(erp, args.fov_deg * kDegToRad, rot,
                                        args.width, args.height);
  io::write_png(args.out, view);
  std::cout << json{{"out", args.out}, {"width", args.width},
                    {"height", args.height}}
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct WrapArgs {
  std::string erp;
  double fraction = 0.0;
  std::string out = "wrapped.png";
};

int run_wrap(const WrapArgs& args) {
  const ErpImage erp(io::read_png(args.erp));
  const ErpImage shifted = wrap_augment(erp, args.fraction);
  io::write_png(args.out, shifted.image());
  std::cout << json{{"out", args.out}, {"fraction", args.fraction}} << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct AttendArgs {
  std::string features;
  std::string poses;
  std::string config;
  std::string out = "attended.tnsr";
  std::string stats;
  std::string compare;
  int threads = 1;
};

int run_attend(const AttendArgs& args) {
  const io::Tensor tensor = io::read_tnsr(args.features);
  if (tensor.dims.size() != 4) {
    throw validation_error("features must be a 4-D N x C x h x w tensor, got " +
                           std::to_string(tensor.dims.size()) + " dims");
  }
  const int n = static_cast<int>(tensor.dims[0]);
  const int c = static_cast<int>(tensor.dims[1]);
  const int h = static_cast<int>(tensor.dims[2]);
  const int w = static_cast<int>(tensor.dims[3]);
  if (w != 2 * h) {
    throw validation_error("feature grid width must be twice the height, got " +
                           std::to_string(w) + "x" + std::to_string(h));
  }

  ViewSet viewset;
  viewset.config = args.config.empty() ? AttentionConfig{}
                                       : io::read_attention_config(args.config);
  viewset.poses = io::read_poses(args.poses);
  if (static_cast<int>(viewset.poses.size()) != n) {
    throw validation_error("pose count " +
                           std::to_string(viewset.poses.size()) +
                           " does not match view count " + std::to_string(n));
  }
  viewset.grids.reserve(n);
  for (int v = 0; v < n; ++v) {
    ErpImage grid(w, h, c);
    for (int ch = 0; ch < c; ++ch) {
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          grid.at(x, y, ch) =
              tensor.data[((static_cast<size_t>(v) * c + ch) * h + y) * w + x];
        }
      }
    }
    if (!grid.is_finite()) {
      throw validation_error("features must be finite (view " +
                             std::to_string(v) + ")");
    }
    viewset.grids.push_back(std::move(grid));
  }
  viewset.validate();

  const ForwardResult result = epipolar_attention_forward(viewset, args.threads);

  const int out_c = result.outputs[0].channels();
  io::Tensor out_tensor;
  out_tensor.dims = {static_cast<std::uint64_t>(n),
                     static_cast<std::uint64_t>(out_c),
                     static_cast<std::uint64_t>(h),
                     static_cast<std::uint64_t>(w)};
  out_tensor.data.resize(static_cast<size_t>(n) * out_c * h * w);
  for (int v = 0; v < n; ++v) {
    for (int ch = 0; ch < out_c; ++ch) {
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          out_tensor.data[((static_cast<size_t>(v) * out_c + ch) * h + y) * w + x] =
              result.outputs[v].at(x, y, ch);
        }
      }
    }
  }
  io::write_tnsr(args.out, out_tensor);

  json stats;
  stats["views"] = json::array();
  for (int v = 0; v < n; ++v) {
    const auto& s = result.stats[v];
    stats["views"].push_back({{"view", v},
                              {"references", s.references},
                              {"weight_entropy_mean", s.entropy_mean},
                              {"weight_min", s.weight_min},
                              {"weight_max", s.weight_max},
                              {"invalid_samples", s.invalid_samples}});
  }
  stats["output_channels"] = out_c;

  int exit_code = 0;
  if (!args.compare.empty()) {
    const io::Tensor ref = io::read_tnsr(args.compare);
    if (ref.dims != out_tensor.dims) {
      throw validation_error("--compare tensor shape differs from output");
    }
    double max_diff = 0.0;
    for (size_t i = 0; i < ref.data.size(); ++i) {
      max_diff = std::max(
          max_diff, std::abs(static_cast<double>(ref.data[i]) -
                             static_cast<double>(out_tensor.data[i])));
    }
    stats["compare"] = {{"max_abs_diff", max_diff},
                        {"within_tolerance", max_diff <= 1e-5}};
    if (max_diff > 1e-5) exit_code = 3;
  }

  if (!args.stats.empty()) {
    std::ofstream file(args.stats, std::ios::trunc);
    if (!file) throw io_error("cannot write " + args.stats);
    file << stats.dump(2) << "\n";
  }
  std::cout << stats << "\n";
  return exit_code;
}

// ---------------------------------------------------------------------------

struct DatasetArgs {
  std::string traj_dir;
  int n = 4;
  double tau_change = 0.40;
  double tau_pix_255 = 10.0;
  double zero_depth = 0.05;
  std::string manifest = "manifest.json";
};

int run_dataset(const DatasetArgs& args) {
  const fs::path root(args.traj_dir);
  const fs::path frames_dir = root / "frames";
  const fs::path depth_dir = root / "depth";
  const fs::path poses_path = root / "poses.json";

  std::vector<std::string> missing;
  if (!fs::is_directory(frames_dir)) missing.push_back(frames_dir.string());
  if (!fs::is_directory(depth_dir)) missing.push_back(depth_dir.string());
  if (!fs::exists(poses_path)) missing.push_back(poses_path.string());
  if (!missing.empty()) {
    std::string msg = "trajectory layout incomplete, missing:";
    for (const auto& m : missing) msg += " " + m;
    throw io_error(msg);
  }

  const auto poses = io::read_poses(poses_path);
  const int count = static_cast<int>(poses.size());

  char name[16];
  for (int i = 0; i < count; ++i) {
    std::snprintf(name, sizeof(name), "%04d", i);
    const fs::path color = frames_dir / (std::string(name) + ".png");
    const fs::path depth = depth_dir / (std::string(name) + ".tnsr");
    if (!fs::exists(color)) missing.push_back(color.string());
    if (!fs::exists(depth)) missing.push_back(depth.string());
  }
  if (!missing.empty()) {
    std::string msg = "trajectory layout incomplete, missing:";
    for (const auto& m : missing) msg += " " + m;
    throw io_error(msg);
  }

  json captions = json::array();
  if (fs::exists(root / "captions.json")) {
    std::ifstream in(root / "captions.json");
    in >> captions;
  }

  Trajectory traj;
  traj.scene_id = root.filename().string();
  for (int i = 0; i < count; ++i) {
    std::snprintf(name, sizeof(name), "%04d", i);
    Frame frame;
    frame.color = ErpImage(io::read_png(frames_dir / (std::string(name) + ".png")));
    const io::Tensor dt = io::read_tnsr(depth_dir / (std::string(name) + ".tnsr"));
    int dh = 0, dw = 0;
    if (dt.dims.size() == 2) {
      dh = static_cast<int>(dt.dims[0]);
      dw = static_cast<int>(dt.dims[1]);
    } else if (dt.dims.size() == 3 && dt.dims[0] == 1) {
      dh = static_cast<int>(dt.dims[1]);
      dw = static_cast<int>(dt.dims[2]);
    } else {
      throw validation_error("depth tensor must be HxW or 1xHxW: frame " +
                             std::to_string(i));
    }
    if (dh != frame.color.height() || dw != frame.color.width()) {
      throw validation_error("depth resolution differs from color: frame " +
                             std::to_string(i));
    }
    ErpImage depth(dw, dh, 1);
    std::copy(dt.data.begin(), dt.data.end(), depth.data().begin());
    if (!depth.is_finite()) {
      throw validation_error("depth must be finite: frame " + std::to_string(i));
    }
    for (float v : depth.data()) {
      if (v < 0.0f) {
        throw validation_error("depth must be nonnegative: frame " +
                               std::to_string(i));
      }
    }
    frame.depth = std::move(depth);
    frame.pose = poses[static_cast<size_t>(i)];
    if (i < static_cast<int>(captions.size()) && captions[i].is_string()) {
      frame.caption = captions[i].get<std::string>();
    }
    traj.frames.push_back(std::move(frame));
  }

  std::vector<int> rejected;
  std::vector<double> zero_ratios;
  for (int i = 0; i < count; ++i) {
    const double r = zero_depth_ratio(traj.frames[i].depth);
    zero_ratios.push_back(r);
    if (r > args.zero_depth) rejected.push_back(i);
  }

  const double tau_pix = args.tau_pix_255 / 255.0;
  const SplitManifest split =
      split_trajectory(traj, args.n, tau_pix, args.tau_change);

  const auto group_ok = [&](const FrameGroup& g) {
    for (int f : g.frames) {
      if (std::find(rejected.begin(), rejected.end(), f) != rejected.end()) {
        return false;
      }
    }
    return true;
  };
  const auto group_json = [](const FrameGroup& g) {
    return json{{"frames", g.frames}, {"change_ratios", g.change_ratios}};
  };

  json manifest;
  manifest["scene"] = traj.scene_id;
  manifest["n"] = args.n;
  manifest["tau_change"] = args.tau_change;
  manifest["tau_pix"] = tau_pix;
  manifest["zero_depth_max"] = args.zero_depth;
  manifest["zero_depth_ratios"] = zero_ratios;
  manifest["rejected_frames"] = rejected;
  manifest["stage1"] = json::array();
  manifest["stage2"] = json::array();
  for (const auto& g : split.stage1) {
    if (group_ok(g)) manifest["stage1"].push_back(group_json(g));
  }
  for (const auto& g : split.stage2) {
    if (group_ok(g)) manifest["stage2"].push_back(group_json(g));
  }

  std::ofstream file(args.manifest, std::ios::trunc);
  if (!file) throw io_error("cannot write " + args.manifest);
  file << manifest.dump(2) << "\n";
  std::cout << manifest << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct MetricsArgs {
  std::string a, b;
};

int run_metrics(const MetricsArgs& args) {
  const Image a = io::read_png(args.a);
  const Image b = io::read_png(args.b);
  std::cout << json{{"psnr", psnr(a, b)}, {"ssim", ssim(a, b)}} << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical panorama multi-view geometry toolkit"};
  app.require_subcommand(1);

  EpipolarArgs epi;
  auto* cmd_epi = app.add_subcommand(
      "epipolar", "Draw the epipolar curve of a target pixel in a source view");
  cmd_epi->add_option("--pose-a", epi.pose_a, "Target view pose file (JSON)")
      ->required();
  cmd_epi->add_option("--pose-b", epi.pose_b, "Source view pose file (JSON)")
      ->required();
  cmd_epi->add_option("--index-a", epi.index_a, "Pose index in --pose-a")
      ->capture_default_str();
  cmd_epi->add_option("--index-b", epi.index_b, "Pose index in --pose-b")
      ->capture_default_str();
  cmd_epi->add_option("--pixel", epi.pixel, "Target pixel as x,y")
      ->capture_default_str();
  cmd_epi->add_option("--size", epi.size, "Panorama size as WxH")
      ->capture_default_str();
  cmd_epi->add_option("--image", epi.image, "Optional underlay panorama PNG");
  cmd_epi->add_option("--out", epi.out, "Overlay PNG path")
      ->capture_default_str();
  cmd_epi->add_option("--oracle-depths", epi.oracle_depths,
                      "Comma-separated depths for the brute-force check");

  StitchArgs stitch;
  auto* cmd_stitch = app.add_subcommand(
      "stitch", "Stitch six cube faces (front/back/left/right/up/down.png)");
  cmd_stitch->add_option("--faces", stitch.faces_dir, "Directory of face PNGs")
      ->required();
  cmd_stitch->add_option("--height", stitch.height, "Output panorama height")
      ->capture_default_str();
  cmd_stitch->add_option("--out", stitch.out, "Output panorama PNG")
      ->capture_default_str();

  ProjectArgs project;
  auto* cmd_project =
      app.add_subcommand("project", "Render a pinhole view from a panorama");
  cmd_project->add_option("--erp", project.erp, "Input panorama PNG")->required();
  cmd_project->add_option("--fov", project.fov_deg, "Horizontal FoV, degrees")
      ->capture_default_str();
  cmd_project->add_option("--yaw", project.yaw_deg, "Yaw, degrees")
      ->capture_default_str();
  cmd_project->add_option("--pitch", project.pitch_deg, "Pitch, degrees (up)")
      ->capture_default_str();
  cmd_project->add_option("--roll", project.roll_deg, "Roll, degrees")
      ->capture_default_str();
  cmd_project->add_option("--width", project.width, "Output width")
      ->capture_default_str();
  cmd_project->add_option("--height", project.height, "Output height")
      ->capture_default_str();
  cmd_project->add_option("--out", project.out, "Output PNG")
      ->capture_default_str();

  WrapArgs wrap;
  auto* cmd_wrap = app.add_subcommand(
      "wrap", "Cyclic horizontal shift (seam-continuity augmentation)");
  cmd_wrap->add_option("--erp", wrap.erp, "Input panorama PNG")->required();
  cmd_wrap->add_option("--fraction", wrap.fraction, "Shift fraction in [0,1)")
      ->capture_default_str();
  cmd_wrap->add_option("--out", wrap.out, "Output PNG")->capture_default_str();

  AttendArgs attend;
  auto* cmd_attend = app.add_subcommand(
      "attend", "Epipolar attention forward pass over a view set");
  cmd_attend->add_option("--features", attend.features, "N x C x h x w .tnsr")
      ->required();
  cmd_attend->add_option("--poses", attend.poses, "Pose file (JSON)")
      ->required();
  cmd_attend->add_option("--config", attend.config,
                         "Attention config JSON (defaults when omitted)");
  cmd_attend->add_option("--out", attend.out, "Output tensor path")
      ->capture_default_str();
  cmd_attend->add_option("--stats", attend.stats, "Stats JSON path");
  cmd_attend->add_option("--compare", attend.compare,
                         "Reference tensor; exit 3 if outputs differ > 1e-5");
  cmd_attend->add_option("--threads", attend.threads, "Worker threads")
      ->capture_default_str();

  DatasetArgs dataset;
  auto* cmd_dataset = app.add_subcommand(
      "dataset", "Filter and split a trajectory into training groups");
  cmd_dataset->add_option("--traj", dataset.traj_dir, "Trajectory directory")
      ->required();
  cmd_dataset->add_option("--n", dataset.n, "Frames per group")
      ->capture_default_str();
  cmd_dataset->add_option("--tau-change", dataset.tau_change,
                          "Changed-pixel fraction marking new content")
      ->capture_default_str();
  cmd_dataset->add_option("--tau-pix", dataset.tau_pix_255,
                          "Per-channel pixel threshold, 8-bit levels")
      ->capture_default_str();
  cmd_dataset->add_option("--zero-depth", dataset.zero_depth,
                          "Max tolerated zero-depth fraction")
      ->capture_default_str();
  cmd_dataset->add_option("--manifest", dataset.manifest, "Manifest JSON path")
      ->capture_default_str();

  MetricsArgs metrics;
  auto* cmd_metrics =
      app.add_subcommand("metrics", "PSNR/SSIM between two images");
  cmd_metrics->add_option("--a", metrics.a, "First image")->required();
  cmd_metrics->add_option("--b", metrics.b, "Second image")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(cmd_epi)) return run_epipolar(epi);
    if (app.got_subcommand(cmd_stitch)) return run_stitch(stitch);
    if (app.got_subcommand(cmd_project)) return run_project(project);
    if (app.got_subcommand(cmd_wrap)) return run_wrap(wrap);
    if (app.got_subcommand(cmd_attend)) return run_attend(attend);
    if (app.got_subcommand(cmd_dataset)) return run_dataset(dataset);
    if (app.got_subcommand(cmd_metrics)) return run_metrics(metrics);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", e.what()}} << "\n";
    return 1;
  } catch (const degeneracy_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", e.what()}} << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", e.what()}} << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", e.what()}} << "\n";
    return 1;
  }
  return 0;
}
