// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Drives the installed command surface end to end through the real binary
// (path from the PANOGEO_CLI environment variable).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <random>

#include "panogeo/cubemap.hpp"
#include "panogeo/dataset.hpp"
#include "panogeo/io/png_io.hpp"
#include "panogeo/io/pose_json.hpp"
#include "panogeo/io/tnsr.hpp"
#include "test_util.hpp"

using namespace panogeo;
using nlohmann::json;
using testutil::run_cli;
using testutil::TempDir;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_pose_file(const std::filesystem::path& path, const Pose& pose) {
  const std::vector<Pose> poses{pose};
  io::write_poses(path, poses);
}

json parse_stdout(const std::string& text) { return json::parse(text); }

}  // namespace

TEST_CASE("cli: identical poses exit 2 with a zero-baseline message") {
  TempDir dir;
  write_pose_file(dir / "a.json", Pose::identity());
  write_pose_file(dir / "b.json", Pose::identity());

  const auto r = run_cli("epipolar --pose-a " + (dir / "a.json").string() +
                         " --pose-b " + (dir / "b.json").string() +
                         " --pixel 512,256 --size 1024x512 --out " +
                         (dir / "o.png").string());
  CHECK(r.exit_code == 2);
  const json out = parse_stdout(r.out);
  CHECK(out.at("error").get<std::string>() == "pure rotation / zero baseline");
}

TEST_CASE("cli: unit-x baseline reports the y-normal plane and a tight oracle") {
  TempDir dir;
  write_pose_file(dir / "a.json",
                  testutil::make_pose(Eigen::Matrix3d::Identity(), {1, 0, 0}));
  write_pose_file(dir / "b.json", Pose::identity());

  const auto r = run_cli("epipolar --pose-a " + (dir / "a.json").string() +
                         " --pose-b " + (dir / "b.json").string() +
                         " --pixel 512,256 --size 1024x512" +
                         " --oracle-depths 1,2,5 --out " +
                         (dir / "overlay.png").string());
  REQUIRE(r.exit_code == 0);
  const json out = parse_stdout(r.out);
  CHECK(out.at("degeneracy") == "regular");
  const auto n = out.at("normal");
  CHECK(std::abs(n[0].get<double>()) < 1e-12);
  CHECK(std::abs(std::abs(n[1].get<double>()) - 1.0) < 1e-12);
  CHECK(std::abs(n[2].get<double>()) < 1e-12);
  CHECK(out.at("oracle_max_deviation_rad").get<double>() < 1e-6);
  CHECK(std::filesystem::exists(dir / "overlay.png"));
}

TEST_CASE("cli: epipolar output is byte-identical across runs") {
  TempDir dir;
  write_pose_file(dir / "a.json",
                  testutil::make_pose(testutil::rot_y(0.3), {0.5, 0.2, -0.1}));
  write_pose_file(dir / "b.json", Pose::identity());
  const std::string args = "epipolar --pose-a " + (dir / "a.json").string() +
                           " --pose-b " + (dir / "b.json").string() +
                           " --pixel 300.5,200.25 --size 512x256 --out ";

  const auto r1 = run_cli(args + (dir / "o1.png").string());
  const auto r2 = run_cli(args + (dir / "o2.png").string());
  REQUIRE(r1.exit_code == 0);
  REQUIRE(r2.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(slurp(dir / "o1.png") == slurp(dir / "o2.png"));
}

TEST_CASE("cli: stitch and project round trip") {
  TempDir dir;
  const auto faces_dir = dir / "faces";
  std::filesystem::create_directories(faces_dir);

  // distinct constant faces
  const float colors[6] = {0.1f, 0.2f, 0.3f, 0.4f, 0.5f, 0.6f};
  for (int f = 0; f < 6; ++f) {
    io::write_png(faces_dir / (std::string(kCubeFaceNames[f]) + ".png"),
                  Image::constant(64, 64, 3, colors[f]));
  }

  const auto stitch = run_cli("stitch --faces " + faces_dir.string() +
                              " --height 128 --out " + (dir / "erp.png").string());
  REQUIRE(stitch.exit_code == 0);

  const ErpImage erp(io::read_png(dir / "erp.png"));
  CHECK(erp.at(128, 64, 0) == doctest::Approx(0.1f).epsilon(0.01));  // front
  CHECK(erp.at(10, 0, 1) == doctest::Approx(0.5f).epsilon(0.01));    // up

  const auto project = run_cli("project --erp " + (dir / "erp.png").string() +
                               " --fov 90 --yaw 90 --width 64 --height 64" +
                               " --out " + (dir / "right.png").string());
  REQUIRE(project.exit_code == 0);
  const Image right = io::read_png(dir / "right.png");
  for (int j = 16; j < 48; j += 8) {
    for (int i = 16; i < 48; i += 8) {
      CHECK(right.at(i, j, 0) == doctest::Approx(0.4f).epsilon(0.01));
    }
  }
}

TEST_CASE("cli: stitch reports missing faces") {
  TempDir dir;
  const auto faces_dir = dir / "faces";
  std::filesystem::create_directories(faces_dir);
  io::write_png(faces_dir / "front.png", Image::constant(16, 16, 3, 0.5f));

  const auto r = run_cli("stitch --faces " + faces_dir.string() + " --out " +
                         (dir / "erp.png").string());
  CHECK(r.exit_code == 1);
  const json out = parse_stdout(r.out);
  const std::string msg = out.at("error").get<std::string>();
  CHECK(msg.find("back.png") != std::string::npos);
  CHECK(msg.find("down.png") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(dir / "erp.png"));
}

TEST_CASE("cli: wrap with fraction 0 copies the file byte for byte") {
  TempDir dir;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> level(0, 255);
  Image img(64, 32, 3);
  for (float& v : img.data()) v = level(rng) / 255.0f;
  io::write_png(dir / "in.png", img);

  const auto r = run_cli("wrap --erp " + (dir / "in.png").string() +
                         " --fraction 0 --out " + (dir / "out.png").string());
  REQUIRE(r.exit_code == 0);
  CHECK(slurp(dir / "in.png") == slurp(dir / "out.png"));

  const auto shifted = run_cli("wrap --erp " + (dir / "in.png").string() +
                               " --fraction 0.25 --out " +
                               (dir / "out25.png").string());
  REQUIRE(shifted.exit_code == 0);
  const Image out25 = io::read_png(dir / "out25.png");
  CHECK(out25.at(16, 5, 0) == img.at(0, 5, 0));
}

TEST_CASE("cli: attend runs, is deterministic, and validates config") {
  TempDir dir;
  std::mt19937 rng(11);

  const int n = 3, c = 2, h = 8, w = 16;
  io::Tensor features;
  features.dims = {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(c),
                   static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(w)};
  features.data.resize(static_cast<size_t>(n) * c * h * w);
  std::uniform_real_distribution<float> dist(0.0f, 1.0f);
  for (float& v : features.data) v = dist(rng);
  io::write_tnsr(dir / "f.tnsr", features);

  std::vector<Pose> poses;
  for (int v = 0; v < n; ++v) {
    poses.push_back(testutil::make_pose(testutil::rot_y(0.05 * v),
                                        {0.2 * v, 0.0, 0.1 * v}));
  }
  io::write_poses(dir / "poses.json", poses);
  std::ofstream(dir / "cfg.json") << R"({"K": 2, "S": 4, "L_r": 2, "L_z": 2})";

  const std::string base_args =
      "attend --features " + (dir / "f.tnsr").string() + " --poses " +
      (dir / "poses.json").string() + " --config " + (dir / "cfg.json").string();

  SUBCASE("two runs and different thread counts match byte for byte") {
    const auto r1 = run_cli(base_args + " --out " + (dir / "o1.tnsr").string() +
                            " --stats " + (dir / "s1.json").string());
    const auto r2 = run_cli(base_args + " --out " + (dir / "o2.tnsr").string() +
                            " --stats " + (dir / "s2.json").string());
    const auto r4 = run_cli(base_args + " --threads 4 --out " +
                            (dir / "o4.tnsr").string() + " --stats " +
                            (dir / "s4.json").string());
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    REQUIRE(r4.exit_code == 0);
    CHECK(slurp(dir / "o1.tnsr") == slurp(dir / "o2.tnsr"));
    CHECK(slurp(dir / "o1.tnsr") == slurp(dir / "o4.tnsr"));
    CHECK(slurp(dir / "s1.json") == slurp(dir / "s2.json"));
    CHECK(slurp(dir / "s1.json") == slurp(dir / "s4.json"));
  }

  SUBCASE("constant features stay constant") {
    io::Tensor flat = features;
    for (float& v : flat.data) v = 0.25f;
    io::write_tnsr(dir / "flat.tnsr", flat);
    const auto r = run_cli("attend --features " + (dir / "flat.tnsr").string() +
                           " --poses " + (dir / "poses.json").string() +
                           " --config " + (dir / "cfg.json").string() +
                           " --out " + (dir / "flat_out.tnsr").string());
    REQUIRE(r.exit_code == 0);
    const io::Tensor out = io::read_tnsr(dir / "flat_out.tnsr");
    for (float v : out.data) CHECK(std::abs(v - 0.25f) < 1e-6f);
  }

  SUBCASE("a rigid transform of all poses leaves the output within 1e-5") {
    const auto base = run_cli(base_args + " --out " + (dir / "base.tnsr").string());
    REQUIRE(base.exit_code == 0);

    const Eigen::Matrix3d g = testutil::rot_z(0.7) * testutil::rot_y(-0.2);
    std::vector<Pose> moved = poses;
    for (auto& p : moved) {
      p.t = g * p.t + Eigen::Vector3d(5.0, -2.0, 1.0);
      p.R = g * p.R;
    }
    io::write_poses(dir / "moved.json", moved);
    const auto r = run_cli("attend --features " + (dir / "f.tnsr").string() +
                           " --poses " + (dir / "moved.json").string() +
                           " --config " + (dir / "cfg.json").string() +
                           " --out " + (dir / "moved.tnsr").string() +
                           " --compare " + (dir / "base.tnsr").string());
    REQUIRE(r.exit_code == 0);
    const json out = parse_stdout(r.out);
    CHECK(out.at("compare").at("within_tolerance").get<bool>());
    CHECK(out.at("compare").at("max_abs_diff").get<double>() <= 1e-5);
  }

  SUBCASE("K out of range names the problem") {
    std::ofstream(dir / "badk.json") << R"({"K": 3})";
    const auto bad = run_cli(
        "attend --features " + (dir / "f.tnsr").string() + " --poses " +
        (dir / "poses.json").string() + " --config " + (dir / "badk.json").string() +
        " --out " + (dir / "y.tnsr").string());
    CHECK(bad.exit_code == 3);
    const json out = parse_stdout(bad.out);
    CHECK(out.at("error").get<std::string>().find(
              "K exceeds available reference views") != std::string::npos);
    CHECK_FALSE(std::filesystem::exists(dir / "y.tnsr"));
  }

  SUBCASE("bad tensor shapes name the offending dimension") {
    io::Tensor bad = features;
    bad.dims = {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(c),
                static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(h)};
    bad.data.resize(static_cast<size_t>(n) * c * h * h);
    io::write_tnsr(dir / "square.tnsr", bad);
    const auto r = run_cli("attend --features " + (dir / "square.tnsr").string() +
                           " --poses " + (dir / "poses.json").string() +
                           " --out " + (dir / "z.tnsr").string());
    CHECK(r.exit_code == 3);
    const json out = parse_stdout(r.out);
    CHECK(out.at("error").get<std::string>().find("width") != std::string::npos);
  }
}

TEST_CASE("cli: dataset splits a synthetic trajectory") {
  TempDir dir;
  const auto traj = dir / "traj";
  std::filesystem::create_directories(traj / "frames");
  std::filesystem::create_directories(traj / "depth");

  const int w = 64, h = 32;
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> level(0, 255);

  // four static frames: first two share content, then 60% of pixels flip
  Image frame0(w, h, 3);
  for (float& v : frame0.data()) v = level(rng) / 255.0f;
  std::vector<Image> colors(4, frame0);
  for (int f = 2; f < 4; ++f) {
    colors[f] = colors[f - 1];
    const int flips = static_cast<int>(0.6 * w * h);
    for (int i = 0; i < flips; ++i) {
      for (int c = 0; c < 3; ++c) {
        float& v = colors[f].at(i % w, i / w, c);
        v = v > 0.5f ? 0.1f : 0.9f;
      }
    }
  }

  std::vector<Pose> poses(4, Pose::identity());
  char name[16];
  for (int i = 0; i < 4; ++i) {
    std::snprintf(name, sizeof(name), "%04d", i);
    io::write_png(traj / "frames" / (std::string(name) + ".png"), colors[i]);
    io::Tensor depth;
    depth.dims = {static_cast<std::uint64_t>(h), static_cast<std::uint64_t>(w)};
    depth.data.assign(static_cast<size_t>(w) * h, 2.0f);
    if (i == 3) {
      // 10% zero-depth holes: this frame must be rejected at the 5% default
      for (size_t p = 0; p < depth.data.size() / 10; ++p) depth.data[p] = 0.0f;
    }
    io::write_tnsr(traj / "depth" / (std::string(name) + ".tnsr"), depth);
  }
  io::write_poses(traj / "poses.json", poses);

  const auto r = run_cli("dataset --traj " + traj.string() + " --n 2 --manifest " +
                         (dir / "manifest.json").string());
  REQUIRE(r.exit_code == 0);
  const json manifest = json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest.at("rejected_frames") == json::array({3}));
  REQUIRE(manifest.at("stage1").size() == 1);
  CHECK(manifest.at("stage1")[0].at("frames") == json::array({0, 1}));
  // the 1->2 transition flips 60% of pixels; disjoint packing takes {1,2}
  // and frame 3 is out on the zero-depth filter anyway
  REQUIRE(manifest.at("stage2").size() == 1);
  CHECK(manifest.at("stage2")[0].at("frames") == json::array({1, 2}));
  CHECK(manifest.at("stage2")[0].at("change_ratios")[0].get<double>() > 0.4);
}

TEST_CASE("cli: dataset lists missing layout pieces") {
  TempDir dir;
  const auto traj = dir / "traj";
  std::filesystem::create_directories(traj / "frames");

  const auto r = run_cli("dataset --traj " + traj.string() + " --manifest " +
                         (dir / "m.json").string());
  CHECK(r.exit_code == 1);
  const json out = parse_stdout(r.out);
  const std::string msg = out.at("error").get<std::string>();
  CHECK(msg.find("depth") != std::string::npos);
  CHECK(msg.find("poses.json") != std::string::npos);
}

TEST_CASE("cli: metrics on identical images reports the caps") {
  TempDir dir;
  const auto img = testutil::make_smooth_erp(64, 32, 3);
  io::write_png(dir / "a.png", img.image());

  const auto r = run_cli("metrics --a " + (dir / "a.png").string() + " --b " +
                         (dir / "a.png").string());
  REQUIRE(r.exit_code == 0);
  const json out = parse_stdout(r.out);
  CHECK(out.at("psnr").get<double>() == doctest::Approx(99.0));
  CHECK(out.at("ssim").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("cli: help lists subcommands and the documented defaults") {
  const auto root = run_cli("--help");
  CHECK(root.exit_code == 0);
  for (const char* name :
       {"epipolar", "stitch", "project", "wrap", "attend", "dataset", "metrics"}) {
    CHECK(root.out.find(name) != std::string::npos);
  }

  const auto dataset_help = run_cli("dataset --help");
  CHECK(dataset_help.out.find("0.4") != std::string::npos);   // tau-change
  CHECK(dataset_help.out.find("10") != std::string::npos);    // tau-pix
  CHECK(dataset_help.out.find("0.05") != std::string::npos);  // zero-depth
  const auto project_help = run_cli("project --help");
  CHECK(project_help.out.find("90") != std::string::npos);  // fov default
}
