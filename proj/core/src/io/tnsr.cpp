// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#include "panogeo/io/tnsr.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "panogeo/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "tnsr i/o assumes a little-endian host");

namespace panogeo::io {

namespace {

constexpr char kMagic[4] = {'T', 'N', 'S', 'R'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
T read_le(std::istream& in, const char* what) {
  T v;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) {
    throw io_error(std::string("tnsr: truncated ") + what);
  }
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

}  // namespace

std::uint64_t Tensor::element_count() const {
  std::uint64_t n = 1;
  for (std::uint64_t d : dims) n *= d;
  return dims.empty() ? 0 : n;
}

Tensor read_tnsr(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("tnsr: cannot open " + path.string());

  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw io_error("tnsr: bad magic in " + path.string());
  }
  const auto version = read_le<std::uint32_t>(in, "version");
  if (version != kVersion) {
    throw io_error("tnsr: unsupported version " + std::to_string(version));
  }
  const auto ndims = read_le<std::uint32_t>(in, "ndims");
  if (ndims == 0 || ndims > 8) {
    throw io_error("tnsr: ndims out of range in " + path.string());
  }

  Tensor t;
  t.dims.resize(ndims);
  std::uint64_t count = 1;
  for (auto& d : t.dims) {
    d = read_le<std::uint64_t>(in, "dim");
    if (d == 0) throw io_error("tnsr: zero dimension in " + path.string());
    if (count > (1ull << 32) / d) {
      throw io_error("tnsr: tensor too large in " + path.string());
    }
    count *= d;
  }
  t.data.resize(count);
  if (!in.read(reinterpret_cast<char*>(t.data.data()),
               static_cast<std::streamsize>(count * sizeof(float)))) {
    throw io_error("tnsr: truncated payload in " + path.string());
  }
  return t;
}

void write_tnsr(const std::filesystem::path& path, const Tensor& tensor) {
  if (tensor.dims.empty()) {
    throw validation_error("tnsr: tensor needs at least one dimension");
  }
  if (tensor.element_count() != tensor.data.size()) {
    throw validation_error("tnsr: payload size does not match dims");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("tnsr: cannot write " + path.string());

  out.write(kMagic, 4);
  write_le<std::uint32_t>(out, kVersion);
  write_le<std::uint32_t>(out, static_cast<std::uint32_t>(tensor.dims.size()));
  for (std::uint64_t d : tensor.dims) write_le<std::uint64_t>(out, d);
  out.write(reinterpret_cast<const char*>(tensor.data.data()),
            static_cast<std::streamsize>(tensor.data.size() * sizeof(float)));
  if (!out) throw io_error("tnsr: short write to " + path.string());
}

}  // namespace panogeo::io
