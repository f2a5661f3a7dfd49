// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace panogeo::io {

/// In-memory form of a .tnsr file: magic "TNSR", version u32 = 1, ndims u32,
/// ndims u64 dims, then row-major float32 payload, everything little-endian.
struct Tensor {
  std::vector<std::uint64_t> dims;
  std::vector<float> data;

  std::uint64_t element_count() const;
};

Tensor read_tnsr(const std::filesystem::path& path);
void write_tnsr(const std::filesystem::path& path, const Tensor& tensor);

}  // namespace panogeo::io
