// Copyright 2026 panogeo contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace panogeo {

// Failure to read or write a file, or a malformed on-disk artifact.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A geometric configuration for which the requested quantity does not exist
// (zero baseline, ray through a camera center, point at a projection center).
class degeneracy_error : public std::runtime_error {
 public:
  explicit degeneracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated precondition: bad shapes, out-of-range parameters, invalid config.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace panogeo
