// Copyright 2026 The qudeph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDEPH_ERRORS_HPP
#define QUDEPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qudeph {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
// config (1), validation (2), numeric contract (3).

// Malformed or inconsistent configuration input (files, flag values, names).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A caller-visible precondition was violated: out-of-domain parameter,
// non-normalized state, wrong dimension, wrong state class.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// An internal numerical contract broke (completeness residual, lost
// Hermiticity, eigensolver failure). Indicates a bug or corrupted input.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qudeph

#endif  // QUDEPH_ERRORS_HPP
