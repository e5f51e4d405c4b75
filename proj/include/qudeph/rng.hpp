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

#ifndef QUDEPH_RNG_HPP
#define QUDEPH_RNG_HPP

#include <cstdint>
#include <random>

#include "qudeph/states.hpp"

namespace qudeph {

// splitmix64 finisher; used to spread seeds and derive per-stream seeds.
std::uint64_t mix64(std::uint64_t x);

// Seed for an independent stream identified by (seed, index). Streams are
// decorrelated regardless of how close the inputs are.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

// Standard-normal sampler with a fixed draw pattern: every pair of
// variates consumes exactly two engine outputs (Box-Muller), so consumers
// have reproducible stream positions independent of the platform's
// std::normal_distribution.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Haar-like random two-qutrit pure state: nine complex-normal amplitudes,
// normalized. Deterministic for a given seed.
PureState random_pure_state(std::uint64_t seed);

}  // namespace qudeph

#endif  // QUDEPH_RNG_HPP
