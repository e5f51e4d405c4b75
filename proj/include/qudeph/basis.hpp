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

#ifndef QUDEPH_BASIS_HPP
#define QUDEPH_BASIS_HPP

#include <array>

namespace qudeph {

// Single-qutrit levels: the ground state and the two excited states of a
// V-type three-level atom. The excited levels couple to the ground state
// but not to each other.
enum class Level : int { kGround = 0, kPlus = 1, kMinus = 2 };

// Joint basis enumeration. Internal indices are 0-based; user-facing
// labels (CLI, file formats) are 1-based: k = 1..9 maps to the ordered
// pairs (0,0), (0,+1), (0,-1), (+1,0), (+1,+1), (+1,-1), (-1,0), (-1,+1),
// (-1,-1). This bijection is the single source of truth for tensor
// indexing everywhere in the library.
struct BasisLabel {
  static constexpr int joint(Level a, Level b) {
    return 3 * static_cast<int>(a) + static_cast<int>(b);
  }
  static constexpr Level level_a(int joint_index) {
    return static_cast<Level>(joint_index / 3);
  }
  static constexpr Level level_b(int joint_index) {
    return static_cast<Level>(joint_index % 3);
  }
};

// Decay-factor exponent contributed by one local dephasing source between
// two levels of the affected qutrit: 0 when the levels agree, 1 between
// the ground state and either excited level, 2 between the two excited
// levels (their independent phases add in variance).
constexpr int local_dephasing_power(Level x, Level y) {
  if (x == y) return 0;
  if (x == Level::kGround || y == Level::kGround) return 1;
  return 2;
}

// Collective-noise charge of each joint basis state: the shared field
// leaves both-ground alone (0), imprints a double phase on the two
// aligned doubly-excited states (2), and a single phase on everything
// else (1). The resulting factor between states i and j is
// gamma^((c_i - c_j)^2), which reproduces the collective decay pattern
// exactly: 1, gamma, or gamma^4.
constexpr int collective_charge(int joint_index) {
  const Level a = BasisLabel::level_a(joint_index);
  const Level b = BasisLabel::level_b(joint_index);
  if (a == Level::kGround && b == Level::kGround) return 0;
  if (a == b) return 2;
  return 1;
}

inline constexpr std::array<int, 9> kCollectiveCharges = {0, 1, 1, 1, 2, 1, 1, 1, 2};

}  // namespace qudeph

#endif  // QUDEPH_BASIS_HPP
