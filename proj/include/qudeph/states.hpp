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

#ifndef QUDEPH_STATES_HPP
#define QUDEPH_STATES_HPP

#include <array>
#include <string>
#include <vector>

#include "qudeph/types.hpp"

namespace qudeph {

// Two-qutrit pure state: nine complex amplitudes over the standard joint
// basis. Construction enforces unit norm within kNormTol.
class PureState {
 public:
  using Amplitudes = std::array<Complex, 9>;

  explicit PureState(const Amplitudes& amplitudes);

  // Rescales to unit norm; rejects the zero vector.
  static PureState normalized(const Amplitudes& amplitudes);

  // Equal-magnitude forms used throughout: "phi1".."phi3" (fragile pairs),
  // "psi1".."psi3" / "robust-psi1".. (robust pairs), "maximally-entangled"
  // and its alias "fragile-bell" (equal three-term superposition).
  static PureState preset(const std::string& name);
  static const std::vector<std::string>& preset_names();

  const Amplitudes& amplitudes() const { return amps_; }
  Complex amplitude(int index) const { return amps_[static_cast<size_t>(index)]; }

  // 0-based indices with |amplitude| > kAmplitudeZero.
  std::vector<int> support() const;

  double norm_squared() const;

 private:
  Amplitudes amps_;
};

// Hermitian, unit-trace, positive-semidefinite complex matrix of dimension
// 3 (single qutrit) or 9 (joint). `checked` validates all three properties
// and is meant for external input; internal evolution paths use `trusted`
// on matrices that are valid by construction.
class DensityMatrix {
 public:
  static DensityMatrix checked(const Matrix& m);
  static DensityMatrix trusted(const Matrix& m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex entry(int i, int j) const { return m_(i, j); }

  // Diagnostics for validity checks; see checked().
  double hermiticity_residual() const;
  double trace_residual() const;
  double min_eigenvalue() const;

 private:
  explicit DensityMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

}  // namespace qudeph

#endif  // QUDEPH_STATES_HPP
