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

#ifndef QUDEPH_TYPES_HPP
#define QUDEPH_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace qudeph {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;          // dense complex, dim 3 or 9 throughout
using Matrix9 = Eigen::Matrix<Complex, 9, 9>;
using RealMatrix = Eigen::MatrixXd;

inline constexpr int kJointDim = 9;
inline constexpr int kQutritDim = 3;

// Numerical tolerances used by the public contracts.
inline constexpr double kNormTol = 1e-12;          // state normalization
inline constexpr double kHermitianTol = 1e-12;     // density-matrix Hermiticity
inline constexpr double kEigenInputTol = 1e-10;    // Hermiticity gate for eigensolves
inline constexpr double kPsdSlack = -1e-10;        // eigenvalue floor for valid states
inline constexpr double kCompletenessTol = 1e-12;  // Kraus completeness residual
inline constexpr double kAmplitudeZero = 1e-12;    // support threshold for classification
inline constexpr double kNegativityTol = 1e-10;    // closed form vs numerical agreement
inline constexpr double kTraceExtinct = 1e-13;     // negativity treated as extinct below this

}  // namespace qudeph

#endif  // QUDEPH_TYPES_HPP
