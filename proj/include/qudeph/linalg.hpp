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

#ifndef QUDEPH_LINALG_HPP
#define QUDEPH_LINALG_HPP

#include <vector>

#include "qudeph/states.hpp"
#include "qudeph/types.hpp"

namespace qudeph {

enum class Subsystem : int { kA = 0, kB = 1 };

// rho_ij = a_i * conj(a_j). Rank one, unit trace.
DensityMatrix projector(const PureState& state);

// Trace over the complement of `keep`, 9x9 -> 3x3.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// Transpose the indices of one subsystem only. The result is Hermitian with
// unit trace but in general not positive; it is returned as a plain matrix.
Matrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem);
Matrix partial_transpose(const Matrix& m, Subsystem subsystem);

// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs whose
// Hermiticity residual exceeds kEigenInputTol.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

// Sum of absolute eigenvalues.
double trace_norm(const Matrix& m);

double hermiticity_residual(const Matrix& m);

}  // namespace qudeph

#endif  // QUDEPH_LINALG_HPP
