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

#ifndef QUDEPH_ENTANGLEMENT_HPP
#define QUDEPH_ENTANGLEMENT_HPP

#include <string>
#include <vector>

#include "qudeph/channels.hpp"
#include "qudeph/linalg.hpp"
#include "qudeph/states.hpp"

namespace qudeph {

struct NegativityResult {
  double value = 0.0;                       // (trace_norm(PT) - 1) / 2, in [0, 1]
  std::vector<double> negative_eigenvalues; // of the partial transpose, ascending
  std::string method;                       // "numerical" or "closed-form-..."
};

// Negativity via partial transpose over subsystem A; invariant (within
// 1e-10) under transposing B instead.
NegativityResult negativity(const DensityMatrix& rho);
NegativityResult negativity(const DensityMatrix& rho, Subsystem transposed);

// The nine-term square-root expression for the negativity of a general
// pure state under multi-local dephasing, evaluated verbatim. Exact for
// the fragile three-amplitude states and the two-amplitude robust pair
// forms; for other states it is advisory and the numerical path above is
// authoritative. Callers are expected to measure the discrepancy.
double negativity_general_multilocal(const PureState& state, double gamma_a,
                                     double gamma_b);

// Closed form for fragile-class states (support within {1,5,9}):
// |a1||a5| F15 + |a1||a9| F19 + |a5||a9| F59 with F the entry decay
// factors of the spec. Specializes to the multi-local and collective
// expressions. Throws ValidationError on non-fragile input.
double negativity_fragile(const PureState& state, const ChannelSpec& spec, double t);
double negativity_fragile(const PureState& state, const DecayParams& params);

// Closed form for the robust pair form a2|2> + a4|4>: |a2||a4| F24.
// Constant under purely collective dephasing. Throws ValidationError when
// the state is not of that form.
double negativity_robust_multilocal(const PureState& state, double gamma_a,
                                    double gamma_b);
double negativity_robust(const PureState& state, const ChannelSpec& spec, double t);

}  // namespace qudeph

#endif  // QUDEPH_ENTANGLEMENT_HPP
