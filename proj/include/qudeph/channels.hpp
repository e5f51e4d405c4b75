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

#ifndef QUDEPH_CHANNELS_HPP
#define QUDEPH_CHANNELS_HPP

#include <vector>

#include "qudeph/linalg.hpp"
#include "qudeph/states.hpp"
#include "qudeph/types.hpp"

namespace qudeph {

// Which dephasing sources act, and at what rates. Both local sources share
// the rate gamma1; the collective source uses gamma2. An inactive source
// contributes a decay factor of exactly 1 at every entry.
struct ChannelSpec {
  bool a_local = false;
  bool b_local = false;
  bool collective = false;
  double gamma1 = 0.0;  // phase-damping rate of each local source
  double gamma2 = 0.0;  // phase-damping rate of the collective source

  static ChannelSpec multi_local(double gamma1);
  static ChannelSpec single_local(Subsystem which, double gamma1);
  static ChannelSpec collective_only(double gamma2);
  static ChannelSpec all(double gamma1, double gamma2);

  void validate() const;  // rates must be >= 0
};

// Per-source decay parameters gamma = exp(-rate * t / 2), each in (0, 1].
// A value of exactly 1 means the source is inactive or t = 0. Operations
// accept DecayParams directly so tests can use exact rational gamma values.
struct DecayParams {
  double gamma_a = 1.0;
  double gamma_b = 1.0;
  double gamma_c = 1.0;

  static DecayParams at_time(const ChannelSpec& spec, double t);
  void validate() const;  // each gamma in (0, 1]
};

// Derived collective-channel parameters for a given gamma.
double omega(double gamma);    // sqrt(1 - gamma^2)
double omega_1(double gamma);  // sqrt(1 - gamma^2)
double omega_2(double gamma);  // -gamma^2 sqrt(1 - gamma^2)
double omega_3(double gamma);  // sqrt((1 - gamma^2)(1 - gamma^4))

// A finite operator-sum decomposition on the joint space. Completeness
// (sum of E^dagger E = identity within kCompletenessTol) holds for every
// set built by this module and is re-checked by apply_channel.
struct KrausSet {
  std::vector<Matrix9> operators;

  double completeness_residual() const;
};

// Three local decomposition operators diag(1, g, g), diag(0, w, 0),
// diag(0, 0, w) on the chosen qutrit, tensored with identity on the other.
KrausSet build_local_kraus(double gamma, Subsystem subsystem);

// Three diagonal joint operators for the shared field.
KrausSet build_collective_kraus(double gamma);

// rho' = sum_mu E_mu rho E_mu^dagger.
DensityMatrix apply_channel(const KrausSet& kraus, const DensityMatrix& rho);

// Entry-wise decay factors in [0, 1]: products of per-source powers of
// gamma. Symmetric, diagonal exactly 1.
RealMatrix decay_factor_matrix(const DecayParams& params);
RealMatrix decay_factor_matrix(const ChannelSpec& spec, double t);

// t -> infinity limit of the factors: 1 where no active source dephases
// the entry, 0 elsewhere.
RealMatrix decay_factor_limit(const ChannelSpec& spec);

// Exponent of gamma1 (local pair) and gamma2 (collective) at entry (i, j),
// 0-based. decay rate of the entry = (local_exponent * gamma1 +
// collective_exponent * gamma2) / 2.
int local_exponent(int i, int j);
int collective_exponent(int i, int j);
double entry_decay_rate(const ChannelSpec& spec, int i, int j);

// rho(t) as the entry-wise product rho0 o decay_factor_matrix. Agrees with
// the Kraus operator-sum composition within 1e-12 (tested) and preserves
// diagonal entries exactly.
DensityMatrix evolve(const DensityMatrix& rho0, const ChannelSpec& spec, double t);
DensityMatrix evolve(const DensityMatrix& rho0, const DecayParams& params);

// partial_trace of the evolved state.
DensityMatrix reduced_evolution(const DensityMatrix& rho0, const ChannelSpec& spec,
                                double t, Subsystem keep);

}  // namespace qudeph

#endif  // QUDEPH_CHANNELS_HPP
