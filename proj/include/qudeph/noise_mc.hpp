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

#ifndef QUDEPH_NOISE_MC_HPP
#define QUDEPH_NOISE_MC_HPP

#include <cstdint>
#include <vector>

#include "qudeph/channels.hpp"
#include "qudeph/rng.hpp"
#include "qudeph/states.hpp"

namespace qudeph {

// Stochastic counterpart of the analytic channels: classical Markov phase
// noise sampled as trajectories of diagonal unitaries whose ensemble
// average reproduces the decay factors exactly in expectation.
//
// Each active local source contributes an independent Gaussian phase per
// excited level (variance gamma1 * t); the collective source contributes
// one shared Gaussian phase (variance gamma2 * t) coupled to the
// per-basis-state charge vector (0,1,1,1,2,1,1,1,2).
struct NoiseModel {
  ChannelSpec spec;

  explicit NoiseModel(const ChannelSpec& s) : spec(s) { spec.validate(); }

  // Phase standard deviations at time t; zero for inactive sources.
  double local_sigma(double t) const;
  double collective_sigma(double t) const;
};

// One sampled trajectory at time t: phases of the diagonal unitary
// exp(-i theta_k). Exactly five Gaussian variates are consumed per call
// (phi_{A,+}, phi_{A,-}, phi_{B,+}, phi_{B,-}, phi_C, in that order).
std::array<double, 9> sample_phases(const NoiseModel& model, double t,
                                    GaussianSampler& rng);

// The corresponding diagonal unitary.
Matrix9 sample_unitary(const NoiseModel& model, double t, GaussianSampler& rng);

// Time-stepped variant: the collective/local phases are accumulated as
// `steps` Euler increments instead of one shot. Statistically identical;
// kept as an internal cross-check of the one-shot sampling.
std::array<double, 9> sample_phases_stepped(const NoiseModel& model, double t,
                                            int steps, GaussianSampler& rng);

struct EnsembleResult {
  Matrix mean_rho;        // 9x9 average of U rho0 U^dagger
  RealMatrix std_error;   // 9x9 per-entry standard error of the mean
  std::int64_t n_trajectories = 0;
  std::uint64_t seed = 0;
};

struct EnsembleOptions {
  std::int64_t n_trajectories = 1;
  std::uint64_t seed = 0;
  int max_threads = 0;     // 0 = hardware concurrency
  int euler_steps = 0;     // 0 = one-shot sampling; > 0 = stepped variant
};

// Mean of U rho0 U^dagger over independent trajectories. Trajectory i uses
// the stream (seed, i); accumulation runs over fixed-size blocks combined
// in index order, so results are bit-identical for any thread count.
EnsembleResult ensemble_evolve(const DensityMatrix& rho0, const NoiseModel& model,
                               double t, const EnsembleOptions& options);

struct OracleEntryReport {
  int i = 0;
  int j = 0;
  Complex mean;
  Complex expected;
  double std_error = 0.0;
  double z = 0.0;
};

struct OracleReport {
  std::vector<OracleEntryReport> entries;  // all 81, row-major
  double max_abs_deviation = 0.0;
  double max_z = 0.0;
  std::vector<std::pair<int, int>> flagged;  // |z| > z_threshold
  double z_threshold = 4.0;
  std::int64_t n_trajectories = 0;
  std::uint64_t seed = 0;
};

// Compares the ensemble average against evolve(rho0, spec, t) entry by
// entry. Disagreements are reported, not thrown.
OracleReport oracle_compare(const DensityMatrix& rho0, const ChannelSpec& spec,
                            double t, const EnsembleOptions& options);

}  // namespace qudeph

#endif  // QUDEPH_NOISE_MC_HPP
