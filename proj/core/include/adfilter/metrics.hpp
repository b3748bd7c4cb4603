// Copyright 2026 The adfilter Authors
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

#ifndef ADFILTER_METRICS_HPP
#define ADFILTER_METRICS_HPP

#include <cstdint>
#include <vector>

#include "adfilter/conditional_channel.hpp"
#include "adfilter/qops.hpp"

namespace adf {

/// <psi| rho |psi> for a pure target.
double state_fidelity(const DensityMatrix& rho, const DensityMatrix& pure_target);

/// Entanglement fidelity of a channel with respect to a target unitary,
/// evaluated on half of a maximally entangled input. Non-trace-preserving
/// (post-selected) channels are normalized by their mean branch weight,
/// i.e. F_e = <phi'| C |phi'> / Tr C with C the Choi state and
/// phi' = (I (x) U) phi_m. Channels whose output space is larger than the
/// input (leaky realizations) score leaked population as zero fidelity.
double entanglement_fidelity(const ConditionalChannel& channel, const Operator& u_id);

/// Same quantity through the Kraus decomposition,
/// F_e = (1/d^2) sum_k |Tr(U^dagger E_k)|^2 / Tr C. Kept as an independent
/// route for cross-checking the Choi path.
double entanglement_fidelity_kraus(const ConditionalChannel& channel,
                                   const Operator& u_id);

/// Mean branch weight Tr C: the post-selection success probability averaged
/// over the maximally entangled input (1 for trace-preserving channels).
double mean_success_probability(const ConditionalChannel& channel);

/// Average gate fidelity from the entanglement fidelity:
/// F_g = (d F_e + 1) / (d + 1).
double avg_gate_fidelity(double f_e, int d);

/// Closed-form references for the two-qubit pipeline with matched reversal
/// strength p_r = p:
///   unfiltered F_g = (1/5) (1 + (1 + sqrt(1-p))^4 / 4)
///   filtered   F_g = (1/5) (1 + 16 / (2+p)^2)
///   success    P_r = (1-p)^2 (2+p)^2 / 4
double analytic_unfiltered(double p);
double analytic_filtered(double p);
double analytic_success(double p);

struct HaarEstimate {
  double mean = 0.0;
  double stderr_mean = 0.0;
};

/// Monte Carlo estimate of the average gate fidelity over Haar-random pure
/// states (normalized complex-Gaussian vectors), deterministic per seed.
/// Post-selected channels are renormalized per sample.
HaarEstimate haar_average_fidelity(const ConditionalChannel& channel,
                                   const Operator& u_id, int samples,
                                   std::uint64_t seed);

/// Kraus operators from the Choi eigendecomposition. Throws if the Choi
/// matrix fails the PSD floor.
std::vector<Operator> kraus_from_superoperator(const ConditionalChannel& channel);

/// Trace distance (1/2) || a - b ||_1 between Hermitian matrices.
double trace_distance(const Operator& a, const Operator& b);

}  // namespace adf

#endif  // ADFILTER_METRICS_HPP
