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

#ifndef ADFILTER_FILTER_HPP
#define ADFILTER_FILTER_HPP

#include <array>
#include <vector>

#include "adfilter/qops.hpp"

namespace adf {

/// Strength of the measurement reversal, p_r in [0, 1].
struct ReversalStrength {
  double p_r = 0.0;

  explicit ReversalStrength(double value);
};

/// Reversal operator M_r = diag(sqrt(1 - p_r), 1). Deliberately kept
/// unnormalized; the usual state-dependent 1/sqrt(P_r) factor is replaced by
/// post-selection weight bookkeeping, so completeness checks stay meaningful.
Operator reversal_operator(double p_r);

struct FilterResult {
  DensityMatrix state;         // normalized
  double success_probability;  // P_r in (0, 1]
};

/// Applies M_r1 (x) M_r2 to a normalized two-qubit state and renormalizes.
/// Throws std::runtime_error if the filter annihilates the state.
FilterResult apply_filter(const DensityMatrix& rho, double p_r1, double p_r2);

/// Which failure-branch operator the four-outcome measurement uses. The
/// symmetric-looking pair {diag(sqrt(1-p_r),1), diag(sqrt(p_r),1)} fails
/// POVM completeness; the pair the ancilla circuit actually yields,
/// {diag(sqrt(1-p_r),1), diag(sqrt(p_r),0)}, satisfies it. The success
/// branch is identical either way. Default: the circuit-derived pair.
enum class PovmMode { CircuitDerived, PovmPaper };

struct FilterOutcome {
  DensityMatrix state;             // normalized (zero matrix if branch weight ~0)
  double probability;              // branch weight
  std::array<int, 2> outcome_bits; // ancilla results
};

/// The four-outcome measurement on a normalized two-qubit state, applying
/// one of {M, Mbar} per qubit. Outcome (0,0) coincides with apply_filter.
std::vector<FilterOutcome> four_outcome_measurement(
    const DensityMatrix& rho, double p_r, PovmMode mode = PovmMode::CircuitDerived);

/// Reversal strength matched to the decay: p_r = p = 1 - exp(-t / T1).
ReversalStrength match_strength(double t, double t1);

}  // namespace adf

#endif  // ADFILTER_FILTER_HPP
