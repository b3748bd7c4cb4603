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

#ifndef ADFILTER_SCHEME_A_HPP
#define ADFILTER_SCHEME_A_HPP

#include "adfilter/conditional_channel.hpp"
#include "adfilter/filter.hpp"
#include "adfilter/qops.hpp"

namespace adf {

/// One reversal block: three-level system ion {|0>, |1>, |r>} (x) two-level
/// ancilla (x) truncated phonon mode, in that slot order.
struct BlockLayout {
  int n_max = 12;

  SpaceLayout layout() const { return SpaceLayout{3, 2, n_max + 1}; }
  int dim() const { return 6 * (n_max + 1); }
};

/// Thermal (Gibbs) occupation of one vibrational mode. The Fock cutoff is
/// raised automatically until the truncated tail weight drops below
/// kThermalTailTol, keeping truncation error far below the thermal effects
/// under study.
struct ThermalModeSpec {
  double nbar = 0.0;
  int n_max = 12;

  int effective_n_max() const;
};

inline constexpr double kThermalTailTol = 1e-8;

/// Diagonal Fock-basis Gibbs state p(n) = (1/(1+nbar)) (nbar/(1+nbar))^n,
/// renormalized over the truncated ladder so the trace is exactly 1.
DensityMatrix thermal_state(const ThermalModeSpec& spec);

/// The unitary part of one reversal block: carrier on the system ion with
/// cos(theta_1/2) = sqrt(1 - p_r), then a pi red sideband on system x mode,
/// then a pi red sideband on ancilla x mode (all phases zero).
Operator block_circuit(double p_r, const BlockLayout& layout);

/// Conditional map on one system qubit implemented by the block: couple to
/// a fresh |0> ancilla and a thermal mode, run the block circuit, project
/// the ancilla onto |0>, and discard ancilla and mode. The output lives on
/// the three-level system space; population left in |r> is leakage. The
/// channel's output embedding marks the {|0>, |1>} computational block.
ConditionalChannel block_conditional_channel(double p_r, const ThermalModeSpec& thermal);

/// How population leaked to |r> is scored after post-selection.
/// KeepInWeight: the leaked population passed the ancilla measurement, so it
/// stays in the success probability but contributes zero fidelity (a
/// fluorescence readout does not distinguish |r> from the qubit states).
/// Discard: leakage is treated as additional post-selection.
enum class LeakagePolicy { KeepInWeight, Discard };

/// Runs one block per qubit on a normalized two-qubit state (the blocks are
/// local, so the joint action factorizes) and renormalizes. Returns the
/// post-selected state restricted to the computational block and the joint
/// success probability.
FilterResult run_scheme_a(const DensityMatrix& rho_s, double p_r,
                          const ThermalModeSpec& thermal,
                          LeakagePolicy policy = LeakagePolicy::KeepInWeight);

}  // namespace adf

#endif  // ADFILTER_SCHEME_A_HPP
