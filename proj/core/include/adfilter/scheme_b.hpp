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

#ifndef ADFILTER_SCHEME_B_HPP
#define ADFILTER_SCHEME_B_HPP

#include <vector>

#include "adfilter/filter.hpp"
#include "adfilter/qops.hpp"

namespace adf {

/// Axial mode ladder of the ion chain mediating the entangling gate. Slot 0
/// is the active centre-of-mass mode; frequencies are relative to it.
struct ChainSpec {
  double eta_com = 0.026;
  std::vector<double> freq_ratios{1.0, std::sqrt(3.0), std::sqrt(5.81),
                                  std::sqrt(9.308)};
  std::vector<double> nbars{0.0, 0.0, 0.0, 0.0};

  /// Four-ion axial chain with the same occupation on every mode.
  static ChainSpec axial_four_ion(double nbar_equal, double eta = 0.026);

  void validate() const;
};

/// Reversal block on one (ancilla, system) qubit pair, ancilla factor
/// slowest: Y(pi/2)_a Z(chi)_a U_ZZ(chi) Y(-pi/2)_a, rightmost first. Its
/// ancilla-|0> block equals diag(cos chi, 1) on the system qubit.
Operator reversal_unitary_b(double chi);

/// Same sequence with the single-qubit phase and the entangling phase set
/// independently (the thermal model can detune them).
Operator reversal_unitary_b(double chi_single, double chi_zz);

/// <0_a| U |0_a> as an operator on the system qubit.
Operator ancilla_ground_block(const Operator& u_pair);

/// chi_c = arccos(sqrt(1 - p_r)) in [0, pi/2].
double chi_from_strength(double p_r);

/// First-order correction O({nbar}) = 1 - eta^2 sum_m (w_1/w_m) nbar_m to
/// the entangling phase from warm active and spectator modes. Throws when
/// the correction turns non-positive (outside this model's validity).
double thermal_correction(const ChainSpec& chain);

/// Whether the thermal scaling hits only the phonon-mediated entangling
/// phase (ScaleZzOnly) or the single-qubit phase as well (ScaleAll).
enum class SchemeBMode { ScaleZzOnly, ScaleAll };

/// Applies the scheme-B reversal to each qubit with the entangling phase
/// replaced by chi_c * O({nbar}), projects the ancillas onto |0>, and
/// renormalizes. At O = 1 both modes reduce exactly to apply_filter.
FilterResult run_scheme_b(const DensityMatrix& rho_s, double p_r,
                          const ChainSpec& chain,
                          SchemeBMode mode = SchemeBMode::ScaleZzOnly);

}  // namespace adf

#endif  // ADFILTER_SCHEME_B_HPP
