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

#ifndef ADFILTER_GATES_HPP
#define ADFILTER_GATES_HPP

#include <string_view>

#include "adfilter/qops.hpp"

namespace adf {

/// Pulse area and phase of a single laser pulse.
struct PulseSpec {
  double theta = 0.0;  // radians, >= 0
  double phi = 0.0;    // radians
};

/// Rabi frequency and duration; pulse area = rabi * duration.
struct PulseTiming {
  double rabi = 0.0;      // rad/s, > 0
  double duration = 0.0;  // seconds, >= 0

  double area() const { return rabi * duration; }
};

Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator sigma_plus();   // |1><0|
Operator sigma_minus();  // |0><1|

Operator hadamard();
/// CNOT with qubit 0 as control.
Operator cnot();

/// Mode annihilation operator on a truncated Fock space of `dim` levels.
Operator annihilation(int dim);

enum class BellLabel { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Label from the preparation input (|+/-> on qubit 0, |bit> on qubit 1):
/// (+,0) -> Phi+, (-,0) -> Phi-, (+,1) -> Psi+, (-,1) -> Psi-.
BellLabel bell_label(char sign, int bit);
/// Parses "phi+", "phi-", "psi+", "psi-" (case-insensitive).
BellLabel parse_bell_label(std::string_view name);
std::string_view bell_label_name(BellLabel label);

Ket bell_ket(BellLabel label);
DensityMatrix bell_pair(BellLabel label);

/// Molmer-Sorensen entangling gate XX(pi/2) = (I - i sx (x) sx) / sqrt(2).
Operator ms_gate();

/// Carrier rotation on the three-level ion {|0>, |1>, |r>}, coupling
/// |0> <-> |r> and leaving |1> untouched:
/// exp{i (theta/2) (e^{i phi} |r><0| + e^{-i phi} |0><r|)}.
///
/// Only the |0> <-> |r> pair reproduces the target reversal operator
/// diag(sqrt(1-p_r), 1); a carrier on |1> <-> |r> would filter the wrong
/// level.
Operator carrier(double theta, double phi);

/// Carrier duration t1 = (2 / rabi) * arccos(sqrt(1 - p_r)), so that the
/// pulse area theta = rabi * t1 satisfies cos(theta/2) = sqrt(1 - p_r).
double carrier_duration(double p_r, double rabi);

/// Rabi frequency and duration of the reversal carrier pulse; its area is
/// the angle carrier() needs for strength p_r.
PulseTiming carrier_timing(double p_r, double rabi);

/// Area and phase actually fed to carrier() for a given reversal strength.
PulseSpec carrier_pulse(double p_r);

/// Which internal pair a sideband couples.
enum class SidebandLevels {
  RZero,    // |r> <-> |0> on the three-level ion (upper = |r|)
  ZeroOne,  // |1> <-> |0> on a two-level ancilla (upper = |1>)
};

/// Red-sideband rotation exp{i (theta/2) (e^{i phi} s+ a + e^{-i phi} s- a+)}
/// on ion (x) mode, ion factor slowest, mode truncated at n_max phonons.
/// The doublet {|upper, n>, |lower, n+1>} rotates by theta * sqrt(n+1); the
/// boundary state |upper, n_max> has no partner and is left invariant.
Operator red_sideband(double theta, double phi, SidebandLevels levels, int n_max);

/// exp{+i (chi/2) sz (x) sz}.
Operator zz_phase_gate(double chi);

/// exp{+i (theta/2) sy} and exp{+i (theta/2) sz}.
Operator y_rotation(double theta);
Operator z_rotation(double theta);

}  // namespace adf

#endif  // ADFILTER_GATES_HPP
