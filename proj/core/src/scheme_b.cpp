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

#include "adfilter/scheme_b.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "adfilter/gates.hpp"

namespace adf {

ChainSpec ChainSpec::axial_four_ion(double nbar_equal, double eta) {
  ChainSpec chain;
  chain.eta_com = eta;
  chain.nbars.assign(4, nbar_equal);
  chain.validate();
  return chain;
}

void ChainSpec::validate() const {
  if (eta_com <= 0.0) throw std::invalid_argument("ChainSpec: eta must be > 0");
  if (freq_ratios.empty() || freq_ratios.front() != 1.0) {
    throw std::invalid_argument("ChainSpec: freq_ratios[0] must be 1");
  }
  for (double r : freq_ratios) {
    if (r < 1.0) throw std::invalid_argument("ChainSpec: frequency ratios must be >= 1");
  }
  if (nbars.size() != freq_ratios.size()) {
    throw std::invalid_argument("ChainSpec: one nbar per mode required");
  }
  for (double n : nbars) {
    if (n < 0.0) throw std::invalid_argument("ChainSpec: nbar must be >= 0");
  }
}

Operator reversal_unitary_b(double chi) { return reversal_unitary_b(chi, chi); }

Operator reversal_unitary_b(double chi_single, double chi_zz) {
  constexpr double pi = std::numbers::pi;
  const Operator id2 = Operator::Identity(2, 2);
  const Operator open_rot = tensor(y_rotation(-pi / 2.0), id2);
  const Operator entangle = zz_phase_gate(chi_zz);
  const Operator ancilla_phase = tensor(z_rotation(chi_single), id2);
  const Operator close_rot = tensor(y_rotation(pi / 2.0), id2);
  return close_rot * ancilla_phase * entangle * open_rot;
}

Operator ancilla_ground_block(const Operator& u_pair) {
  if (u_pair.rows() != 4 || u_pair.cols() != 4) {
    throw std::invalid_argument("ancilla_ground_block: need a two-qubit operator");
  }
  return u_pair.block(0, 0, 2, 2);
}

double chi_from_strength(double p_r) {
  if (p_r < 0.0 || p_r > 1.0) {
    throw std::invalid_argument("chi_from_strength: p_r outside [0, 1]");
  }
  return std::acos(std::sqrt(1.0 - p_r));
}

double thermal_correction(const ChainSpec& chain) {
  chain.validate();
  double bracket = 0.0;
  for (std::size_t m = 0; m < chain.nbars.size(); ++m) {
    bracket += chain.nbars[m] / chain.freq_ratios[m];
  }
  const double correction = 1.0 - chain.eta_com * chain.eta_com * bracket;
  if (correction <= 0.0) {
    throw std::invalid_argument(
        "thermal_correction: occupation too hot for the first-order model");
  }
  return correction;
}

FilterResult run_scheme_b(const DensityMatrix& rho_s, double p_r,
                          const ChainSpec& chain, SchemeBMode mode) {
  if (rho_s.dim() != 4) {
    throw std::invalid_argument("run_scheme_b: need a two-qubit state");
  }
  const double chi_c = chi_from_strength(p_r);
  const double correction = thermal_correction(chain);
  const double chi_zz = chi_c * correction;
  const double chi_single = (mode == SchemeBMode::ScaleAll) ? chi_zz : chi_c;

  const Operator block =
      ancilla_ground_block(reversal_unitary_b(chi_single, chi_zz));
  const Operator pair = tensor(block, block);
  const Operator filtered = pair * rho_s.entries() * pair.adjoint();
  const double p_success = filtered.trace().real();
  if (p_success <= 1e-15) {
    throw std::runtime_error("run_scheme_b: empty post-selection branch");
  }
  return FilterResult{DensityMatrix(filtered / p_success), p_success};
}

}  // namespace adf
