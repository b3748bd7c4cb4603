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

#include "adfilter/scheme_a.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "adfilter/gates.hpp"

namespace adf {

namespace {

// Slot indices of the block layout [system(3), ancilla(2), mode(M)].
constexpr int kSystemSlot = 0;
constexpr int kAncillaSlot = 1;

// Embeds a (system x mode) operator into the block, identity on the ancilla.
Operator embed_system_mode(const Operator& op, int modes) {
  const int dim = 6 * modes;
  const auto block_idx = [&](int s, int a, int n) { return (s * 2 + a) * modes + n; };
  Operator out = Operator::Zero(dim, dim);
  for (int s = 0; s < 3; ++s)
    for (int sp = 0; sp < 3; ++sp)
      for (int n = 0; n < modes; ++n)
        for (int np = 0; np < modes; ++np) {
          const Complex v = op(s * modes + n, sp * modes + np);
          if (v == Complex(0.0, 0.0)) continue;
          for (int a = 0; a < 2; ++a) {
            out(block_idx(s, a, n), block_idx(sp, a, np)) = v;
          }
        }
  return out;
}

// Embeds an (ancilla x mode) operator into the block, identity on the system.
Operator embed_ancilla_mode(const Operator& op, int modes) {
  const int dim = 6 * modes;
  const auto block_idx = [&](int s, int a, int n) { return (s * 2 + a) * modes + n; };
  Operator out = Operator::Zero(dim, dim);
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int n = 0; n < modes; ++n)
        for (int np = 0; np < modes; ++np) {
          const Complex v = op(a * modes + n, ap * modes + np);
          if (v == Complex(0.0, 0.0)) continue;
          for (int s = 0; s < 3; ++s) {
            out(block_idx(s, a, n), block_idx(s, ap, np)) = v;
          }
        }
  return out;
}

}  // namespace

int ThermalModeSpec::effective_n_max() const {
  if (nbar < 0.0) throw std::invalid_argument("ThermalModeSpec: nbar must be >= 0");
  if (n_max < 1) throw std::invalid_argument("ThermalModeSpec: n_max must be >= 1");
  if (nbar == 0.0) return n_max;
  // Tail weight beyond n_max is q^(n_max + 1) with q = nbar / (1 + nbar).
  const double q = nbar / (1.0 + nbar);
  int cutoff = n_max;
  while (std::pow(q, cutoff + 1) > kThermalTailTol) ++cutoff;
  return cutoff;
}

DensityMatrix thermal_state(const ThermalModeSpec& spec) {
  const int cutoff = spec.effective_n_max();
  const int levels = cutoff + 1;
  Eigen::VectorXd weights(levels);
  if (spec.nbar == 0.0) {
    weights.setZero();
    weights(0) = 1.0;
  } else {
    const double q = spec.nbar / (1.0 + spec.nbar);
    for (int n = 0; n < levels; ++n) {
      weights(n) = std::pow(q, n) / (1.0 + spec.nbar);
    }
    weights /= weights.sum();
  }
  Operator rho = Operator::Zero(levels, levels);
  for (int n = 0; n < levels; ++n) rho(n, n) = weights(n);
  return DensityMatrix(std::move(rho));
}

Operator block_circuit(double p_r, const BlockLayout& layout) {
  if (p_r < 0.0 || p_r > 1.0) {
    throw std::invalid_argument("block_circuit: p_r outside [0, 1]");
  }
  const int modes = layout.n_max + 1;
  const PulseSpec pulse = carrier_pulse(p_r);
  constexpr double pi = std::numbers::pi;

  const Operator o1 =
      embed(carrier(pulse.theta, pulse.phi), layout.layout(), kSystemSlot);
  const Operator o2 = embed_system_mode(
      red_sideband(pi, 0.0, SidebandLevels::RZero, layout.n_max), modes);
  const Operator o3 = embed_ancilla_mode(
      red_sideband(pi, 0.0, SidebandLevels::ZeroOne, layout.n_max), modes);
  return o3 * (o2 * o1);
}

ConditionalChannel block_conditional_channel(double p_r,
                                             const ThermalModeSpec& thermal) {
  const BlockLayout block{thermal.effective_n_max()};
  const SpaceLayout layout = block.layout();
  const Operator u = block_circuit(p_r, block);

  Operator ancilla_ground = Operator::Zero(2, 2);
  ancilla_ground(0, 0) = 1.0;
  const Operator mode_state = thermal_state(thermal).entries();
  const Operator env = tensor(ancilla_ground, mode_state);
  const Operator ancilla_proj = embed(ancilla_ground, layout, kAncillaSlot);

  const std::vector<int> keep{kSystemSlot};
  Eigen::MatrixXcd superop(9, 4);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      Operator basis3 = Operator::Zero(3, 3);
      basis3(i, j) = Complex(1.0, 0.0);
      const Operator input = tensor(basis3, env);
      Operator evolved = u * input * u.adjoint();
      evolved = ancilla_proj * evolved * ancilla_proj;
      const Operator reduced = partial_trace(evolved, layout, keep);
      // Column (i, j) of the input basis under column stacking.
      superop.col(j * 2 + i) =
          Eigen::Map<const Eigen::VectorXcd>(reduced.data(), reduced.size());
    }
  }
  return ConditionalChannel(2, 3, std::move(superop), std::vector<int>{0, 1});
}

FilterResult run_scheme_a(const DensityMatrix& rho_s, double p_r,
                          const ThermalModeSpec& thermal, LeakagePolicy policy) {
  if (rho_s.dim() != 4) {
    throw std::invalid_argument("run_scheme_a: need a two-qubit state");
  }
  const ConditionalChannel block = block_conditional_channel(p_r, thermal);
  const ConditionalChannel pair = tensor(block, block);

  const Operator out = pair.apply(rho_s.entries());
  const auto& emb = pair.output_embedding();
  Operator computational(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) computational(a, b) = out(emb[a], emb[b]);
  }

  const double full_weight = out.trace().real();
  const double block_weight = computational.trace().real();
  const double p_success =
      (policy == LeakagePolicy::KeepInWeight) ? full_weight : block_weight;
  if (p_success <= 1e-15) {
    throw std::runtime_error("run_scheme_a: empty post-selection branch");
  }
  return FilterResult{DensityMatrix(computational / p_success), p_success};
}

}  // namespace adf
