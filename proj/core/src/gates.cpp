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

#include "adfilter/gates.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace adf {

namespace {
constexpr Complex kI(0.0, 1.0);
}

Operator pauli_x() {
  Operator m = Operator::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Operator pauli_y() {
  Operator m = Operator::Zero(2, 2);
  m(0, 1) = -kI;
  m(1, 0) = kI;
  return m;
}

Operator pauli_z() {
  Operator m = Operator::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Operator sigma_plus() {
  Operator m = Operator::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

Operator sigma_minus() { return sigma_plus().adjoint(); }

Operator hadamard() {
  Operator m(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

Operator cnot() {
  Operator m = Operator::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

Operator annihilation(int dim) {
  if (dim < 2) throw std::invalid_argument("annihilation: need >= 2 levels");
  Operator a = Operator::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

BellLabel bell_label(char sign, int bit) {
  if ((sign != '+' && sign != '-') || (bit != 0 && bit != 1)) {
    throw std::invalid_argument("bell_label: expected sign in {+,-}, bit in {0,1}");
  }
  if (bit == 0) return sign == '+' ? BellLabel::PhiPlus : BellLabel::PhiMinus;
  return sign == '+' ? BellLabel::PsiPlus : BellLabel::PsiMinus;
}

BellLabel parse_bell_label(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "phi+") return BellLabel::PhiPlus;
  if (lower == "phi-") return BellLabel::PhiMinus;
  if (lower == "psi+") return BellLabel::PsiPlus;
  if (lower == "psi-") return BellLabel::PsiMinus;
  throw std::invalid_argument("parse_bell_label: unknown label '" + lower + "'");
}

std::string_view bell_label_name(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PhiMinus: return "phi-";
    case BellLabel::PsiPlus: return "psi+";
    case BellLabel::PsiMinus: return "psi-";
  }
  throw std::invalid_argument("bell_label_name: invalid label");
}

Ket bell_ket(BellLabel label) {
  Ket psi = Ket::Zero(4);
  const double s = 1.0 / std::sqrt(2.0);
  switch (label) {
    case BellLabel::PhiPlus: psi(0) = s; psi(3) = s; break;
    case BellLabel::PhiMinus: psi(0) = s; psi(3) = -s; break;
    case BellLabel::PsiPlus: psi(1) = s; psi(2) = s; break;
    case BellLabel::PsiMinus: psi(1) = s; psi(2) = -s; break;
  }
  return psi;
}

DensityMatrix bell_pair(BellLabel label) { return DensityMatrix::pure(bell_ket(label)); }

Operator ms_gate() {
  const Operator xx = tensor(pauli_x(), pauli_x());
  return (Operator::Identity(4, 4) - kI * xx) / std::sqrt(2.0);
}

Operator carrier(double theta, double phi) {
  Operator u = Operator::Identity(3, 3);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex phase = std::exp(kI * phi);
  u(0, 0) = c;
  u(2, 2) = c;
  u(2, 0) = kI * phase * s;
  u(0, 2) = kI * std::conj(phase) * s;
  return u;
}

double carrier_duration(double p_r, double rabi) {
  if (p_r < 0.0 || p_r > 1.0) {
    throw std::invalid_argument("carrier_duration: p_r outside [0, 1]");
  }
  if (rabi <= 0.0) throw std::invalid_argument("carrier_duration: rabi must be > 0");
  return 2.0 / rabi * std::acos(std::sqrt(1.0 - p_r));
}

PulseTiming carrier_timing(double p_r, double rabi) {
  return PulseTiming{rabi, carrier_duration(p_r, rabi)};
}

PulseSpec carrier_pulse(double p_r) {
  return PulseSpec{2.0 * std::acos(std::sqrt(1.0 - p_r)), 0.0};
}

Operator red_sideband(double theta, double phi, SidebandLevels levels, int n_max) {
  if (n_max < 1) throw std::invalid_argument("red_sideband: n_max must be >= 1");

  const int ion_dim = (levels == SidebandLevels::RZero) ? 3 : 2;
  const int upper = (levels == SidebandLevels::RZero) ? 2 : 1;
  const int lower = 0;
  const int modes = n_max + 1;
  const int dim = ion_dim * modes;

  const auto idx = [&](int level, int n) { return level * modes + n; };

  Operator u = Operator::Identity(dim, dim);
  const Complex phase = std::exp(kI * phi);
  for (int n = 0; n < n_max; ++n) {
    // Doublet {|upper, n>, |lower, n+1>}, Rabi scaling sqrt(n+1).
    const double half = theta * std::sqrt(n + 1.0) / 2.0;
    const double c = std::cos(half);
    const double s = std::sin(half);
    const int iu = idx(upper, n);
    const int il = idx(lower, n + 1);
    u(iu, iu) = c;
    u(il, il) = c;
    u(iu, il) = kI * phase * s;
    u(il, iu) = kI * std::conj(phase) * s;
  }
  // |upper, n_max> has no partner within the truncation and stays invariant.
  return u;
}

Operator zz_phase_gate(double chi) {
  Operator u = Operator::Zero(4, 4);
  const Complex plus = std::exp(kI * chi / 2.0);
  const Complex minus = std::exp(-kI * chi / 2.0);
  u(0, 0) = plus;
  u(1, 1) = minus;
  u(2, 2) = minus;
  u(3, 3) = plus;
  return u;
}

Operator y_rotation(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Operator u(2, 2);
  u << c, s, -s, c;
  return u;
}

Operator z_rotation(double theta) {
  Operator u = Operator::Zero(2, 2);
  u(0, 0) = std::exp(kI * theta / 2.0);
  u(1, 1) = std::exp(-kI * theta / 2.0);
  return u;
}

}  // namespace adf
