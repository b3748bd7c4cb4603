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

#include <doctest.h>

#include <numbers>

#include "adfilter/gates.hpp"
#include "test_support.hpp"

using namespace adf;
using test::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("bell_pair: explicit vectors and preparation circuit") {
  const double s = 1.0 / std::sqrt(2.0);

  Ket phi_plus = Ket::Zero(4);
  phi_plus(0) = s;
  phi_plus(3) = s;
  CHECK(max_abs_diff(bell_pair(bell_label('+', 0)).entries(),
                     DensityMatrix::pure(phi_plus).entries()) < 1e-15);

  Ket psi_minus = Ket::Zero(4);
  psi_minus(1) = s;
  psi_minus(2) = -s;
  CHECK(max_abs_diff(bell_pair(bell_label('-', 1)).entries(),
                     DensityMatrix::pure(psi_minus).entries()) < 1e-15);

  // CNOT (H x I) |sign, bit> reproduces each pair.
  const Operator prep = cnot() * tensor(hadamard(), Operator::Identity(2, 2));
  const struct {
    char sign;
    int bit;
  } inputs[] = {{'+', 0}, {'-', 0}, {'+', 1}, {'-', 1}};
  for (const auto& in : inputs) {
    Ket start = Ket::Zero(4);
    // |+> = H|0>, |-> = H|1>: prepare |sign> via the first qubit basis index.
    const int first = (in.sign == '+') ? 0 : 1;
    start(first * 2 + in.bit) = 1.0;
    const Ket prepared = prep * start;
    const DensityMatrix expected = bell_pair(bell_label(in.sign, in.bit));
    CHECK(max_abs_diff(DensityMatrix::pure(prepared).entries(),
                       expected.entries()) < 1e-15);
  }
}

TEST_CASE("bell states are pairwise orthogonal") {
  const BellLabel labels[] = {BellLabel::PhiPlus, BellLabel::PhiMinus,
                              BellLabel::PsiPlus, BellLabel::PsiMinus};
  for (BellLabel a : labels) {
    for (BellLabel b : labels) {
      const Complex overlap = bell_ket(a).adjoint() * bell_ket(b);
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-15);
    }
  }
}

TEST_CASE("bell stabilizer signs under sigma_x x sigma_x") {
  const Operator xx = tensor(pauli_x(), pauli_x());
  const auto expect = [&](BellLabel label, double sign) {
    const Ket psi = bell_ket(label);
    CHECK((psi.adjoint() * xx * psi).value().real() == doctest::Approx(sign));
  };
  expect(BellLabel::PhiPlus, 1.0);
  expect(BellLabel::PsiPlus, 1.0);
  expect(BellLabel::PhiMinus, -1.0);
  expect(BellLabel::PsiMinus, -1.0);
}

TEST_CASE("ms_gate: action, unitarity, square") {
  const Operator u = ms_gate();
  CHECK(is_unitary(u));

  Ket zz = Ket::Zero(4);
  zz(0) = 1.0;
  const Ket out = u * zz;
  CHECK(std::abs(out(0) - Complex(1.0, 0.0) / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(out(3) - Complex(0.0, -1.0) / std::sqrt(2.0)) < 1e-15);

  const Operator expected_square =
      Complex(0.0, -1.0) * tensor(pauli_x(), pauli_x());
  CHECK(max_abs_diff(u * u, expected_square) < 1e-15);
}

TEST_CASE("carrier: identity, reversal amplitude, full transfer") {
  CHECK(max_abs_diff(carrier(0.0, 0.0), Operator::Identity(3, 3)) == 0.0);

  for (double p_r : {0.1, 0.5, 0.9}) {
    const double theta = 2.0 * std::acos(std::sqrt(1.0 - p_r));
    const Operator u = carrier(theta, 0.0);
    CHECK(u(0, 0).real() == doctest::Approx(std::sqrt(1.0 - p_r)).epsilon(1e-12));
    CHECK(u(1, 1) == Complex(1.0, 0.0));
    CHECK(is_unitary(u));
  }

  const Operator half_turn = carrier(kPi, 0.0);
  CHECK(std::abs(half_turn(2, 0) - Complex(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(half_turn(0, 0)) < 1e-12);
}

TEST_CASE("carrier_duration endpoints and the 25 microsecond point") {
  const double rabi = 2.0 * kPi * 1e4;
  CHECK(carrier_duration(0.0, rabi) == 0.0);
  CHECK(carrier_duration(1.0, rabi) == doctest::Approx(kPi / rabi).epsilon(1e-12));
  // p_r = 1/2: t1 = 2 arccos(1/sqrt(2)) / rabi = (pi/2) / rabi = 25 us here.
  CHECK(carrier_duration(0.5, rabi) == doctest::Approx(25e-6).epsilon(1e-12));
  CHECK_THROWS_AS(carrier_duration(1.5, rabi), std::invalid_argument);
  CHECK_THROWS_AS(carrier_duration(0.5, 0.0), std::invalid_argument);
}

TEST_CASE("carrier timing and pulse spec agree on the pulse area") {
  const double rabi = 2.0 * kPi * 1e4;
  for (double p_r : {0.1, 0.5, 0.9}) {
    const PulseTiming timing = carrier_timing(p_r, rabi);
    const PulseSpec pulse = carrier_pulse(p_r);
    CHECK(timing.area() == doctest::Approx(pulse.theta).epsilon(1e-12));
    CHECK(std::cos(pulse.theta / 2.0) ==
          doctest::Approx(std::sqrt(1.0 - p_r)).epsilon(1e-12));
    CHECK(pulse.theta >= 0.0);
  }
}

TEST_CASE("red_sideband: full and partial doublet transfer") {
  const int n_max = 6;
  const int modes = n_max + 1;
  const Operator u = red_sideband(kPi, 0.0, SidebandLevels::RZero, n_max);
  const auto idx = [&](int level, int n) { return level * modes + n; };

  // |r, 0> -> i |0, 1>
  Ket start = Ket::Zero(3 * modes);
  start(idx(2, 0)) = 1.0;
  Ket out = u * start;
  CHECK(std::abs(out(idx(0, 1)) - Complex(0.0, 1.0)) < 1e-12);

  // |r, 1>: transferred population sin^2(pi sqrt(2) / 2).
  start.setZero();
  start(idx(2, 1)) = 1.0;
  out = u * start;
  const double transferred = std::norm(out(idx(0, 2)));
  const double expected = std::pow(std::sin(kPi * std::sqrt(2.0) / 2.0), 2);
  CHECK(expected == doctest::Approx(0.6331276710).epsilon(1e-9));
  CHECK(transferred == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::norm(out(idx(2, 1))) == doctest::Approx(1.0 - expected).epsilon(1e-12));
}

TEST_CASE("red_sideband leaves the uncoupled level and the boundary alone") {
  const int n_max = 4;
  const int modes = n_max + 1;
  const Operator u = red_sideband(1.3, 0.4, SidebandLevels::RZero, n_max);
  const auto idx = [&](int level, int n) { return level * modes + n; };

  for (int n = 0; n < modes; ++n) {
    Ket start = Ket::Zero(3 * modes);
    start(idx(1, n)) = 1.0;  // |1> is not part of the coupling
    const Ket out = u * start;
    CHECK(std::abs(out(idx(1, n)) - Complex(1.0, 0.0)) < 1e-14);
  }

  Ket boundary = Ket::Zero(3 * modes);
  boundary(idx(2, n_max)) = 1.0;
  const Ket out = u * boundary;
  CHECK(std::abs(out(idx(2, n_max)) - Complex(1.0, 0.0)) < 1e-14);

  CHECK_THROWS_AS(red_sideband(1.0, 0.0, SidebandLevels::RZero, 0),
                  std::invalid_argument);
}

TEST_CASE("red_sideband is unitary away from the truncation boundary") {
  const int n_max = 8;
  const int modes = n_max + 1;
  for (SidebandLevels levels : {SidebandLevels::RZero, SidebandLevels::ZeroOne}) {
    const Operator u = red_sideband(0.77, 1.1, levels, n_max);
    CHECK(is_unitary(u, 1e-12));  // invariant boundary keeps it exactly unitary

    // The excitation number (upper-level population + phonon count) is
    // conserved on the interior.
    const int ion_dim = (levels == SidebandLevels::RZero) ? 3 : 2;
    const int upper = (levels == SidebandLevels::RZero) ? 2 : 1;
    Operator number = Operator::Zero(ion_dim * modes, ion_dim * modes);
    for (int l = 0; l < ion_dim; ++l) {
      for (int n = 0; n < modes; ++n) {
        number(l * modes + n, l * modes + n) = n + (l == upper ? 1 : 0);
      }
    }
    const Operator commutator = u * number - number * u;
    // Restrict to columns below the boundary doublet.
    double interior_norm = 0.0;
    for (int l = 0; l < ion_dim; ++l) {
      for (int n = 0; n < modes; ++n) {
        if (l == upper && n == n_max) continue;
        interior_norm =
            std::max(interior_norm, commutator.col(l * modes + n).cwiseAbs().maxCoeff());
      }
    }
    CHECK(interior_norm < 1e-12);
  }
}

TEST_CASE("zz_phase_gate: identity, quarter phases, unit modulus") {
  CHECK(max_abs_diff(zz_phase_gate(0.0), Operator::Identity(4, 4)) == 0.0);

  const Operator u = zz_phase_gate(kPi);
  CHECK(std::abs(u(0, 0) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(u(1, 1) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(u(2, 2) - Complex(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(u(3, 3) - Complex(0.0, 1.0)) < 1e-15);

  for (double chi : {0.3, 1.0, 2.5}) {
    const Operator v = zz_phase_gate(chi);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(v(i, i)) == doctest::Approx(1.0));
    CHECK(is_unitary(v));
  }
}

TEST_CASE("y and z rotations: identity, half rotations, inverse composition") {
  CHECK(max_abs_diff(y_rotation(0.0), Operator::Identity(2, 2)) == 0.0);
  CHECK(max_abs_diff(z_rotation(0.0), Operator::Identity(2, 2)) == 0.0);

  // exp(-i pi/4 sy) |0> = (|0> + |1>) / sqrt(2)
  Ket zero = Ket::Zero(2);
  zero(0) = 1.0;
  const Ket rotated = y_rotation(-kPi / 2.0) * zero;
  CHECK(std::abs(rotated(0) - Complex(1.0, 0.0) / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(rotated(1) - Complex(1.0, 0.0) / std::sqrt(2.0)) < 1e-15);

  CHECK(max_abs_diff(y_rotation(kPi / 2.0) * y_rotation(-kPi / 2.0),
                     Operator::Identity(2, 2)) < 1e-15);
  CHECK(max_abs_diff(z_rotation(0.7) * z_rotation(-0.7),
                     Operator::Identity(2, 2)) < 1e-15);
}

TEST_CASE("every fixed gate passes the unitary check") {
  CHECK(is_unitary(hadamard()));
  CHECK(is_unitary(cnot()));
  CHECK(is_unitary(ms_gate()));
  CHECK(is_unitary(carrier(0.9, 0.2)));
  CHECK(is_unitary(zz_phase_gate(0.9)));
  CHECK(is_unitary(y_rotation(0.9)));
  CHECK(is_unitary(z_rotation(0.9)));
}
