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

#include "adfilter/channels.hpp"
#include "adfilter/filter.hpp"
#include "adfilter/gates.hpp"
#include "adfilter/scheme_b.hpp"
#include "test_support.hpp"

using namespace adf;
using test::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("reversal_unitary_b: identity at zero phase, unitary in general") {
  CHECK(max_abs_diff(reversal_unitary_b(0.0), Operator::Identity(4, 4)) < 1e-15);
  for (double chi : {0.2, 0.9, kPi / 2.0}) {
    CHECK(is_unitary(reversal_unitary_b(chi)));
  }
}

TEST_CASE("ancilla-ground block equals diag(cos chi, 1)") {
  for (int k = 0; k < 20; ++k) {
    const double chi = kPi / 2.0 * k / 19.0;
    const Operator block = ancilla_ground_block(reversal_unitary_b(chi));
    Operator expected = Operator::Zero(2, 2);
    expected(0, 0) = std::cos(chi);
    expected(1, 1) = 1.0;
    CHECK(max_abs_diff(block, expected) < 1e-12);
  }
}

TEST_CASE("matched phase reproduces the reversal operator") {
  for (double p_r : {0.0, 0.3, 0.75, 1.0}) {
    const double chi = chi_from_strength(p_r);
    const Operator block = ancilla_ground_block(reversal_unitary_b(chi));
    CHECK(max_abs_diff(block, reversal_operator(p_r)) < 1e-12);
  }
  // chi = pi/2 is the hard von Neumann projection.
  const Operator block = ancilla_ground_block(reversal_unitary_b(kPi / 2.0));
  CHECK(std::abs(block(0, 0)) < 1e-15);
  CHECK(std::abs(block(1, 1) - Complex(1.0, 0.0)) < 1e-15);
}

TEST_CASE("chi_from_strength: endpoints and the arccos(1/2) point") {
  CHECK(chi_from_strength(0.0) == 0.0);
  CHECK(chi_from_strength(1.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(chi_from_strength(0.75) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(chi_from_strength(-0.2), std::invalid_argument);
}

TEST_CASE("thermal_correction: cold chain, reference values, hot failure") {
  CHECK(thermal_correction(ChainSpec::axial_four_ion(0.0)) == 1.0);

  // Equal occupation: O = 1 - eta^2 nbar (1 + 1/sqrt(3) + 1/sqrt(5.81)
  // + 1/sqrt(9.308)), evaluated here rather than copied.
  const double bracket = 1.0 + 1.0 / std::sqrt(3.0) + 1.0 / std::sqrt(5.81) +
                         1.0 / std::sqrt(9.308);
  const double eta2 = 0.026 * 0.026;
  CHECK(thermal_correction(ChainSpec::axial_four_ion(10.0)) ==
        doctest::Approx(1.0 - eta2 * 10.0 * bracket).epsilon(1e-14));
  CHECK(thermal_correction(ChainSpec::axial_four_ion(10.0)) ==
        doctest::Approx(0.9843168531).epsilon(1e-9));
  CHECK(thermal_correction(ChainSpec::axial_four_ion(50.0)) ==
        doctest::Approx(0.9215842654).epsilon(1e-9));

  CHECK_THROWS_AS(thermal_correction(ChainSpec::axial_four_ion(1000.0)),
                  std::invalid_argument);
}

TEST_CASE("thermal_correction is linear in each mode occupation") {
  ChainSpec chain = ChainSpec::axial_four_ion(0.0);
  const double base = thermal_correction(chain);
  chain.nbars[2] = 4.0;
  const double single = thermal_correction(chain);
  chain.nbars[2] = 8.0;
  const double doubled = thermal_correction(chain);
  CHECK(base - doubled == doctest::Approx(2.0 * (base - single)).epsilon(1e-12));

  // Symmetric under swapping equal-frequency modes.
  ChainSpec symmetric = ChainSpec::axial_four_ion(0.0);
  symmetric.freq_ratios = {1.0, 2.0, 2.0, 3.0};
  symmetric.nbars = {0.0, 5.0, 7.0, 0.0};
  const double forward = thermal_correction(symmetric);
  std::swap(symmetric.nbars[1], symmetric.nbars[2]);
  CHECK(thermal_correction(symmetric) == doctest::Approx(forward).epsilon(1e-14));
}

TEST_CASE("ChainSpec validation") {
  ChainSpec chain = ChainSpec::axial_four_ion(1.0);
  chain.freq_ratios[0] = 1.2;
  CHECK_THROWS_AS(chain.validate(), std::invalid_argument);

  ChainSpec mismatched = ChainSpec::axial_four_ion(1.0);
  mismatched.nbars.pop_back();
  CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);
}

TEST_CASE("run_scheme_b at zero occupation equals apply_filter") {
  const ChainSpec cold = ChainSpec::axial_four_ion(0.0);
  auto rng = test::make_rng(51);
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix rho = test::random_state(4, rng);
    const DensityMatrix damped = two_qubit_damping(rho, 0.35, 0.35);
    const FilterResult expected = apply_filter(damped, 0.35, 0.35);
    for (SchemeBMode mode : {SchemeBMode::ScaleZzOnly, SchemeBMode::ScaleAll}) {
      const FilterResult actual = run_scheme_b(damped, 0.35, cold, mode);
      CHECK(max_abs_diff(actual.state.entries(), expected.state.entries()) < 1e-12);
      CHECK(actual.success_probability ==
            doctest::Approx(expected.success_probability).epsilon(1e-12));
    }
  }
}

TEST_CASE("run_scheme_b with zero strength is the identity at any occupation") {
  auto rng = test::make_rng(52);
  const DensityMatrix rho = test::random_state(4, rng);
  for (double nbar : {0.0, 10.0, 50.0}) {
    const FilterResult result =
        run_scheme_b(rho, 0.0, ChainSpec::axial_four_ion(nbar));
    CHECK(result.success_probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs_diff(result.state.entries(), rho.entries()) < 1e-12);
  }
}

TEST_CASE("warm chains succeed more often at long memory times") {
  const double p = damping_probability(0.9, 1.0);
  const DensityMatrix damped =
      two_qubit_damping(bell_pair(BellLabel::PsiMinus), p, p);
  for (SchemeBMode mode : {SchemeBMode::ScaleZzOnly, SchemeBMode::ScaleAll}) {
    const double cold =
        run_scheme_b(damped, p, ChainSpec::axial_four_ion(0.0), mode)
            .success_probability;
    const double warm =
        run_scheme_b(damped, p, ChainSpec::axial_four_ion(50.0), mode)
            .success_probability;
    CHECK(warm > cold);
  }
}

TEST_CASE("scale_all weakening is monotone over the occupation ladder") {
  const DensityMatrix target = bell_pair(BellLabel::PsiMinus);
  for (double p : {0.3, 0.6}) {
    const DensityMatrix damped = two_qubit_damping(target, p, p);
    double last_fidelity = 1.1;
    double last_success = -0.1;
    for (double nbar : {0.0, 10.0, 20.0, 50.0}) {
      const FilterResult result = run_scheme_b(
          damped, p, ChainSpec::axial_four_ion(nbar), SchemeBMode::ScaleAll);
      const double fidelity =
          (target.entries() * result.state.entries()).trace().real();
      CHECK(fidelity <= last_fidelity + 1e-12);
      CHECK(result.success_probability >= last_success - 1e-12);
      last_fidelity = fidelity;
      last_success = result.success_probability;
    }
  }
}
