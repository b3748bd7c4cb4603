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

#include "adfilter/channels.hpp"
#include "adfilter/filter.hpp"
#include "adfilter/gates.hpp"
#include "test_support.hpp"

using namespace adf;
using test::max_abs_diff;

namespace {

/// Brute-force oracle: expand the damped-and-filtered Bell state over the
/// four Kraus branch vectors (M x M)(K_i x K_j)|bell> and assemble the
/// post-selected state directly.
struct BranchExpansion {
  DensityMatrix state;
  double success;
};

BranchExpansion filter_branch_oracle(BellLabel label, double p, double p_r) {
  const Ket bell = bell_ket(label);
  const KrausChannel damping = damping_kraus(p);
  const Operator pair_filter = test::kron_oracle(reversal_operator(p_r),
                                                 reversal_operator(p_r));
  Operator accumulated = Operator::Zero(4, 4);
  double success = 0.0;
  for (const Operator& ki : damping.kraus) {
    for (const Operator& kj : damping.kraus) {
      const Ket branch = pair_filter * test::kron_oracle(ki, kj) * bell;
      accumulated += branch * branch.adjoint();
      success += branch.squaredNorm();
    }
  }
  return BranchExpansion{DensityMatrix(accumulated / success), success};
}

}  // namespace

TEST_CASE("reversal_operator: identity, projector, and closed form") {
  CHECK(max_abs_diff(reversal_operator(0.0), Operator::Identity(2, 2)) == 0.0);

  const Operator projector = reversal_operator(1.0);
  CHECK(projector(0, 0) == Complex(0.0, 0.0));
  CHECK(projector(1, 1) == Complex(1.0, 0.0));

  CHECK(reversal_operator(0.75)(0, 0).real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(reversal_operator(-0.1), std::invalid_argument);
}

TEST_CASE("apply_filter on the damped |Psi->: closed forms") {
  const DensityMatrix psi_minus = bell_pair(BellLabel::PsiMinus);
  for (double p : {0.1, 0.5, 0.6321205588285577}) {
    const DensityMatrix damped = two_qubit_damping(psi_minus, p, p);
    const FilterResult result = apply_filter(damped, p, p);
    const double fidelity =
        (psi_minus.entries() * result.state.entries()).trace().real();
    CHECK(fidelity == doctest::Approx(1.0 / (1.0 + p)).epsilon(1e-12));
    CHECK(result.success_probability ==
          doctest::Approx((1.0 - p) * (1.0 - p) * (1.0 + p)).epsilon(1e-12));
  }
  // t = T1 gives P_r = 0.2209, the value quoted as roughly 0.20.
  const double p = 0.6321205588285577;
  CHECK((1.0 - p) * (1.0 - p) * (1.0 + p) ==
        doctest::Approx(0.220883).epsilon(1e-5));
}

TEST_CASE("apply_filter with zero strength is the identity") {
  auto rng = test::make_rng(31);
  const DensityMatrix rho = test::random_state(4, rng);
  const FilterResult result = apply_filter(rho, 0.0, 0.0);
  CHECK(result.success_probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs_diff(result.state.entries(), rho.entries()) < 1e-12);
}

TEST_CASE("apply_filter reports an empty post-selection branch") {
  Ket ground = Ket::Zero(4);
  ground(0) = 1.0;
  CHECK_THROWS_AS(apply_filter(DensityMatrix::pure(ground), 1.0, 1.0),
                  std::runtime_error);
}

TEST_CASE("filtered fidelity via the branch oracle: all four Bell states") {
  const BellLabel labels[] = {BellLabel::PhiPlus, BellLabel::PhiMinus,
                              BellLabel::PsiPlus, BellLabel::PsiMinus};
  for (BellLabel label : labels) {
    const DensityMatrix target = bell_pair(label);
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const DensityMatrix damped = two_qubit_damping(target, p, p);
      const double unfiltered =
          (target.entries() * damped.entries()).trace().real();
      const FilterResult result = apply_filter(damped, p, p);
      const double filtered =
          (target.entries() * result.state.entries()).trace().real();

      // Filtering strictly helps at matched strength.
      CHECK(filtered > unfiltered);

      const BranchExpansion oracle = filter_branch_oracle(label, p, p);
      CHECK(max_abs_diff(result.state.entries(), oracle.state.entries()) < 1e-12);
      CHECK(result.success_probability ==
            doctest::Approx(oracle.success).epsilon(1e-12));

      const bool psi_family =
          (label == BellLabel::PsiPlus || label == BellLabel::PsiMinus);
      const double closed_form =
          psi_family ? 1.0 / (1.0 + p)
                     : (1.0 + p * p / 4.0) / (1.0 + p + p * p / 2.0);
      CHECK(filtered == doctest::Approx(closed_form).epsilon(1e-12));
    }
  }
}

TEST_CASE("filtered Bell fidelity stays above the entanglement witness floor") {
  const BellLabel labels[] = {BellLabel::PhiPlus, BellLabel::PhiMinus,
                              BellLabel::PsiPlus, BellLabel::PsiMinus};
  for (BellLabel label : labels) {
    const DensityMatrix target = bell_pair(label);
    for (int i = 0; i < 100; ++i) {
      const double p = 0.999 * i / 99.0;
      const DensityMatrix damped = two_qubit_damping(target, p, p);
      const FilterResult result = apply_filter(damped, p, p);
      const double fidelity =
          (target.entries() * result.state.entries()).trace().real();
      CHECK(fidelity > 0.5);
    }
  }
}

TEST_CASE("four_outcome_measurement: zero strength concentrates on (0,0)") {
  auto rng = test::make_rng(32);
  const DensityMatrix rho = test::random_state(4, rng);
  const auto outcomes = four_outcome_measurement(rho, 0.0);
  REQUIRE(outcomes.size() == 4);
  CHECK(outcomes[0].outcome_bits == std::array<int, 2>{0, 0});
  CHECK(outcomes[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < 4; ++k) CHECK(outcomes[k].probability < 1e-12);
}

TEST_CASE("circuit-derived outcomes form a probability distribution") {
  auto rng = test::make_rng(33);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = test::random_state(4, rng);
    const double p_r = unif(rng);
    const auto outcomes =
        four_outcome_measurement(rho, p_r, PovmMode::CircuitDerived);
    double total = 0.0;
    for (const auto& o : outcomes) {
      CHECK(o.probability >= -1e-12);
      total += o.probability;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("paper-mode outcomes overshoot unity as diag(1,2) x diag(1,2)") {
  auto rng = test::make_rng(34);
  const DensityMatrix rho = test::random_state(4, rng);
  const double p_r = 0.4;
  const auto outcomes = four_outcome_measurement(rho, p_r, PovmMode::PovmPaper);
  double total = 0.0;
  for (const auto& o : outcomes) total += o.probability;

  Operator weight = Operator::Zero(2, 2);
  weight(0, 0) = 1.0;
  weight(1, 1) = 2.0;
  const double expected =
      (tensor(weight, weight) * rho.entries()).trace().real();
  CHECK(total == doctest::Approx(expected).epsilon(1e-12));
  CHECK(total > 1.0 + 1e-6);
}

TEST_CASE("outcome (0,0) coincides with apply_filter") {
  auto rng = test::make_rng(35);
  const DensityMatrix rho = test::random_state(4, rng);
  const double p_r = 0.35;
  const FilterResult direct = apply_filter(rho, p_r, p_r);
  for (PovmMode mode : {PovmMode::CircuitDerived, PovmMode::PovmPaper}) {
    const auto outcomes = four_outcome_measurement(rho, p_r, mode);
    CHECK(max_abs_diff(outcomes[0].state.entries(), direct.state.entries()) <
          1e-12);
    CHECK(outcomes[0].probability ==
          doctest::Approx(direct.success_probability).epsilon(1e-12));
  }
}

TEST_CASE("match_strength follows the decay probability") {
  CHECK(match_strength(0.0, 1.0).p_r == 0.0);
  CHECK(match_strength(0.8, 0.8).p_r == doctest::Approx(0.6321205588).epsilon(1e-9));
  CHECK(match_strength(0.08, 0.8).p_r ==
        doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-14));
  CHECK_THROWS_AS(match_strength(1.0, 0.0), std::invalid_argument);
}
