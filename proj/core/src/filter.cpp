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

#include "adfilter/filter.hpp"

#include <cmath>
#include <stdexcept>

#include "adfilter/channels.hpp"

namespace adf {

ReversalStrength::ReversalStrength(double value) : p_r(value) {
  if (p_r < 0.0 || p_r > 1.0) {
    throw std::invalid_argument("ReversalStrength: p_r outside [0, 1]");
  }
}

Operator reversal_operator(double p_r) {
  if (p_r < 0.0 || p_r > 1.0) {
    throw std::invalid_argument("reversal_operator: p_r outside [0, 1]");
  }
  Operator m = Operator::Zero(2, 2);
  m(0, 0) = std::sqrt(1.0 - p_r);
  m(1, 1) = 1.0;
  return m;
}

FilterResult apply_filter(const DensityMatrix& rho, double p_r1, double p_r2) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("apply_filter: need a two-qubit state");
  }
  const Operator m = tensor(reversal_operator(p_r1), reversal_operator(p_r2));
  const Operator filtered = m * rho.entries() * m.adjoint();
  const double p_success = filtered.trace().real();
  if (p_success <= 1e-15) {
    throw std::runtime_error("apply_filter: empty post-selection branch");
  }
  return FilterResult{DensityMatrix(filtered / p_success), p_success};
}

namespace {

Operator failure_operator(double p_r, PovmMode mode) {
  Operator m = Operator::Zero(2, 2);
  m(0, 0) = std::sqrt(p_r);
  m(1, 1) = (mode == PovmMode::PovmPaper) ? 1.0 : 0.0;
  return m;
}

}  // namespace

std::vector<FilterOutcome> four_outcome_measurement(const DensityMatrix& rho,
                                                    double p_r, PovmMode mode) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("four_outcome_measurement: need a two-qubit state");
  }
  const Operator success = reversal_operator(p_r);
  const Operator failure = failure_operator(p_r, mode);

  std::vector<FilterOutcome> outcomes;
  outcomes.reserve(4);
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      const Operator effect =
          tensor(b1 == 0 ? success : failure, b2 == 0 ? success : failure);
      const Operator branch = effect * rho.entries() * effect.adjoint();
      const double prob = branch.trace().real();
      DensityMatrix state = prob > 1e-15 ? DensityMatrix(branch / prob)
                                         : DensityMatrix(Operator::Zero(4, 4));
      outcomes.push_back(FilterOutcome{std::move(state), prob, {b1, b2}});
    }
  }
  return outcomes;
}

ReversalStrength match_strength(double t, double t1) {
  return ReversalStrength(damping_probability(t, t1));
}

}  // namespace adf
