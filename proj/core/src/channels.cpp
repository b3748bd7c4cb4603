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

#include "adfilter/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace adf {

double damping_probability(double t, double t1) {
  if (t1 <= 0.0) throw std::invalid_argument("damping_probability: T1 must be > 0");
  if (t < 0.0) throw std::invalid_argument("damping_probability: t must be >= 0");
  return 1.0 - std::exp(-t / t1);
}

DampingParams DampingParams::from_time(double t, double t1) {
  return DampingParams{t, t1, damping_probability(t, t1)};
}

double KrausChannel::completeness_defect() const {
  if (kraus.empty()) return 1.0;
  const Eigen::Index d = kraus.front().cols();
  Operator gram = Operator::Zero(d, d);
  for (const Operator& k : kraus) gram += k.adjoint() * k;
  return max_abs(gram - Operator::Identity(d, d));
}

KrausChannel damping_kraus(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("damping_kraus: p outside [0, 1]");
  }
  Operator k0 = Operator::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  Operator k1 = Operator::Zero(2, 2);
  k1(0, 1) = std::sqrt(p);
  return KrausChannel{{std::move(k0), std::move(k1)}, true};
}

DensityMatrix damping_direct(const DensityMatrix& rho, double p) {
  if (rho.dim() != 2) throw std::invalid_argument("damping_direct: need a qubit");
  const double sq = std::sqrt(1.0 - p);
  const Operator& r = rho.entries();
  Operator out(2, 2);
  out(0, 0) = r(0, 0) + p * r(1, 1);
  out(0, 1) = sq * r(0, 1);
  out(1, 0) = sq * r(1, 0);
  out(1, 1) = (1.0 - p) * r(1, 1);
  return DensityMatrix(std::move(out));
}

DensityMatrix two_qubit_damping(const DensityMatrix& rho, double p1, double p2) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("two_qubit_damping: need a two-qubit state");
  }
  const Operator id2 = Operator::Identity(2, 2);
  const KrausChannel c1 = damping_kraus(p1);
  const KrausChannel c2 = damping_kraus(p2);

  std::vector<Operator> first, second;
  for (const Operator& k : c1.kraus) first.push_back(tensor(k, id2));
  for (const Operator& k : c2.kraus) second.push_back(tensor(id2, k));

  return apply_kraus(apply_kraus(rho, first, true), second, true);
}

}  // namespace adf
