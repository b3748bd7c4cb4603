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

#ifndef ADFILTER_CHANNELS_HPP
#define ADFILTER_CHANNELS_HPP

#include <vector>

#include "adfilter/qops.hpp"

namespace adf {

/// Exponential-relaxation parameters. The decay probability follows
/// p = 1 - exp(-t / T1).
///
/// A sometimes-quoted figure p(T1/10) ~ 0.01 is inconsistent with this law,
/// which gives 0.0952; the exponential law is authoritative here.
struct DampingParams {
  double t = 0.0;        // seconds
  double t1 = 1.0;       // seconds, > 0
  double p = 0.0;        // derived decay probability

  static DampingParams from_time(double t, double t1);
};

double damping_probability(double t, double t1);

/// Kraus list with an explicit trace-preservation flag.
struct KrausChannel {
  std::vector<Operator> kraus;
  bool trace_preserving = true;

  DensityMatrix apply(const DensityMatrix& rho) const {
    return apply_kraus(rho, kraus, trace_preserving);
  }
  /// Max-norm deviation of sum K^dagger K from the identity.
  double completeness_defect() const;
};

/// Single-qubit amplitude damping: K0 = diag(1, sqrt(1-p)), K1 = sqrt(p)|0><1|.
KrausChannel damping_kraus(double p);

/// Element-wise closed form of the single-qubit damping map. Kept alongside
/// the Kraus route so either can check the other.
DensityMatrix damping_direct(const DensityMatrix& rho, double p);

/// Uncorrelated damping on each qubit of a two-qubit state; composition
/// order is irrelevant since the channels act on disjoint slots.
DensityMatrix two_qubit_damping(const DensityMatrix& rho, double p1, double p2);

}  // namespace adf

#endif  // ADFILTER_CHANNELS_HPP
