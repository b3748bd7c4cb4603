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

#ifndef ADFILTER_CONDITIONAL_CHANNEL_HPP
#define ADFILTER_CONDITIONAL_CHANNEL_HPP

#include <span>
#include <vector>

#include "adfilter/qops.hpp"

namespace adf {

/// Completely positive, generally non-trace-preserving map, stored as a
/// superoperator over column-stacked matrices: vec(out) = S vec(in).
///
/// The input and output spaces may differ (a post-selected circuit block can
/// map a qubit into a larger level structure). `output_embedding` records
/// where the input computational basis sits inside the output space; it is
/// the identity for square channels.
class ConditionalChannel {
 public:
  ConditionalChannel(int dim_in, int dim_out, Eigen::MatrixXcd superop,
                     std::vector<int> output_embedding = {});

  static ConditionalChannel identity(int dim);
  static ConditionalChannel from_unitary(const Operator& u);
  static ConditionalChannel from_kraus(std::span<const Operator> ks);
  /// The single-Kraus map rho -> K rho K^dagger.
  static ConditionalChannel from_operator(const Operator& k);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const Eigen::MatrixXcd& superop() const { return superop_; }
  const std::vector<int>& output_embedding() const { return output_embedding_; }

  Operator apply(const Operator& rho) const;
  /// Applies the map; the result carries the branch weight in its trace.
  DensityMatrix apply(const DensityMatrix& rho) const;

  /// this after other (matrix product of superoperators).
  ConditionalChannel compose_after(const ConditionalChannel& other) const;

  /// Choi state (1/d_in) sum_{ij} |i><j| (x) Lambda(|i><j|), input factor
  /// slowest. Trace 1 for trace-preserving maps, the mean post-selection
  /// probability otherwise.
  Operator choi() const;

  /// Restriction of the output to the embedded computational subspace,
  /// discarding leakage rows and columns. Identity for square channels.
  ConditionalChannel restrict_to_embedding() const;

  bool is_trace_preserving(double tol = kTraceTol) const;

 private:
  int dim_in_;
  int dim_out_;
  Eigen::MatrixXcd superop_;          // (dim_out^2) x (dim_in^2)
  std::vector<int> output_embedding_; // size dim_in, indices into [0, dim_out)
};

/// Lambda_1 (x) Lambda_2 acting on the joint input space, factor 1 slowest.
ConditionalChannel tensor(const ConditionalChannel& a, const ConditionalChannel& b);

}  // namespace adf

#endif  // ADFILTER_CONDITIONAL_CHANNEL_HPP
