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

#ifndef ADFILTER_QOPS_HPP
#define ADFILTER_QOPS_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace adf {

using Complex = std::complex<double>;

/// Dense complex square matrix acting on a (composite) Hilbert space.
/// Gates, Kraus elements, projectors and observables are all Operators.
using Operator = Eigen::MatrixXcd;

using Ket = Eigen::VectorXcd;

/// Numerical tolerances shared by the validity checks below. The PSD floor
/// allows for error accumulated through roughly ten sequential maps.
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdEigenvalueFloor = -1e-10;
inline constexpr double kTraceTol = 1e-10;

double max_abs(const Operator& m);
bool is_hermitian(const Operator& m, double tol = kHermitianTol);
bool is_unitary(const Operator& u, double tol = kUnitaryTol);
bool is_projector(const Operator& p, double tol = 1e-10);

/// Eigenvalues of a Hermitian matrix, ascending.
Eigen::VectorXd hermitian_eigenvalues(const Operator& m);
double min_eigenvalue(const Operator& hermitian);

/// Ordered list of subsystem dimensions. Slot 0 is the leftmost tensor
/// factor and varies slowest in the composite index.
struct SpaceLayout {
  std::vector<int> dims;

  SpaceLayout(std::initializer_list<int> d) : dims(d) { validate(); }
  explicit SpaceLayout(std::vector<int> d) : dims(std::move(d)) { validate(); }

  int total_dim() const;
  int num_slots() const { return static_cast<int>(dims.size()); }

  /// Composite index of the given per-slot digits.
  int index_of(std::span<const int> digits) const;
  /// Per-slot digits of a composite index.
  std::vector<int> digits_of(int index) const;

 private:
  void validate() const;
};

/// Hermitian positive-semidefinite matrix with trace bookkeeping. The weight
/// equals the trace: 1 for normalized states, the post-selection probability
/// for unnormalized post-selected branches.
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator entries);

  /// |psi><psi| for a normalized ket (the ket is normalized if needed).
  static DensityMatrix pure(const Ket& psi);
  /// Maximally mixed state I/dim.
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Operator& entries() const { return entries_; }
  double weight() const;

  /// Entries divided by the weight; throws if the weight is ~0.
  DensityMatrix normalized() const;

  /// Checks Hermiticity, the PSD eigenvalue floor, and that the weight lies
  /// in [0, 1] (up to tolerance). Throws std::runtime_error on violation.
  void validate() const;

 private:
  Operator entries_;
};

/// Kronecker product with the left factor varying slowest.
Operator tensor(const Operator& a, const Operator& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// I x ... x op x ... x I with op placed at `slot` of `layout`.
Operator embed(const Operator& op, const SpaceLayout& layout, int slot);

/// rho -> U rho U^dagger. Preserves trace and Hermiticity.
DensityMatrix apply_unitary(const DensityMatrix& rho, const Operator& u);

/// rho -> sum_k K_k rho K_k^dagger. If `require_trace_preserving`, checks
/// sum_k K_k^dagger K_k = I up to kTraceTol first.
DensityMatrix apply_kraus(const DensityMatrix& rho, std::span<const Operator> ks,
                          bool require_trace_preserving = false);

/// Trace out every slot not listed in `keep`; kept slots stay in layout order.
DensityMatrix partial_trace(const DensityMatrix& rho, const SpaceLayout& layout,
                            std::span<const int> keep);
/// Same contraction on a plain matrix (not necessarily Hermitian).
Operator partial_trace(const Operator& m, const SpaceLayout& layout,
                       std::span<const int> keep);

/// rho -> P rho P for an orthogonal projector P. The result is NOT
/// renormalized; its weight is the post-selection probability Tr(P rho P).
DensityMatrix project_postselect(const DensityMatrix& rho, const Operator& proj);

}  // namespace adf

#endif  // ADFILTER_QOPS_HPP
