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

#include "adfilter/qops.hpp"

#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace adf {

double max_abs(const Operator& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Operator& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint().eval()) <= tol;
}

bool is_unitary(const Operator& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Operator gram = u.adjoint() * u;
  return max_abs(gram - Operator::Identity(u.rows(), u.cols())) <= tol;
}

bool is_projector(const Operator& p, double tol) {
  return is_hermitian(p, tol) && max_abs(p * p - p) <= tol;
}

Eigen::VectorXd hermitian_eigenvalues(const Operator& m) {
  Eigen::SelfAdjointEigenSolver<Operator> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian eigensolver failed to converge");
  }
  return solver.eigenvalues();
}

double min_eigenvalue(const Operator& hermitian) {
  return hermitian_eigenvalues(hermitian).minCoeff();
}

int SpaceLayout::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

void SpaceLayout::validate() const {
  if (dims.empty()) throw std::invalid_argument("SpaceLayout: no subsystems");
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("SpaceLayout: dimensions must be >= 1");
  }
}

int SpaceLayout::index_of(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != num_slots()) {
    throw std::invalid_argument("SpaceLayout::index_of: wrong digit count");
  }
  int idx = 0;
  for (int s = 0; s < num_slots(); ++s) {
    if (digits[s] < 0 || digits[s] >= dims[s]) {
      throw std::invalid_argument("SpaceLayout::index_of: digit out of range");
    }
    idx = idx * dims[s] + digits[s];
  }
  return idx;
}

std::vector<int> SpaceLayout::digits_of(int index) const {
  std::vector<int> digits(dims.size());
  for (int s = num_slots() - 1; s >= 0; --s) {
    digits[s] = index % dims[s];
    index /= dims[s];
  }
  return digits;
}

DensityMatrix::DensityMatrix(Operator entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("DensityMatrix: entries must be square");
  }
}

DensityMatrix DensityMatrix::pure(const Ket& psi) {
  const double norm = psi.norm();
  if (norm <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero ket");
  const Ket n = psi / norm;
  return DensityMatrix(n * n.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be >= 1");
  return DensityMatrix(Operator::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::weight() const { return entries_.trace().real(); }

DensityMatrix DensityMatrix::normalized() const {
  const double w = weight();
  if (w <= 1e-15) {
    throw std::runtime_error("DensityMatrix::normalized: weight is zero");
  }
  return DensityMatrix(entries_ / w);
}

void DensityMatrix::validate() const {
  if (!is_hermitian(entries_)) {
    throw std::runtime_error("DensityMatrix: not Hermitian");
  }
  if (min_eigenvalue(entries_) < kPsdEigenvalueFloor) {
    throw std::runtime_error("DensityMatrix: negative eigenvalue");
  }
  const double w = weight();
  if (w < -kTraceTol || w > 1.0 + kTraceTol) {
    throw std::runtime_error("DensityMatrix: weight outside [0, 1]");
  }
  if (std::abs(entries_.trace().imag()) > kTraceTol) {
    throw std::runtime_error("DensityMatrix: complex trace");
  }
}

Operator tensor(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor(a.entries(), b.entries()));
}

Operator embed(const Operator& op, const SpaceLayout& layout, int slot) {
  if (slot < 0 || slot >= layout.num_slots()) {
    throw std::invalid_argument("embed: slot out of range");
  }
  if (op.rows() != op.cols() || op.rows() != layout.dims[slot]) {
    throw std::invalid_argument("embed: operator does not match slot dimension");
  }
  // Direct index construction; slot 0 varies slowest.
  int left = 1, right = 1;
  for (int s = 0; s < slot; ++s) left *= layout.dims[s];
  for (int s = slot + 1; s < layout.num_slots(); ++s) right *= layout.dims[s];
  const int d = layout.dims[slot];
  const int total = layout.total_dim();

  Operator out = Operator::Zero(total, total);
  for (int l = 0; l < left; ++l) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        if (op(i, j) == Complex(0.0, 0.0)) continue;
        for (int r = 0; r < right; ++r) {
          const int row = (l * d + i) * right + r;
          const int col = (l * d + j) * right + r;
          out(row, col) = op(i, j);
        }
      }
    }
  }
  return out;
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const Operator& u) {
  if (u.rows() != u.cols() || u.rows() != rho.dim()) {
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  }
  return DensityMatrix(u * rho.entries() * u.adjoint());
}

DensityMatrix apply_kraus(const DensityMatrix& rho, std::span<const Operator> ks,
                          bool require_trace_preserving) {
  if (ks.empty()) throw std::invalid_argument("apply_kraus: empty Kraus list");
  for (const Operator& k : ks) {
    if (k.cols() != rho.dim()) {
      throw std::invalid_argument("apply_kraus: dimension mismatch");
    }
  }
  if (require_trace_preserving) {
    Operator gram = Operator::Zero(rho.dim(), rho.dim());
    for (const Operator& k : ks) gram += k.adjoint() * k;
    if (max_abs(gram - Operator::Identity(rho.dim(), rho.dim())) > kTraceTol) {
      throw std::invalid_argument("apply_kraus: Kraus completeness violated");
    }
  }
  Operator out = Operator::Zero(ks[0].rows(), ks[0].rows());
  for (const Operator& k : ks) out += k * rho.entries() * k.adjoint();
  return DensityMatrix(std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SpaceLayout& layout,
                            std::span<const int> keep) {
  return DensityMatrix(partial_trace(rho.entries(), layout, keep));
}

Operator partial_trace(const Operator& m, const SpaceLayout& layout,
                       std::span<const int> keep) {
  if (m.rows() != m.cols() || layout.total_dim() != m.rows()) {
    throw std::invalid_argument("partial_trace: layout does not match matrix");
  }
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<bool> kept(layout.dims.size(), false);
  for (int s : keep) {
    if (s < 0 || s >= layout.num_slots()) {
      throw std::invalid_argument("partial_trace: keep slot out of range");
    }
    if (kept[s]) throw std::invalid_argument("partial_trace: duplicate keep slot");
    kept[s] = true;
  }

  std::vector<int> kept_slots;
  for (int s = 0; s < layout.num_slots(); ++s) {
    if (kept[s]) kept_slots.push_back(s);
  }
  int out_dim = 1;
  for (int s : kept_slots) out_dim *= layout.dims[s];

  const auto kept_index = [&](const std::vector<int>& digits) {
    int idx = 0;
    for (int s : kept_slots) idx = idx * layout.dims[s] + digits[s];
    return idx;
  };

  const int total = layout.total_dim();
  Operator out = Operator::Zero(out_dim, out_dim);
  for (int row = 0; row < total; ++row) {
    const std::vector<int> rd = layout.digits_of(row);
    for (int col = 0; col < total; ++col) {
      const std::vector<int> cd = layout.digits_of(col);
      bool diagonal_in_traced = true;
      for (int s = 0; s < layout.num_slots(); ++s) {
        if (!kept[s] && rd[s] != cd[s]) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (!diagonal_in_traced) continue;
      out(kept_index(rd), kept_index(cd)) += m(row, col);
    }
  }
  return out;
}

DensityMatrix project_postselect(const DensityMatrix& rho, const Operator& proj) {
  if (proj.rows() != rho.dim() || proj.cols() != rho.dim()) {
    throw std::invalid_argument("project_postselect: dimension mismatch");
  }
  if (!is_projector(proj)) {
    throw std::invalid_argument("project_postselect: not an orthogonal projector");
  }
  return DensityMatrix(proj * rho.entries() * proj);
}

}  // namespace adf
