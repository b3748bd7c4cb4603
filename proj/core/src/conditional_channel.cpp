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

#include "adfilter/conditional_channel.hpp"

#include <numeric>
#include <stdexcept>

namespace adf {

namespace {

Eigen::VectorXcd vectorize(const Operator& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Operator devectorize(const Eigen::VectorXcd& v, int rows, int cols) {
  return Eigen::Map<const Operator>(v.data(), rows, cols);
}

}  // namespace

ConditionalChannel::ConditionalChannel(int dim_in, int dim_out,
                                       Eigen::MatrixXcd superop,
                                       std::vector<int> output_embedding)
    : dim_in_(dim_in),
      dim_out_(dim_out),
      superop_(std::move(superop)),
      output_embedding_(std::move(output_embedding)) {
  if (dim_in_ < 1 || dim_out_ < 1) {
    throw std::invalid_argument("ConditionalChannel: dimensions must be >= 1");
  }
  if (superop_.rows() != static_cast<Eigen::Index>(dim_out_) * dim_out_ ||
      superop_.cols() != static_cast<Eigen::Index>(dim_in_) * dim_in_) {
    throw std::invalid_argument("ConditionalChannel: superoperator shape mismatch");
  }
  if (output_embedding_.empty()) {
    if (dim_in_ > dim_out_) {
      throw std::invalid_argument(
          "ConditionalChannel: embedding required when dim_in > dim_out");
    }
    output_embedding_.resize(dim_in_);
    std::iota(output_embedding_.begin(), output_embedding_.end(), 0);
  }
  if (static_cast<int>(output_embedding_.size()) != dim_in_) {
    throw std::invalid_argument("ConditionalChannel: embedding size mismatch");
  }
  for (int idx : output_embedding_) {
    if (idx < 0 || idx >= dim_out_) {
      throw std::invalid_argument("ConditionalChannel: embedding index out of range");
    }
  }
}

ConditionalChannel ConditionalChannel::identity(int dim) {
  return ConditionalChannel(
      dim, dim, Eigen::MatrixXcd::Identity(dim * dim, dim * dim));
}

ConditionalChannel ConditionalChannel::from_operator(const Operator& k) {
  const int din = static_cast<int>(k.cols());
  const int dout = static_cast<int>(k.rows());
  if (din > dout) {
    throw std::invalid_argument("from_operator: wide Kraus operators unsupported");
  }
  // vec(K rho K^dagger) = (conj(K) (x) K) vec(rho) under column stacking.
  Eigen::MatrixXcd s = tensor(k.conjugate(), k);
  return ConditionalChannel(din, dout, std::move(s));
}

ConditionalChannel ConditionalChannel::from_unitary(const Operator& u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("from_unitary: operator must be square");
  }
  return from_operator(u);
}

ConditionalChannel ConditionalChannel::from_kraus(std::span<const Operator> ks) {
  if (ks.empty()) throw std::invalid_argument("from_kraus: empty Kraus list");
  const int din = static_cast<int>(ks[0].cols());
  const int dout = static_cast<int>(ks[0].rows());
  Eigen::MatrixXcd s =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dout) * dout,
                             static_cast<Eigen::Index>(din) * din);
  for (const Operator& k : ks) {
    if (k.rows() != dout || k.cols() != din) {
      throw std::invalid_argument("from_kraus: inconsistent Kraus shapes");
    }
    s += tensor(k.conjugate(), k);
  }
  return ConditionalChannel(din, dout, std::move(s));
}

Operator ConditionalChannel::apply(const Operator& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
    throw std::invalid_argument("ConditionalChannel::apply: dimension mismatch");
  }
  return devectorize(superop_ * vectorize(rho), dim_out_, dim_out_);
}

DensityMatrix ConditionalChannel::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply(rho.entries()));
}

ConditionalChannel ConditionalChannel::compose_after(
    const ConditionalChannel& other) const {
  if (other.dim_out_ != dim_in_) {
    throw std::invalid_argument("compose_after: dimension mismatch");
  }
  // The outer embedding carries over only when the inner map is square.
  std::vector<int> emb;
  if (static_cast<int>(output_embedding_.size()) == other.dim_in_) {
    emb = output_embedding_;
  }
  return ConditionalChannel(other.dim_in_, dim_out_, superop_ * other.superop_,
                            std::move(emb));
}

Operator ConditionalChannel::choi() const {
  const int d = dim_in_;
  Operator c = Operator::Zero(static_cast<Eigen::Index>(d) * dim_out_,
                              static_cast<Eigen::Index>(d) * dim_out_);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Operator basis = Operator::Zero(d, d);
      basis(i, j) = Complex(1.0, 0.0);
      const Operator mapped = apply(basis);
      c.block(static_cast<Eigen::Index>(i) * dim_out_,
              static_cast<Eigen::Index>(j) * dim_out_, dim_out_, dim_out_) =
          mapped / static_cast<double>(d);
    }
  }
  return c;
}

ConditionalChannel ConditionalChannel::restrict_to_embedding() const {
  const int d = dim_in_;
  Eigen::MatrixXcd s(static_cast<Eigen::Index>(d) * d,
                     static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Operator basis = Operator::Zero(d, d);
      basis(i, j) = Complex(1.0, 0.0);
      const Operator mapped = apply(basis);
      Operator block(d, d);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
          block(a, b) = mapped(output_embedding_[a], output_embedding_[b]);
        }
      }
      // Column (i, j) of the restricted superoperator, column stacking.
      for (int b = 0; b < d; ++b) {
        for (int a = 0; a < d; ++a) {
          s(b * d + a, j * d + i) = block(a, b);
        }
      }
    }
  }
  return ConditionalChannel(d, d, std::move(s));
}

bool ConditionalChannel::is_trace_preserving(double tol) const {
  // Trace of Lambda(|i><j|) must be delta_ij.
  for (int i = 0; i < dim_in_; ++i) {
    for (int j = 0; j < dim_in_; ++j) {
      Operator basis = Operator::Zero(dim_in_, dim_in_);
      basis(i, j) = Complex(1.0, 0.0);
      const Complex tr = apply(basis).trace();
      const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (std::abs(tr - expected) > tol) return false;
    }
  }
  return true;
}

ConditionalChannel tensor(const ConditionalChannel& a, const ConditionalChannel& b) {
  const int din = a.dim_in() * b.dim_in();
  const int dout = a.dim_out() * b.dim_out();
  Eigen::MatrixXcd s =
      Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dout) * dout,
                             static_cast<Eigen::Index>(din) * din);

  const int ao = a.dim_out(), bo = b.dim_out();
  const int ai = a.dim_in(), bi = b.dim_in();
  // Column-stacked composite index of (x1, x2) pairs: slot 1 slowest in the
  // Hilbert space, so vec index of (r, c) is c * dim + r with dim = d1 * d2
  // and r = r1 * d2 + r2.
  for (int r1 = 0; r1 < ao; ++r1)
    for (int c1 = 0; c1 < ao; ++c1)
      for (int p1 = 0; p1 < ai; ++p1)
        for (int q1 = 0; q1 < ai; ++q1) {
          const Complex s1 = a.superop()(c1 * ao + r1, q1 * ai + p1);
          if (s1 == Complex(0.0, 0.0)) continue;
          for (int r2 = 0; r2 < bo; ++r2)
            for (int c2 = 0; c2 < bo; ++c2)
              for (int p2 = 0; p2 < bi; ++p2)
                for (int q2 = 0; q2 < bi; ++q2) {
                  const Complex s2 = b.superop()(c2 * bo + r2, q2 * bi + p2);
                  if (s2 == Complex(0.0, 0.0)) continue;
                  const int row = (c1 * bo + c2) * dout + (r1 * bo + r2);
                  const int col = (q1 * bi + q2) * din + (p1 * bi + p2);
                  s(row, col) = s1 * s2;
                }
        }

  std::vector<int> emb;
  emb.reserve(din);
  for (int i1 : a.output_embedding()) {
    for (int i2 : b.output_embedding()) emb.push_back(i1 * bo + i2);
  }
  return ConditionalChannel(din, dout, std::move(s), std::move(emb));
}

}  // namespace adf
