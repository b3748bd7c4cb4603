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

#include "adfilter/metrics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace adf {

double state_fidelity(const DensityMatrix& rho, const DensityMatrix& pure_target) {
  if (rho.dim() != pure_target.dim()) {
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  }
  const double purity = (pure_target.entries() * pure_target.entries()).trace().real();
  if (std::abs(purity - 1.0) > 1e-9 || std::abs(pure_target.weight() - 1.0) > 1e-9) {
    throw std::invalid_argument("state_fidelity: target is not a pure state");
  }
  return (pure_target.entries() * rho.entries()).trace().real();
}

namespace {

/// (I (x) U) |phi_m> embedded in the channel's output space.
Eigen::VectorXcd embedded_target_ket(const ConditionalChannel& channel,
                                     const Operator& u_id) {
  const int d = channel.dim_in();
  const int dout = channel.dim_out();
  if (u_id.rows() != d || u_id.cols() != d) {
    throw std::invalid_argument("entanglement_fidelity: unitary dimension mismatch");
  }
  const auto& emb = channel.output_embedding();
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(d) * dout);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int alpha = 0; alpha < d; ++alpha) {
    for (int beta = 0; beta < d; ++beta) {
      phi(static_cast<Eigen::Index>(alpha) * dout + emb[beta]) +=
          scale * u_id(beta, alpha);
    }
  }
  return phi;
}

}  // namespace

double mean_success_probability(const ConditionalChannel& channel) {
  return channel.choi().trace().real();
}

double entanglement_fidelity(const ConditionalChannel& channel, const Operator& u_id) {
  const Operator c = channel.choi();
  const double weight = c.trace().real();
  if (weight <= 1e-15) {
    throw std::runtime_error("entanglement_fidelity: channel annihilates phi_m");
  }
  const Eigen::VectorXcd phi = embedded_target_ket(channel, u_id);
  const double overlap = (phi.adjoint() * c * phi).value().real();
  return overlap / weight;
}

double entanglement_fidelity_kraus(const ConditionalChannel& channel,
                                   const Operator& u_id) {
  const int d = channel.dim_in();
  const auto& emb = channel.output_embedding();
  const std::vector<Operator> kraus = kraus_from_superoperator(channel);

  double sum = 0.0;
  double weight = 0.0;
  for (const Operator& e : kraus) {
    Complex tr(0.0, 0.0);
    for (int alpha = 0; alpha < d; ++alpha) {
      for (int beta = 0; beta < d; ++beta) {
        tr += std::conj(u_id(beta, alpha)) * e(emb[beta], alpha);
      }
    }
    sum += std::norm(tr);
    weight += e.squaredNorm();
  }
  weight /= static_cast<double>(d);
  if (weight <= 1e-15) {
    throw std::runtime_error("entanglement_fidelity_kraus: zero-weight channel");
  }
  return sum / (static_cast<double>(d) * d) / weight;
}

double avg_gate_fidelity(double f_e, int d) {
  if (d < 2) throw std::invalid_argument("avg_gate_fidelity: d must be >= 2");
  return (d * f_e + 1.0) / (d + 1.0);
}

double analytic_unfiltered(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("analytic_unfiltered: p outside [0, 1]");
  }
  const double root = 1.0 + std::sqrt(1.0 - p);
  const double quartic = root * root * root * root;
  return (1.0 + quartic / 4.0) / 5.0;
}

double analytic_filtered(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("analytic_filtered: p outside [0, 1]");
  }
  const double denom = (2.0 + p) * (2.0 + p);
  return (1.0 + 16.0 / denom) / 5.0;
}

double analytic_success(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("analytic_success: p outside [0, 1]");
  }
  const double pbar = 1.0 - p;
  const double factor = pbar * (2.0 + p) / 2.0;
  return factor * factor;
}

HaarEstimate haar_average_fidelity(const ConditionalChannel& channel,
                                   const Operator& u_id, int samples,
                                   std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("haar_average_fidelity: samples must be >= 1");
  }
  const int d = channel.dim_in();
  const int dout = channel.dim_out();
  if (u_id.rows() != d || u_id.cols() != d) {
    throw std::invalid_argument("haar_average_fidelity: unitary dimension mismatch");
  }
  const auto& emb = channel.output_embedding();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  double sum = 0.0;
  double sum_sq = 0.0;
  Eigen::VectorXcd psi(d);
  Eigen::VectorXcd target = Eigen::VectorXcd::Zero(dout);
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < d; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
    psi.normalize();

    const Operator mapped = channel.apply(Operator(psi * psi.adjoint()));
    const double weight = mapped.trace().real();

    target.setZero();
    const Eigen::VectorXcd rotated = u_id * psi;
    for (int i = 0; i < d; ++i) target(emb[i]) = rotated(i);

    double f = 0.0;
    if (weight > 1e-15) {
      f = (target.adjoint() * mapped * target).value().real() / weight;
    }
    sum += f;
    sum_sq += f * f;
  }

  const double mean = sum / samples;
  double stderr_mean = 0.0;
  if (samples > 1) {
    const double var = (sum_sq - samples * mean * mean) / (samples - 1);
    stderr_mean = std::sqrt(std::max(0.0, var) / samples);
  }
  return HaarEstimate{mean, stderr_mean};
}

std::vector<Operator> kraus_from_superoperator(const ConditionalChannel& channel) {
  const int d = channel.dim_in();
  const int dout = channel.dim_out();
  const Operator choi = channel.choi();

  Eigen::SelfAdjointEigenSolver<Operator> solver(choi);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("kraus_from_superoperator: eigensolver failed");
  }
  const Eigen::VectorXd evals = solver.eigenvalues();
  if (evals.minCoeff() < kPsdEigenvalueFloor) {
    throw std::invalid_argument("kraus_from_superoperator: Choi matrix not PSD");
  }

  std::vector<Operator> kraus;
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    const double lambda = evals(k);
    if (lambda <= 1e-13) continue;
    const Eigen::VectorXcd v = solver.eigenvectors().col(k);
    const double scale = std::sqrt(lambda * d);
    Operator e(dout, d);
    for (int i = 0; i < d; ++i) {
      for (int a = 0; a < dout; ++a) {
        e(a, i) = scale * v(static_cast<Eigen::Index>(i) * dout + a);
      }
    }
    kraus.push_back(std::move(e));
  }
  return kraus;
}

double trace_distance(const Operator& a, const Operator& b) {
  const Operator diff = a - b;
  if (!is_hermitian(diff, 1e-9)) {
    throw std::invalid_argument("trace_distance: difference is not Hermitian");
  }
  const Eigen::VectorXd evals = hermitian_eigenvalues((diff + diff.adjoint()) / 2.0);
  return 0.5 * evals.cwiseAbs().sum();
}

}  // namespace adf
