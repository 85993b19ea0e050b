// Copyright 2026 The pcsft authors
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

#pragma once

#include <cstdint>

#include "pcsft/hilbert.hpp"

namespace pcsft {

// The prequantum random field: a zero-mean circularly-symmetric complex
// Gaussian vector phi with E[phi phi^dagger] = D and E[phi phi^T] = 0.
// Quantum states enter through the covariance lift D = rho + I, where the
// identity is the covariance of the white-noise background.

/// Positive-semidefinite Hermitian covariance. The general constructor
/// validates eigenvalues >= -1e-10; covariances built through the lift have
/// spectrum >= 1 - 1e-10 by construction and skip the solver.
class CovarianceOperator {
 public:
  explicit CovarianceOperator(Matrix d);

  Eigen::Index dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_.matrix(); }
  const ComplexMatrix& as_complex_matrix() const { return m_; }

 private:
  struct LiftedTag {};
  CovarianceOperator(Matrix d, LiftedTag);

  friend CovarianceOperator covariance_for_state(const DensityOperator& rho);
  friend CovarianceOperator white_noise_covariance(Eigen::Index dim);

  ComplexMatrix m_;
};

/// D_rho = rho + I.
CovarianceOperator covariance_for_state(const DensityOperator& rho);

/// The identity covariance I_n.
CovarianceOperator white_noise_covariance(Eigen::Index dim);

/// Hermitian square root L = U sqrt(Lambda) U^dagger with D = L L^dagger.
/// Eigendecomposition rather than Cholesky so rank-deficient test covariances
/// factor uniformly; eigenvalues in [-1e-10, 0) are clamped to zero.
class CovarianceFactor {
 public:
  Eigen::Index dim() const { return factor_.rows(); }
  const Matrix& factor() const { return factor_; }
  const Eigen::VectorXd& source_eigenvalues() const { return eigenvalues_; }

 private:
  CovarianceFactor(Matrix factor, Eigen::VectorXd eigenvalues);
  friend CovarianceFactor factorize(const CovarianceOperator& d);

  Matrix factor_;
  Eigen::VectorXd eigenvalues_;
};

/// Throws NotPositiveSemidefinite when an eigenvalue sits below -1e-10.
CovarianceFactor factorize(const CovarianceOperator& d);

/// One realization of the prequantum field.
struct FieldSample {
  Vector phi;
};

/// (base_seed, substream_index) fully determines a sample; distinct indices
/// give statistically independent draws, so substreams can be consumed
/// concurrently in any order.
struct SampleStream {
  std::uint64_t base_seed = 0;
  std::uint64_t substream_index = 0;
};

/// phi = L z with z a standard circularly-symmetric complex Gaussian vector.
FieldSample sample(const CovarianceFactor& factor, const SampleStream& stream);

/// Allocation-free variant for hot loops; phi_out is resized once by the
/// caller. Produces bit-identical values to sample().
void sample_into(const CovarianceFactor& factor, const SampleStream& stream,
                 Vector& z_scratch, Vector& phi_out);

/// f_A(phi) = phi^dagger A phi. Real for Hermitian A, purely imaginary for
/// anti-Hermitian A, up to roundoff.
Complex quadratic_functional(const ComplexMatrix& a, const FieldSample& phi);

}  // namespace pcsft
