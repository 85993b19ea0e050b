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

#include "pcsft/gaussian_field.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "pcsft/numeric.hpp"
#include "pcsft/rng.hpp"

namespace pcsft {

namespace {

constexpr double kHermitianDriftTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;
constexpr double kFactorResidualTol = 1e-10;

}  // namespace

CovarianceOperator::CovarianceOperator(Matrix d) : m_(std::move(d)) {
  const Matrix& mat = m_.matrix();
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kHermitianDriftTol) {
    throw TooFarFromHermitian("CovarianceOperator: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(mat, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw NotPositiveSemidefinite(
        "CovarianceOperator: smallest eigenvalue is " +
        std::to_string(solver.eigenvalues().minCoeff()));
  }
}

// Lift path: spectrum >= 1 - 1e-10 follows from the density-operator
// validation, no solver pass needed.
CovarianceOperator::CovarianceOperator(Matrix d, LiftedTag) : m_(std::move(d)) {}

CovarianceOperator covariance_for_state(const DensityOperator& rho) {
  Matrix d = rho.matrix();
  d += Matrix::Identity(rho.dim(), rho.dim());
  return CovarianceOperator(std::move(d), CovarianceOperator::LiftedTag{});
}

CovarianceOperator white_noise_covariance(Eigen::Index dim) {
  if (dim < 1) {
    throw NotSquare("white_noise_covariance: dim must be >= 1");
  }
  return CovarianceOperator(Matrix::Identity(dim, dim),
                            CovarianceOperator::LiftedTag{});
}

CovarianceFactor::CovarianceFactor(Matrix factor, Eigen::VectorXd eigenvalues)
    : factor_(std::move(factor)), eigenvalues_(std::move(eigenvalues)) {}

CovarianceFactor factorize(const CovarianceOperator& d) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(d.matrix());
  if (solver.info() != Eigen::Success) {
    throw NotPositiveSemidefinite("factorize: eigendecomposition failed");
  }
  Eigen::VectorXd eigenvalues = solver.eigenvalues();
  if (eigenvalues.minCoeff() < kEigenvalueFloor) {
    throw NotPositiveSemidefinite("factorize: smallest eigenvalue is " +
                                  std::to_string(eigenvalues.minCoeff()));
  }
  const Eigen::VectorXd clamped = eigenvalues.cwiseMax(0.0);
  Matrix factor = solver.eigenvectors() *
                  clamped.cwiseSqrt().asDiagonal() *
                  solver.eigenvectors().adjoint();

  const double residual =
      (factor * factor.adjoint() - d.matrix()).cwiseAbs().maxCoeff();
  const double scale = 1.0 + d.matrix().cwiseAbs().maxCoeff();
  if (residual > kFactorResidualTol * scale) {
    throw std::logic_error("factorize: L L^dagger residual " +
                           std::to_string(residual) + " out of tolerance");
  }
  return CovarianceFactor(std::move(factor), std::move(eigenvalues));
}

void sample_into(const CovarianceFactor& factor, const SampleStream& stream,
                 Vector& z_scratch, Vector& phi_out) {
  const Eigen::Index n = factor.dim();
  const std::uint64_t key = derive_seed(stream.base_seed, kSaltFieldSample);
  for (Eigen::Index i = 0; i < n; ++i) {
    z_scratch(i) = standard_complex_normal(key, stream.substream_index,
                                           static_cast<std::uint64_t>(i));
  }
  phi_out.noalias() = factor.factor() * z_scratch;
}

FieldSample sample(const CovarianceFactor& factor, const SampleStream& stream) {
  Vector z(factor.dim());
  FieldSample result{Vector(factor.dim())};
  sample_into(factor, stream, z, result.phi);
  return result;
}

Complex quadratic_functional(const ComplexMatrix& a, const FieldSample& phi) {
  detail::require_same_dim(a.dim(), phi.phi.size(), "quadratic_functional");
  return phi.phi.dot(a.matrix() * phi.phi);
}

}  // namespace pcsft
