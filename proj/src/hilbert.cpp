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

#include "pcsft/hilbert.hpp"

#include <cmath>
#include <string>

#include "pcsft/numeric.hpp"
#include "pcsft/rng.hpp"

namespace pcsft {

namespace {

constexpr double kHermitianIngestTol = 1e-6;
constexpr double kHermitianDriftTol = 1e-12;
constexpr double kNormTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;
constexpr double kTraceTol = 1e-10;

double max_abs_deviation(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

namespace detail {

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* context) {
  if (a != b) {
    throw DimensionMismatch(std::string(context) + ": dimensions " +
                            std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace detail

ComplexMatrix::ComplexMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw NotSquare("ComplexMatrix: expected a square matrix, got " +
                    std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
  if (!m_.allFinite()) {
    throw NotFinite("ComplexMatrix: entries must be finite");
  }
}

HermitianOperator::HermitianOperator(Matrix m)
    : m_([&] {
        ComplexMatrix checked(std::move(m));
        const double dev =
            max_abs_deviation(checked.matrix(), checked.matrix().adjoint());
        if (dev > kHermitianIngestTol) {
          throw TooFarFromHermitian(
              "HermitianOperator: max-entry deviation from the adjoint is " +
              std::to_string(dev));
        }
        // (m + m^dagger)/2: entrywise conjugate pairs, exactly Hermitian.
        return ComplexMatrix((checked.matrix() + checked.matrix().adjoint()) *
                             0.5);
      }()) {}

AntiHermitianOperator::AntiHermitianOperator(Matrix m)
    : m_([&] {
        ComplexMatrix checked(std::move(m));
        const double dev =
            max_abs_deviation(checked.matrix(), -checked.matrix().adjoint());
        if (dev > kHermitianDriftTol) {
          throw TooFarFromHermitian(
              "AntiHermitianOperator: max-entry deviation from the negated "
              "adjoint is " +
              std::to_string(dev));
        }
        return ComplexMatrix((checked.matrix() - checked.matrix().adjoint()) *
                             0.5);
      }()) {}

PureState::PureState(Vector v) : v_(std::move(v)) {
  if (v_.size() < 1) {
    throw NotNormalized("PureState: empty vector");
  }
  if (!v_.allFinite()) {
    throw NotFinite("PureState: amplitudes must be finite");
  }
  const double norm = v_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw NotNormalized("PureState: norm is " + std::to_string(norm));
  }
}

DensityOperator::DensityOperator(Matrix m) : m_(std::move(m)) {
  const Matrix& rho = m_.matrix();
  if (max_abs_deviation(rho, rho.adjoint()) > kHermitianDriftTol) {
    throw TooFarFromHermitian("DensityOperator: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho,
                                               Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
    throw NotPositiveSemidefinite(
        "DensityOperator: smallest eigenvalue is " +
        std::to_string(solver.eigenvalues().minCoeff()));
  }
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw NotNormalized("DensityOperator: trace is " + std::to_string(trace));
  }
}

HermitianOperator make_hermitian(const ComplexMatrix& m) {
  return HermitianOperator(m.matrix());
}

DensityOperator pure_state_density(const PureState& psi) {
  return DensityOperator(psi.vector() * psi.vector().adjoint());
}

Complex trace_product(const Matrix& x, const Matrix& y) {
  // Tr(X Y) = sum_ij X_ij Y_ji.
  return x.cwiseProduct(y.transpose()).sum();
}

double expectation(const HermitianOperator& a, const DensityOperator& rho) {
  detail::require_same_dim(a.dim(), rho.dim(), "expectation");
  return real_part_checked(trace_product(rho.matrix(), a.matrix()),
                           "expectation: Tr(rho A)");
}

double expectation(const HermitianOperator& a, const PureState& psi) {
  detail::require_same_dim(a.dim(), psi.dim(), "expectation");
  return real_part_checked(psi.vector().dot(a.matrix() * psi.vector()),
                           "expectation: <A>_psi");
}

double quantum_dispersion(const HermitianOperator& a, const PureState& psi) {
  detail::require_same_dim(a.dim(), psi.dim(), "quantum_dispersion");
  const Vector a_psi = a.matrix() * psi.vector();
  const double second = real_part_checked(a_psi.dot(a_psi), "<A^2>_psi");
  const double mean = real_part_checked(psi.vector().dot(a_psi), "<A>_psi");
  double dispersion = second - mean * mean;
  if (dispersion < 0.0) {
    if (dispersion < kEigenvalueFloor * (1.0 + second)) {
      throw std::logic_error("quantum_dispersion: negative beyond tolerance");
    }
    dispersion = 0.0;
  }
  return dispersion;
}

AntiHermitianOperator commutator(const HermitianOperator& a1,
                                 const HermitianOperator& a2) {
  detail::require_same_dim(a1.dim(), a2.dim(), "commutator");
  return AntiHermitianOperator(a1.matrix() * a2.matrix() -
                               a2.matrix() * a1.matrix());
}

HermitianOperator shift_observable(const HermitianOperator& a,
                                   const PureState& psi) {
  const double mean = expectation(a, psi);
  Matrix shifted = a.matrix();
  shifted.diagonal().array() -= mean;
  return HermitianOperator(std::move(shifted));
}

HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed,
                                   double scale) {
  if (dim < 1) {
    throw NotSquare("random_hermitian: dim must be >= 1");
  }
  const std::uint64_t key = derive_seed(seed, kSaltHermitianDraw);
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const std::uint64_t draw = static_cast<std::uint64_t>(i) * dim + j;
      g(i, j) = scale * standard_complex_normal(key, 0, draw);
    }
  }
  return HermitianOperator((g + g.adjoint()) * 0.5);
}

PureState random_pure_state(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) {
    throw NotNormalized("random_pure_state: dim must be >= 1");
  }
  const std::uint64_t key = derive_seed(seed, kSaltPureStateDraw);
  Vector v(dim);
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      v(i) = standard_complex_normal(key, attempt, static_cast<std::uint64_t>(i));
    }
    const double norm = v.norm();
    if (norm > 0.0) {
      return PureState(v / norm);
    }
  }
  throw DegenerateDraw("random_pure_state: zero vector after 100 attempts");
}

}  // namespace pcsft
