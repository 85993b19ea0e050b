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

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "pcsft/errors.hpp"

namespace pcsft {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Finite-dimensional complex Hilbert space algebra: validated value types for
// states and observables, plus the trace/commutator operations built on them.
// All types are immutable after construction and safe to share across threads.

/// Square complex matrix with finite entries; the unvalidated operator type.
class ComplexMatrix {
 public:
  /// Throws NotSquare / NotFinite.
  explicit ComplexMatrix(Matrix m);

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// Observable. Construction symmetrizes to (m + m^dagger)/2, which is exactly
/// Hermitian entrywise in IEEE arithmetic; inputs further than 1e-6 from
/// Hermitian (max-entry norm) are rejected as caller error rather than drift.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  Eigen::Index dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_.matrix(); }
  const ComplexMatrix& as_complex_matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Commutator-valued operators: K = -K^dagger within 1e-12 on input, stored
/// exactly anti-Hermitian after anti-symmetrization.
class AntiHermitianOperator {
 public:
  explicit AntiHermitianOperator(Matrix m);

  Eigen::Index dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_.matrix(); }
  const ComplexMatrix& as_complex_matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Unit vector in C^n. Throws NotNormalized beyond 1e-12.
class PureState {
 public:
  explicit PureState(Vector v);

  Eigen::Index dim() const { return v_.size(); }
  const Vector& vector() const { return v_; }

 private:
  Vector v_;
};

/// Positive unit-trace operator: Hermitian within 1e-12, eigenvalues
/// >= -1e-10 (rank-one projectors built in floating point sit slightly
/// below zero), trace 1 within 1e-10.
class DensityOperator {
 public:
  explicit DensityOperator(Matrix m);

  Eigen::Index dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_.matrix(); }
  const ComplexMatrix& as_complex_matrix() const { return m_; }

 private:
  ComplexMatrix m_;
};

/// Symmetrizes and validates; identical to the HermitianOperator constructor.
HermitianOperator make_hermitian(const ComplexMatrix& m);

/// Rank-one projector psi psi^dagger.
DensityOperator pure_state_density(const PureState& psi);

/// Tr(rho A). The trace is real for valid inputs; the imaginary residue is
/// checked below 1e-10 and discarded.
double expectation(const HermitianOperator& a, const DensityOperator& rho);

/// <A>_psi = psi^dagger A psi.
double expectation(const HermitianOperator& a, const PureState& psi);

/// sigma^2_psi(A) = <A^2>_psi - <A>_psi^2, clamped to 0 inside [-1e-10, 0).
double quantum_dispersion(const HermitianOperator& a, const PureState& psi);

/// [A1, A2] = A1 A2 - A2 A1; traceless in finite dimension.
AntiHermitianOperator commutator(const HermitianOperator& a1,
                                 const HermitianOperator& a2);

/// C = A - <A>_psi I, the zero-mean representative of A in the state psi.
HermitianOperator shift_observable(const HermitianOperator& a,
                                   const PureState& psi);

/// (G + G^dagger)/2 with G of independent complex Gaussian entries of
/// standard deviation `scale`. Deterministic in (dim, seed, scale).
HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed,
                                   double scale);

/// Normalized complex Gaussian vector; distribution is unitarily invariant.
PureState random_pure_state(Eigen::Index dim, std::uint64_t seed);

/// Tr(X Y) without forming the product.
Complex trace_product(const Matrix& x, const Matrix& y);

namespace detail {
void require_same_dim(Eigen::Index a, Eigen::Index b, const char* context);
}  // namespace detail

}  // namespace pcsft
