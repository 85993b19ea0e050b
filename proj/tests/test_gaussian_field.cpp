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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>

#include "pcsft/gaussian_field.hpp"
#include "pcsft/hilbert.hpp"
#include "pcsft/rng.hpp"

using namespace pcsft;

namespace {

// Dense positive-semidefinite test covariance G G^dagger + shift I.
Matrix psd_matrix(Eigen::Index dim, std::uint64_t seed, double shift) {
  Matrix g(dim, dim);
  const std::uint64_t key = derive_seed(seed, 0x67656e70736400ULL);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = standard_complex_normal(key, 0, i * dim + j);
    }
  }
  return g * g.adjoint() + shift * Matrix::Identity(dim, dim);
}

}  // namespace

TEST_CASE("covariance lift adds the identity") {
  const PureState psi = random_pure_state(3, 5);
  const DensityOperator rho = pure_state_density(psi);
  const CovarianceOperator d = covariance_for_state(rho);
  // Bit-exact against the same entrywise rho + I evaluation; subtracting the
  // terms separately would reintroduce rounding.
  const Matrix lifted = rho.matrix() + Matrix::Identity(3, 3);
  CHECK((d.matrix() - lifted).cwiseAbs().maxCoeff() == 0.0);
  const CovarianceOperator white = white_noise_covariance(4);
  CHECK((white.matrix() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("covariance construction validates the input") {
  CHECK_THROWS_AS(CovarianceOperator(Matrix::Zero(2, 3)), NotSquare);
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(CovarianceOperator{skew}, TooFarFromHermitian);
}

TEST_CASE("factorization round-trips L L^dagger = D") {
  for (const Eigen::Index dim : {1, 2, 3, 5, 8, 13, 21, 32}) {
    const CovarianceOperator d{psd_matrix(dim, 100 + dim, 0.0)};
    const CovarianceFactor factor = factorize(d);
    const Matrix product = factor.factor() * factor.factor().adjoint();
    const double scale = d.matrix().cwiseAbs().maxCoeff();
    CHECK((product - d.matrix()).cwiseAbs().maxCoeff() <=
          1e-10 * (1.0 + scale));
  }
}

TEST_CASE("rank-deficient covariances factor cleanly") {
  // A projector has eigenvalues {1, 0, 0}; the zero modes must not inject
  // noise into the sampled field.
  const PureState psi = random_pure_state(3, 9);
  const CovarianceOperator d{(psi.vector() * psi.vector().adjoint()).eval()};
  const CovarianceFactor factor = factorize(d);
  const FieldSample s = sample(factor, {123, 0});
  // phi lies in the span of psi up to sqrt(machine eps): eigensolver noise
  // of order 1e-16 in the zero modes becomes ~1e-8 after the square root.
  const Complex overlap = psi.vector().dot(s.phi);
  CHECK((s.phi - overlap * psi.vector()).norm() < 1e-6);

  Matrix negative = -Matrix::Identity(2, 2);
  CHECK_THROWS_AS(CovarianceOperator{negative}, NotPositiveSemidefinite);
}

TEST_CASE("samples are pure functions of (seed, substream)") {
  const CovarianceFactor factor = factorize(CovarianceOperator{psd_matrix(4, 7, 1.0)});
  const FieldSample a = sample(factor, {42, 17});
  const FieldSample b = sample(factor, {42, 17});
  CHECK((a.phi - b.phi).cwiseAbs().maxCoeff() == 0.0);
  CHECK((sample(factor, {42, 18}).phi - a.phi).cwiseAbs().maxCoeff() != 0.0);
  CHECK((sample(factor, {43, 17}).phi - a.phi).cwiseAbs().maxCoeff() != 0.0);

  Vector z(4), phi(4);
  sample_into(factor, {42, 17}, z, phi);
  CHECK((phi - a.phi).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("field moments match the covariance") {
  // E[phi phi^dagger] = D and E[phi phi^T] = 0 (circular symmetry). With
  // 40000 samples entries have standard error ~0.01; bounds at ~5 sigma.
  const Eigen::Index dim = 3;
  const CovarianceOperator d{psd_matrix(dim, 29, 1.0)};
  const CovarianceFactor factor = factorize(d);
  Matrix outer = Matrix::Zero(dim, dim);
  Matrix plain = Matrix::Zero(dim, dim);
  Vector mean = Vector::Zero(dim);
  const int n = 40000;
  Vector z(dim), phi(dim);
  for (int i = 0; i < n; ++i) {
    sample_into(factor, {777, static_cast<std::uint64_t>(i)}, z, phi);
    outer += phi * phi.adjoint();
    plain += phi * phi.transpose();
    mean += phi;
  }
  outer /= n;
  plain /= n;
  mean /= n;
  const double scale = d.matrix().cwiseAbs().maxCoeff();
  CHECK((outer - d.matrix()).cwiseAbs().maxCoeff() < 0.05 * (1.0 + scale));
  CHECK(plain.cwiseAbs().maxCoeff() < 0.05 * (1.0 + scale));
  CHECK(mean.cwiseAbs().maxCoeff() < 0.03 * (1.0 + scale));
}

TEST_CASE("white noise norm concentrates on the dimension") {
  // Under D = I, E ||phi||^2 = Tr I = dim.
  const Eigen::Index dim = 6;
  const CovarianceFactor factor = factorize(white_noise_covariance(dim));
  double total = 0.0;
  const int n = 20000;
  Vector z(dim), phi(dim);
  for (int i = 0; i < n; ++i) {
    sample_into(factor, {31337, static_cast<std::uint64_t>(i)}, z, phi);
    total += phi.squaredNorm();
  }
  CHECK(total / n == doctest::Approx(static_cast<double>(dim)).epsilon(0.02));
}

TEST_CASE("quadratic functional evaluates phi^dagger A phi") {
  Matrix sz(2, 2);
  sz << 1.0, 0.0, 0.0, -1.0;
  Vector phi(2);
  phi << Complex(1.0, 2.0), Complex(0.5, -1.5);
  const FieldSample s{phi};
  // |phi_0|^2 - |phi_1|^2 = 5 - 2.5.
  const Complex value = quadratic_functional(ComplexMatrix(sz), s);
  CHECK(value.real() == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(std::abs(value.imag()) < 1e-14);

  // Hermitian A gives a real value; anti-Hermitian gives purely imaginary.
  const HermitianOperator a = random_hermitian(2, 3, 1.0);
  const Complex hermitian_value =
      quadratic_functional(a.as_complex_matrix(), s);
  CHECK(std::abs(hermitian_value.imag()) <
        1e-12 * (1.0 + std::abs(hermitian_value.real())));
}
