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
#include <vector>

#include "pcsft/correspondence.hpp"
#include "pcsft/montecarlo.hpp"

using namespace pcsft;

namespace {

EstimatorConfig config(std::uint64_t samples, std::uint64_t seed,
                       unsigned workers) {
  EstimatorConfig cfg;
  cfg.sample_count = samples;
  cfg.base_seed = seed;
  cfg.worker_hint = workers;
  return cfg;
}

CovarianceFactor lifted_factor(Eigen::Index dim, std::uint64_t seed) {
  const PureState psi = random_pure_state(dim, seed);
  return factorize(covariance_for_state(pure_state_density(psi)));
}

}  // namespace

TEST_CASE("estimates are bit-identical across worker counts") {
  const HermitianOperator a = random_hermitian(4, 1, 1.0);
  const CovarianceFactor factor = lifted_factor(4, 2);
  // 10000 samples span 3 chunks (4096 + 4096 + 1808), exercising both the
  // chunk remainder and the pairwise merge.
  const EstimatorSummary one =
      estimate_moments(a.as_complex_matrix(), factor, config(10000, 3, 1));
  const EstimatorSummary two =
      estimate_moments(a.as_complex_matrix(), factor, config(10000, 3, 2));
  const EstimatorSummary eight =
      estimate_moments(a.as_complex_matrix(), factor, config(10000, 3, 8));
  CHECK(one.mean == two.mean);
  CHECK(one.mean == eight.mean);
  CHECK(one.variance == two.variance);
  CHECK(one.variance == eight.variance);
  CHECK(one.std_error_mean == eight.std_error_mean);
  CHECK(one.std_error_variance == eight.std_error_variance);
  CHECK(one.count == 10000);

  const EstimatorSummary cross_one =
      estimate_cross_moment(a, a, factor, config(10000, 4, 1));
  const EstimatorSummary cross_eight =
      estimate_cross_moment(a, a, factor, config(10000, 4, 8));
  CHECK(cross_one.mean == cross_eight.mean);
  CHECK(cross_one.variance == cross_eight.variance);
}

TEST_CASE("streaming moments match a two-pass reference") {
  const Eigen::Index dim = 3;
  const HermitianOperator a = random_hermitian(dim, 11, 1.0);
  const CovarianceFactor factor = lifted_factor(dim, 12);
  const std::uint64_t n = 10000;
  const std::uint64_t seed = 13;

  const EstimatorSummary summary =
      estimate_moments(a.as_complex_matrix(), factor, config(n, seed, 1));

  // Recompute every f_A(phi_i) directly and take two-pass moments.
  std::vector<double> values;
  values.reserve(n);
  Complex mean_direct = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const FieldSample s = sample(factor, {seed, i});
    const Complex f = quadratic_functional(a.as_complex_matrix(), s);
    values.push_back(f.real());
    mean_direct += f;
  }
  mean_direct /= static_cast<double>(n);
  double m2 = 0.0, m4 = 0.0;
  for (const double x : values) {
    const double d = x - mean_direct.real();
    m2 += d * d;
    m4 += d * d * d * d;
  }
  const double variance = m2 / static_cast<double>(n - 1);
  const double se_mean = std::sqrt(variance / static_cast<double>(n));
  const double fourth = m4 / static_cast<double>(n);
  const double se_var = std::sqrt(
      std::max(fourth - variance * variance, 0.0) / static_cast<double>(n));

  CHECK(std::abs(summary.mean - mean_direct) <
        1e-12 * (1.0 + std::abs(mean_direct)));
  CHECK(summary.variance == doctest::Approx(variance).epsilon(1e-12));
  CHECK(summary.std_error_mean == doctest::Approx(se_mean).epsilon(1e-12));
  CHECK(summary.std_error_variance == doctest::Approx(se_var).epsilon(1e-10));
}

TEST_CASE("estimator mean converges to the trace formula") {
  const Eigen::Index dim = 4;
  const HermitianOperator a = random_hermitian(dim, 21, 1.0);
  const PureState psi = random_pure_state(dim, 22);
  const CovarianceOperator d = covariance_for_state(pure_state_density(psi));
  const CovarianceFactor factor = factorize(d);
  const double analytic =
      prequantum_average(a.as_complex_matrix(), d).real();

  const EstimatorSummary summary =
      estimate_moments(a.as_complex_matrix(), factor, config(200000, 23, 4));
  const ComparisonRecord record =
      compare(analytic, summary.mean.real(), summary.std_error_mean, 4.0);
  CHECK(record.passed);
  // The imaginary part of f_A is pure roundoff for Hermitian A.
  CHECK(std::abs(summary.mean.imag()) < 1e-12);
}

TEST_CASE("z-scores are calibrated") {
  // Across independent seeds the z statistic for the mean should be roughly
  // standard normal: P(|z| > 2) ~ 0.046. With 200 runs the count at
  // threshold 2 concentrates in [2, 24] (5 sigma of binomial(200, 0.046)).
  const Eigen::Index dim = 3;
  const HermitianOperator a = random_hermitian(dim, 31, 1.0);
  const PureState psi = random_pure_state(dim, 32);
  const CovarianceOperator d = covariance_for_state(pure_state_density(psi));
  const CovarianceFactor factor = factorize(d);
  const double analytic =
      prequantum_average(a.as_complex_matrix(), d).real();

  int exceed = 0;
  const int runs = 200;
  for (int r = 0; r < runs; ++r) {
    const EstimatorSummary summary = estimate_moments(
        a.as_complex_matrix(), factor, config(4096, 5000 + r, 1));
    const ComparisonRecord record =
        compare(analytic, summary.mean.real(), summary.std_error_mean, 2.0);
    if (!record.passed) ++exceed;
  }
  CHECK(exceed >= 2);
  CHECK(exceed <= 24);
}

TEST_CASE("zero operator yields exact zeros") {
  const Eigen::Index dim = 3;
  const HermitianOperator zero(Matrix::Zero(dim, dim));
  const CovarianceFactor factor = lifted_factor(dim, 41);
  const EstimatorSummary summary =
      estimate_moments(zero.as_complex_matrix(), factor, config(5000, 42, 2));
  CHECK(summary.mean == Complex(0.0, 0.0));
  CHECK(summary.variance == 0.0);
  CHECK(summary.std_error_mean == 0.0);
  CHECK(summary.std_error_variance == 0.0);
  const ComparisonRecord record = compare(0.0, summary.mean.real(),
                                          summary.std_error_mean, 4.0);
  CHECK(record.passed);
  CHECK(record.z_score == 0.0);
}

TEST_CASE("comparison conventions at zero standard error") {
  CHECK(compare(1.0, 1.0, 0.0, 4.0).passed);
  CHECK(compare(1.0, 1.0, 0.0, 4.0).z_score == 0.0);
  const ComparisonRecord off = compare(1.0, 1.5, 0.0, 4.0);
  CHECK_FALSE(off.passed);
  CHECK(std::isinf(off.z_score));
  CHECK(off.z_score > 0.0);
  const ComparisonRecord below = compare(1.5, 1.0, 0.0, 4.0);
  CHECK(std::isinf(below.z_score));
  CHECK(below.z_score < 0.0);
}

TEST_CASE("estimator validates the sample count and dimensions") {
  const HermitianOperator a = random_hermitian(3, 51, 1.0);
  const CovarianceFactor factor = lifted_factor(3, 52);
  CHECK_THROWS_AS(
      estimate_moments(a.as_complex_matrix(), factor, config(1, 1, 1)),
      ConfigInvalid);
  CHECK_THROWS_AS(
      estimate_moments(a.as_complex_matrix(), factor, config(0, 1, 1)),
      ConfigInvalid);
  const CovarianceFactor other = lifted_factor(4, 53);
  CHECK_THROWS_AS(
      estimate_moments(a.as_complex_matrix(), other, config(100, 1, 1)),
      DimensionMismatch);
}

TEST_CASE("cross moment of an operator with itself estimates the second moment") {
  const Eigen::Index dim = 3;
  const HermitianOperator a = random_hermitian(dim, 61, 1.0);
  const PureState psi = random_pure_state(dim, 62);
  const CovarianceOperator d = covariance_for_state(pure_state_density(psi));
  const CovarianceFactor factor = factorize(d);
  const double analytic = second_moment(a, a, d);
  const EstimatorSummary summary =
      estimate_cross_moment(a, a, factor, config(200000, 63, 4));
  const ComparisonRecord record =
      compare(analytic, summary.mean.real(), summary.std_error_mean, 4.0);
  CHECK(record.passed);
}
