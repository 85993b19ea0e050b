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

#include "pcsft/gaussian_field.hpp"
#include "pcsft/hilbert.hpp"

namespace pcsft {

// Streaming Monte Carlo estimation of field moments. Samples are indexed by
// substream, accumulated in fixed-size chunks, and the chunk partials are
// combined by a fixed-order pairwise reduction, so results are bit-identical
// for every worker count.

struct EstimatorConfig {
  std::uint64_t sample_count = 0;  // >= 2
  std::uint64_t base_seed = 0;
  unsigned worker_hint = 1;  // advisory parallelism, never affects values
  double z_threshold = 4.0;
};

struct EstimatorSummary {
  Complex mean;                    // empirical E f
  double variance = 0.0;           // unbiased, of the real part
  double std_error_mean = 0.0;     // sqrt(variance / count)
  double std_error_variance = 0.0; // sqrt((m4 - variance^2) / count)
  std::uint64_t count = 0;
};

struct ComparisonRecord {
  double analytic = 0.0;
  double empirical = 0.0;
  double z_score = 0.0;
  bool passed = false;  // |z| <= threshold
};

/// Streams f_A(phi_i) for substreams 0..sample_count-1 of the field with the
/// given covariance factor, accumulating mean and central moments up to
/// order four.
EstimatorSummary estimate_moments(const ComplexMatrix& a,
                                  const CovarianceFactor& factor,
                                  const EstimatorConfig& cfg);

/// Streams the per-sample product f_{A1}(phi) f_{A2}(phi); the mean estimates
/// the Gaussian second moment.
EstimatorSummary estimate_cross_moment(const HermitianOperator& a1,
                                       const HermitianOperator& a2,
                                       const CovarianceFactor& factor,
                                       const EstimatorConfig& cfg);

/// z = (empirical - analytic) / std_error. A zero standard error yields z = 0
/// when the difference is also zero and an infinite, failing z otherwise.
ComparisonRecord compare(double analytic, double empirical, double std_error,
                         double z_threshold);

}  // namespace pcsft
