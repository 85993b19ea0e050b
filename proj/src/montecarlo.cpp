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

#include "pcsft/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "pcsft/errors.hpp"

namespace pcsft {

namespace {

// Chunk size is part of the numeric contract: partials are always produced
// per 4096-sample chunk and merged pairwise in chunk order, so the reduction
// tree is independent of the worker count.
constexpr std::uint64_t kChunkSamples = 4096;

struct MomentAccumulator {
  std::uint64_t count = 0;
  double mean_re = 0.0;
  double mean_im = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;

  // Single-value central-moment update through order four; moments track the
  // real part, the mean additionally tracks the imaginary part.
  void add(Complex value) {
    const double x = value.real();
    const double n1 = static_cast<double>(count);
    ++count;
    const double n = static_cast<double>(count);
    const double delta = x - mean_re;
    const double delta_n = delta / n;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;
    mean_re += delta_n;
    mean_im += (value.imag() - mean_im) / n;
    m4 += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2 -
          4.0 * delta_n * m3;
    m3 += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2;
    m2 += term1;
  }
};

MomentAccumulator combine(const MomentAccumulator& a,
                          const MomentAccumulator& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;

  MomentAccumulator out;
  out.count = a.count + b.count;
  const double na = static_cast<double>(a.count);
  const double nb = static_cast<double>(b.count);
  const double n = na + nb;
  const double delta = b.mean_re - a.mean_re;
  const double delta2 = delta * delta;
  const double delta3 = delta2 * delta;
  const double delta4 = delta2 * delta2;

  out.mean_re = a.mean_re + delta * nb / n;
  out.mean_im = a.mean_im + (b.mean_im - a.mean_im) * nb / n;
  out.m2 = a.m2 + b.m2 + delta2 * na * nb / n;
  out.m3 = a.m3 + b.m3 + delta3 * na * nb * (na - nb) / (n * n) +
           3.0 * delta * (na * b.m2 - nb * a.m2) / n;
  out.m4 = a.m4 + b.m4 +
           delta4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
           6.0 * delta2 * (na * na * b.m2 + nb * nb * a.m2) / (n * n) +
           4.0 * delta * (na * b.m3 - nb * a.m3) / n;
  return out;
}

EstimatorSummary summarize(const MomentAccumulator& total) {
  EstimatorSummary summary;
  summary.count = total.count;
  summary.mean = Complex(total.mean_re, total.mean_im);
  const double n = static_cast<double>(total.count);
  summary.variance = total.m2 / (n - 1.0);
  summary.std_error_mean = std::sqrt(summary.variance / n);
  const double fourth = total.m4 / n;
  summary.std_error_variance =
      std::sqrt(std::max(fourth - summary.variance * summary.variance, 0.0) / n);
  return summary;
}

// Runs one accumulator per 4096-sample chunk, handing chunks to workers
// through an atomic cursor, then folds the partials pairwise in chunk order.
// make_eval() is invoked once per worker to give each thread private scratch.
template <typename EvalFactory>
EstimatorSummary run_estimator(const CovarianceFactor& factor,
                               const EstimatorConfig& cfg,
                               const EvalFactory& make_eval) {
  if (cfg.sample_count < 2) {
    throw ConfigInvalid("estimator requires sample_count >= 2");
  }
  const std::uint64_t chunk_count =
      (cfg.sample_count + kChunkSamples - 1) / kChunkSamples;
  std::vector<MomentAccumulator> partials(chunk_count);

  std::atomic<std::uint64_t> next_chunk{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;

  auto body = [&]() {
    try {
      auto eval = make_eval();
      Vector z(factor.dim());
      Vector phi(factor.dim());
      for (;;) {
        const std::uint64_t c =
            next_chunk.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunk_count) break;
        MomentAccumulator acc;
        const std::uint64_t begin = c * kChunkSamples;
        const std::uint64_t end =
            std::min(begin + kChunkSamples, cfg.sample_count);
        for (std::uint64_t i = begin; i < end; ++i) {
          sample_into(factor, SampleStream{cfg.base_seed, i}, z, phi);
          acc.add(eval(phi));
        }
        partials[c] = acc;
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const std::uint64_t wanted = cfg.worker_hint == 0 ? 1 : cfg.worker_hint;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(wanted, chunk_count));
  if (workers <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  while (partials.size() > 1) {
    std::vector<MomentAccumulator> merged;
    merged.reserve((partials.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < partials.size(); i += 2) {
      merged.push_back(combine(partials[i], partials[i + 1]));
    }
    if (partials.size() % 2 == 1) merged.push_back(partials.back());
    partials = std::move(merged);
  }
  return summarize(partials.front());
}

}  // namespace

EstimatorSummary estimate_moments(const ComplexMatrix& a,
                                  const CovarianceFactor& factor,
                                  const EstimatorConfig& cfg) {
  detail::require_same_dim(a.dim(), factor.dim(), "estimate_moments");
  const Matrix& m = a.matrix();
  return run_estimator(factor, cfg, [&m]() {
    return [&m, scratch = Vector(m.rows())](const Vector& phi) mutable {
      scratch.noalias() = m * phi;
      return phi.dot(scratch);
    };
  });
}

EstimatorSummary estimate_cross_moment(const HermitianOperator& a1,
                                       const HermitianOperator& a2,
                                       const CovarianceFactor& factor,
                                       const EstimatorConfig& cfg) {
  detail::require_same_dim(a1.dim(), a2.dim(), "estimate_cross_moment");
  detail::require_same_dim(a1.dim(), factor.dim(), "estimate_cross_moment");
  const Matrix& m1 = a1.matrix();
  const Matrix& m2 = a2.matrix();
  return run_estimator(factor, cfg, [&m1, &m2]() {
    return [&m1, &m2, s1 = Vector(m1.rows()),
            s2 = Vector(m2.rows())](const Vector& phi) mutable {
      s1.noalias() = m1 * phi;
      s2.noalias() = m2 * phi;
      return phi.dot(s1) * phi.dot(s2);
    };
  });
}

ComparisonRecord compare(double analytic, double empirical, double std_error,
                         double z_threshold) {
  ComparisonRecord record;
  record.analytic = analytic;
  record.empirical = empirical;
  const double diff = empirical - analytic;
  if (std_error > 0.0) {
    record.z_score = diff / std_error;
  } else if (diff == 0.0) {
    record.z_score = 0.0;
  } else {
    record.z_score = diff > 0.0 ? std::numeric_limits<double>::infinity()
                                : -std::numeric_limits<double>::infinity();
  }
  record.passed = std::abs(record.z_score) <= z_threshold;
  return record;
}

}  // namespace pcsft
