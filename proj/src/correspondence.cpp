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

#include "pcsft/correspondence.hpp"

#include <cmath>
#include <stdexcept>

#include "pcsft/numeric.hpp"

namespace pcsft {

namespace {

constexpr double kAuditSlack = 1e-9;

}  // namespace

Complex prequantum_average(const ComplexMatrix& a, const CovarianceOperator& d) {
  detail::require_same_dim(a.dim(), d.dim(), "prequantum_average");
  return trace_product(d.matrix(), a.matrix());
}

double vacuum_subtracted_average(const HermitianOperator& a,
                                 const DensityOperator& rho) {
  detail::require_same_dim(a.dim(), rho.dim(), "vacuum_subtracted_average");
  const CovarianceOperator lifted = covariance_for_state(rho);
  const Complex field_mean = prequantum_average(a.as_complex_matrix(), lifted);
  const Complex background = a.matrix().trace();
  return real_part_checked(field_mean - background, "vacuum_subtracted_average");
}

TraceSquarePair lifted_trace_square(const HermitianOperator& a,
                                    const PureState& psi) {
  detail::require_same_dim(a.dim(), psi.dim(), "lifted_trace_square");

  const CovarianceOperator lifted = covariance_for_state(pure_state_density(psi));
  const Matrix da = lifted.matrix() * a.matrix();
  TraceSquarePair pair;
  pair.direct = real_part_checked(trace_product(da, da), "Tr((D A)^2)");

  const Matrix a_squared = a.matrix() * a.matrix();
  const double trace_a2 = real_part_checked(a_squared.trace(), "Tr A^2");
  const double second = real_part_checked(
      psi.vector().dot(a_squared * psi.vector()), "<A^2>_psi");
  const double mean = expectation(a, psi);
  pair.closed_form = trace_a2 + 2.0 * second + mean * mean;
  return pair;
}

double second_moment(const HermitianOperator& a1, const HermitianOperator& a2,
                     const CovarianceOperator& d) {
  detail::require_same_dim(a1.dim(), a2.dim(), "second_moment");
  detail::require_same_dim(a1.dim(), d.dim(), "second_moment");
  const Complex first = trace_product(d.matrix(), a1.matrix());
  const Complex second = trace_product(d.matrix(), a2.matrix());
  const Complex cross =
      trace_product(d.matrix() * a2.matrix(), d.matrix() * a1.matrix());
  return real_part_checked(first * second + cross, "second_moment");
}

Complex second_moment_by_pairings(const ComplexMatrix& a1,
                                  const ComplexMatrix& a2,
                                  const CovarianceOperator& d) {
  detail::require_same_dim(a1.dim(), a2.dim(), "second_moment_by_pairings");
  detail::require_same_dim(a1.dim(), d.dim(), "second_moment_by_pairings");
  const Eigen::Index n = a1.dim();
  const Matrix& m1 = a1.matrix();
  const Matrix& m2 = a2.matrix();
  const Matrix& dm = d.matrix();

  // E[conj(phi_i) phi_j conj(phi_k) phi_l] = D_ji D_lk + D_li D_jk for the
  // circularly-symmetric field; everything else vanishes.
  Complex total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
          total += m1(i, j) * m2(k, l) *
                   (dm(j, i) * dm(l, k) + dm(l, i) * dm(j, k));
        }
      }
    }
  }
  return total;
}

DispersionReport classical_dispersion_report(const HermitianOperator& a,
                                             const PureState& psi) {
  detail::require_same_dim(a.dim(), psi.dim(), "classical_dispersion_report");

  DispersionReport report;
  report.vacuum_dispersion = white_noise_dispersion(a);
  report.quantum_dispersion = quantum_dispersion(a, psi);
  report.qm_mean = expectation(a, psi);
  report.classical_dispersion = report.vacuum_dispersion +
                                2.0 * report.quantum_dispersion +
                                3.0 * report.qm_mean * report.qm_mean;
  report.regularized_dispersion =
      0.5 * (report.classical_dispersion - report.vacuum_dispersion);

  // Cross-check through the Gaussian second moment.
  const CovarianceOperator lifted = covariance_for_state(pure_state_density(psi));
  const double raw_second = second_moment(a, a, lifted);
  const double mean_field =
      real_part_checked(prequantum_average(a.as_complex_matrix(), lifted),
                        "E f_A");
  const double via_moments = raw_second - mean_field * mean_field;
  if (!approx_equal(report.classical_dispersion, via_moments)) {
    throw std::logic_error(
        "classical_dispersion_report: decomposition and moment routes "
        "disagree");
  }
  return report;
}

double white_noise_dispersion(const HermitianOperator& a) {
  return real_part_checked(trace_product(a.matrix(), a.matrix()),
                           "white_noise_dispersion");
}

double regularized_dispersion(const HermitianOperator& a,
                              const PureState& psi) {
  const DispersionReport report = classical_dispersion_report(a, psi);
  return report.regularized_dispersion;
}

double robertson_bound(const HermitianOperator& a1, const HermitianOperator& a2,
                       const PureState& psi) {
  detail::require_same_dim(a1.dim(), a2.dim(), "robertson_bound");
  detail::require_same_dim(a1.dim(), psi.dim(), "robertson_bound");
  const AntiHermitianOperator k = commutator(a1, a2);
  const Complex mean = psi.vector().dot(k.matrix() * psi.vector());
  return 0.25 * std::norm(mean);
}

AuditRecord classical_robertson_audit(const HermitianOperator& a1,
                                      const HermitianOperator& a2,
                                      const PureState& psi) {
  detail::require_same_dim(a1.dim(), a2.dim(), "classical_robertson_audit");
  detail::require_same_dim(a1.dim(), psi.dim(), "classical_robertson_audit");

  // Shift to zero mean in psi; the commutator is invariant under the shift.
  const HermitianOperator c1 = shift_observable(a1, psi);
  const HermitianOperator c2 = shift_observable(a2, psi);
  const AntiHermitianOperator k = commutator(c1, c2);

  AuditRecord record;
  record.lhs =
      regularized_dispersion(c1, psi) * regularized_dispersion(c2, psi);
  record.commutator_trace = k.matrix().trace();

  const CovarianceOperator lifted = covariance_for_state(pure_state_density(psi));
  const Complex field_mean = prequantum_average(k.as_complex_matrix(), lifted);
  record.rhs = 0.25 * std::norm(field_mean - record.commutator_trace);
  record.margin = record.lhs - record.rhs;
  record.passed = record.margin >= -kAuditSlack * (1.0 + std::abs(record.lhs));
  return record;
}

}  // namespace pcsft
