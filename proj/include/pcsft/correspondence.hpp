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

#include "pcsft/gaussian_field.hpp"
#include "pcsft/hilbert.hpp"

namespace pcsft {

// Closed-form side of the field<->operator dictionary. Everything here is a
// trace formula; the montecarlo module estimates the same quantities from
// field samples and the two sides are compared in the suites.

/// E_{mu_D} f_A = Tr(D A), valid for an arbitrary linear operator A.
Complex prequantum_average(const ComplexMatrix& a, const CovarianceOperator& d);

/// <A>_rho recovered by subtracting the white-noise background:
/// Tr(D_rho A) - Tr A. Agrees with expectation(a, rho) to roundoff.
double vacuum_subtracted_average(const HermitianOperator& a,
                                 const DensityOperator& rho);

/// Both routes to Tr((D_psi A)^2) for the lifted pure-state covariance:
/// `direct` multiplies the matrices out, `closed_form` evaluates
/// Tr A^2 + 2<A^2>_psi + <A>_psi^2. Equal analytically.
struct TraceSquarePair {
  double direct = 0.0;
  double closed_form = 0.0;
};
TraceSquarePair lifted_trace_square(const HermitianOperator& a,
                                    const PureState& psi);

/// Gaussian second moment E_mu f_{A1} f_{A2} =
/// Tr(D A1) Tr(D A2) + Tr(D A2 D A1).
double second_moment(const HermitianOperator& a1, const HermitianOperator& a2,
                     const CovarianceOperator& d);

/// Brute-force route to the same moment: expands
/// sum_{ijkl} A1_ij A2_kl E[conj(phi_i) phi_j conj(phi_k) phi_l] over the
/// complex Gaussian pairings E[conj(phi_i) phi_j] = D_ji. O(n^4); the
/// independent cross-check for second_moment, never an implementation detail
/// of it.
Complex second_moment_by_pairings(const ComplexMatrix& a1,
                                  const ComplexMatrix& a2,
                                  const CovarianceOperator& d);

/// Dispersion bookkeeping for one (A, psi) pair. The classical dispersion
/// decomposes as vacuum + 2*quantum + 3*mean^2, so it dominates both the
/// vacuum and the quantum dispersion.
struct DispersionReport {
  double classical_dispersion = 0.0;  // sigma^2 of f_A under the lifted covariance
  double quantum_dispersion = 0.0;    // sigma^2_psi(A)
  double vacuum_dispersion = 0.0;     // Tr A^2
  double regularized_dispersion = 0.0;  // (classical - vacuum) / 2
  double qm_mean = 0.0;               // <A>_psi
};

/// Fills the report, computing the classical dispersion both from the
/// decomposition and from second_moment - prequantum_average^2; the two
/// routes must agree within 1e-10 relative.
DispersionReport classical_dispersion_report(const HermitianOperator& a,
                                             const PureState& psi);

/// sigma^2_{mu_I}(f_A) = Tr A^2, the dispersion of the white-noise field.
double white_noise_dispersion(const HermitianOperator& a);

/// Half the excess of the classical dispersion over the white-noise
/// dispersion; equals sigma^2_psi(A) when <A>_psi = 0 and
/// sigma^2_psi(A) + 1.5 <A>_psi^2 in general.
double regularized_dispersion(const HermitianOperator& a, const PureState& psi);

/// Quantum uncertainty bound: |<[A1, A2]>_psi|^2 / 4.
double robertson_bound(const HermitianOperator& a1, const HermitianOperator& a2,
                       const PureState& psi);

/// Outcome of one classical Robertson-type check.
struct AuditRecord {
  double lhs = 0.0;     // product of regularized dispersions
  double rhs = 0.0;     // |E_{mu_psi} f_K - Tr K|^2 / 4
  double margin = 0.0;  // lhs - rhs
  Complex commutator_trace;  // Tr K, zero in finite dimension
  bool passed = false;  // margin >= -1e-9 * (1 + |lhs|)
};

/// Classical counterpart of the Robertson inequality, stated entirely in
/// field moments. Both observables are shifted to zero mean in psi first
/// (the commutator is unchanged by the shift); the rhs is evaluated through
/// the prequantum average of f_K with the Tr K subtraction kept explicit.
AuditRecord classical_robertson_audit(const HermitianOperator& a1,
                                      const HermitianOperator& a2,
                                      const PureState& psi);

}  // namespace pcsft
