# Copyright 2026 The pcsft authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum averages and dispersions as moments of a complex Gaussian field.

Observables are Hermitian matrices A; states enter through the covariance
lift D = rho + I. The classical variable f_A(phi) = phi^dagger A phi then has
E f_A = Tr(D A), and subtracting the white-noise background Tr A recovers the
quantum average.
"""

import json as _json

from ._pcsft import (
    REPORT_SCHEMA_VERSION,
    AntiHermitianOperator,
    AuditRecord,
    ComparisonRecord,
    ComplexMatrix,
    ConfigInvalid,
    CovarianceFactor,
    CovarianceOperator,
    DensityOperator,
    DispersionReport,
    Error,
    EstimatorSummary,
    HermitianOperator,
    PureState,
    TraceSquarePair,
    classical_dispersion_report,
    classical_robertson_audit,
    commutator,
    compare,
    covariance_for_state,
    estimate_cross_moment,
    estimate_moments,
    expectation,
    factorize,
    lifted_trace_square,
    make_hermitian,
    prequantum_average,
    pure_state_density,
    quadratic_functional,
    quantum_dispersion,
    random_hermitian,
    random_pure_state,
    regularized_dispersion,
    robertson_bound,
    run_suite_json,
    sample_field,
    second_moment,
    second_moment_by_pairings,
    shift_observable,
    vacuum_subtracted_average,
    white_noise_covariance,
    white_noise_dispersion,
)

__version__ = "0.1.0"


def run_suite(kind, **kwargs):
    """Run a checking suite and return the report as a dict.

    kind is one of "identity", "estimate", "robertson-audit"; keyword
    arguments mirror the CLI flags (dim, trials, samples, seed, z_threshold,
    workers, scale, output_path).
    """
    text, _passed, _failed = run_suite_json(kind, **kwargs)
    return _json.loads(text)


__all__ = [
    "REPORT_SCHEMA_VERSION",
    "AntiHermitianOperator",
    "AuditRecord",
    "ComparisonRecord",
    "ComplexMatrix",
    "ConfigInvalid",
    "CovarianceFactor",
    "CovarianceOperator",
    "DensityOperator",
    "DispersionReport",
    "Error",
    "EstimatorSummary",
    "HermitianOperator",
    "PureState",
    "TraceSquarePair",
    "classical_dispersion_report",
    "classical_robertson_audit",
    "commutator",
    "compare",
    "covariance_for_state",
    "estimate_cross_moment",
    "estimate_moments",
    "expectation",
    "factorize",
    "lifted_trace_square",
    "make_hermitian",
    "prequantum_average",
    "pure_state_density",
    "quadratic_functional",
    "quantum_dispersion",
    "random_hermitian",
    "random_pure_state",
    "regularized_dispersion",
    "robertson_bound",
    "run_suite",
    "run_suite_json",
    "sample_field",
    "second_moment",
    "second_moment_by_pairings",
    "shift_observable",
    "vacuum_subtracted_average",
    "white_noise_covariance",
    "white_noise_dispersion",
    "__version__",
]
