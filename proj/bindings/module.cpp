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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcsft/correspondence.hpp"
#include "pcsft/errors.hpp"
#include "pcsft/gaussian_field.hpp"
#include "pcsft/hilbert.hpp"
#include "pcsft/montecarlo.hpp"
#include "pcsft/suites.hpp"

namespace py = pybind11;

using namespace pcsft;

namespace {

EstimatorConfig make_estimator_config(std::uint64_t samples,
                                      std::uint64_t seed, unsigned workers,
                                      double z_threshold) {
  EstimatorConfig cfg;
  cfg.sample_count = samples;
  cfg.base_seed = seed;
  cfg.worker_hint = workers;
  cfg.z_threshold = z_threshold;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_pcsft, m) {
  m.doc() =
      "Quantum averages and dispersions as moments of quadratic functionals "
      "of a complex Gaussian field with covariance rho + I.";

  // Translators run most-recently-registered first, so the derived exception
  // is registered after its base.
  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ConfigInvalid>(m, "ConfigInvalid", PyExc_ValueError);

  py::class_<ComplexMatrix>(m, "ComplexMatrix")
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_property_readonly("dim", &ComplexMatrix::dim)
      .def_property_readonly("matrix", &ComplexMatrix::matrix);

  py::class_<HermitianOperator>(m, "HermitianOperator")
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_property_readonly("dim", &HermitianOperator::dim)
      .def_property_readonly("matrix", &HermitianOperator::matrix);

  py::class_<AntiHermitianOperator>(m, "AntiHermitianOperator")
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_property_readonly("dim", &AntiHermitianOperator::dim)
      .def_property_readonly("matrix", &AntiHermitianOperator::matrix);

  py::class_<PureState>(m, "PureState")
      .def(py::init<Vector>(), py::arg("vector"))
      .def_property_readonly("dim", &PureState::dim)
      .def_property_readonly("vector", &PureState::vector);

  py::class_<DensityOperator>(m, "DensityOperator")
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_property_readonly("dim", &DensityOperator::dim)
      .def_property_readonly("matrix", &DensityOperator::matrix);

  py::class_<CovarianceOperator>(m, "CovarianceOperator")
      .def(py::init<Matrix>(), py::arg("matrix"))
      .def_property_readonly("dim", &CovarianceOperator::dim)
      .def_property_readonly("matrix", &CovarianceOperator::matrix);

  py::class_<CovarianceFactor>(m, "CovarianceFactor")
      .def_property_readonly("dim", &CovarianceFactor::dim)
      .def_property_readonly("factor", &CovarianceFactor::factor);

  py::class_<TraceSquarePair>(m, "TraceSquarePair")
      .def_readonly("direct", &TraceSquarePair::direct)
      .def_readonly("closed_form", &TraceSquarePair::closed_form);

  py::class_<DispersionReport>(m, "DispersionReport")
      .def_readonly("classical_dispersion", &DispersionReport::classical_dispersion)
      .def_readonly("quantum_dispersion", &DispersionReport::quantum_dispersion)
      .def_readonly("vacuum_dispersion", &DispersionReport::vacuum_dispersion)
      .def_readonly("regularized_dispersion",
                    &DispersionReport::regularized_dispersion)
      .def_readonly("qm_mean", &DispersionReport::qm_mean);

  py::class_<AuditRecord>(m, "AuditRecord")
      .def_readonly("lhs", &AuditRecord::lhs)
      .def_readonly("rhs", &AuditRecord::rhs)
      .def_readonly("margin", &AuditRecord::margin)
      .def_readonly("commutator_trace", &AuditRecord::commutator_trace)
      .def_readonly("passed", &AuditRecord::passed);

  py::class_<EstimatorSummary>(m, "EstimatorSummary")
      .def_readonly("mean", &EstimatorSummary::mean)
      .def_readonly("variance", &EstimatorSummary::variance)
      .def_readonly("std_error_mean", &EstimatorSummary::std_error_mean)
      .def_readonly("std_error_variance", &EstimatorSummary::std_error_variance)
      .def_readonly("count", &EstimatorSummary::count);

  py::class_<ComparisonRecord>(m, "ComparisonRecord")
      .def_readonly("analytic", &ComparisonRecord::analytic)
      .def_readonly("empirical", &ComparisonRecord::empirical)
      .def_readonly("z_score", &ComparisonRecord::z_score)
      .def_readonly("passed", &ComparisonRecord::passed);

  m.def("make_hermitian", &make_hermitian, py::arg("matrix"));
  m.def("pure_state_density", &pure_state_density, py::arg("psi"));
  m.def("expectation",
        py::overload_cast<const HermitianOperator&, const DensityOperator&>(
            &expectation),
        py::arg("a"), py::arg("rho"));
  m.def("expectation",
        py::overload_cast<const HermitianOperator&, const PureState&>(
            &expectation),
        py::arg("a"), py::arg("psi"));
  m.def("quantum_dispersion", &quantum_dispersion, py::arg("a"), py::arg("psi"));
  m.def("commutator", &commutator, py::arg("a1"), py::arg("a2"));
  m.def("shift_observable", &shift_observable, py::arg("a"), py::arg("psi"));
  m.def("random_hermitian", &random_hermitian, py::arg("dim"), py::arg("seed"),
        py::arg("scale") = 1.0);
  m.def("random_pure_state", &random_pure_state, py::arg("dim"),
        py::arg("seed"));

  m.def("covariance_for_state", &covariance_for_state, py::arg("rho"));
  m.def("white_noise_covariance", &white_noise_covariance, py::arg("dim"));
  m.def("factorize", &factorize, py::arg("d"));
  m.def(
      "sample_field",
      [](const CovarianceFactor& factor, std::uint64_t base_seed,
         std::uint64_t substream) {
        return sample(factor, SampleStream{base_seed, substream}).phi;
      },
      py::arg("factor"), py::arg("base_seed"), py::arg("substream") = 0,
      "One field realization phi = L z; deterministic in (base_seed, "
      "substream).");
  m.def(
      "quadratic_functional",
      [](const ComplexMatrix& a, const Vector& phi) {
        return quadratic_functional(a, FieldSample{phi});
      },
      py::arg("a"), py::arg("phi"));

  m.def("prequantum_average", &prequantum_average, py::arg("a"), py::arg("d"));
  m.def("vacuum_subtracted_average", &vacuum_subtracted_average, py::arg("a"),
        py::arg("rho"));
  m.def("lifted_trace_square", &lifted_trace_square, py::arg("a"),
        py::arg("psi"));
  m.def("second_moment", &second_moment, py::arg("a1"), py::arg("a2"),
        py::arg("d"));
  m.def("second_moment_by_pairings", &second_moment_by_pairings,
        py::arg("a1"), py::arg("a2"), py::arg("d"));
  m.def("classical_dispersion_report", &classical_dispersion_report,
        py::arg("a"), py::arg("psi"));
  m.def("white_noise_dispersion", &white_noise_dispersion, py::arg("a"));
  m.def("regularized_dispersion", &regularized_dispersion, py::arg("a"),
        py::arg("psi"));
  m.def("robertson_bound", &robertson_bound, py::arg("a1"), py::arg("a2"),
        py::arg("psi"));
  m.def("classical_robertson_audit", &classical_robertson_audit,
        py::arg("a1"), py::arg("a2"), py::arg("psi"));

  m.def(
      "estimate_moments",
      [](const ComplexMatrix& a, const CovarianceFactor& factor,
         std::uint64_t samples, std::uint64_t seed, unsigned workers,
         double z_threshold) {
        return estimate_moments(
            a, factor, make_estimator_config(samples, seed, workers, z_threshold));
      },
      py::arg("a"), py::arg("factor"), py::arg("samples"), py::arg("seed") = 0,
      py::arg("workers") = 1, py::arg("z_threshold") = 4.0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "estimate_cross_moment",
      [](const HermitianOperator& a1, const HermitianOperator& a2,
         const CovarianceFactor& factor, std::uint64_t samples,
         std::uint64_t seed, unsigned workers, double z_threshold) {
        return estimate_cross_moment(
            a1, a2, factor,
            make_estimator_config(samples, seed, workers, z_threshold));
      },
      py::arg("a1"), py::arg("a2"), py::arg("factor"), py::arg("samples"),
      py::arg("seed") = 0, py::arg("workers") = 1, py::arg("z_threshold") = 4.0,
      py::call_guard<py::gil_scoped_release>());
  m.def("compare", &compare, py::arg("analytic"), py::arg("empirical"),
        py::arg("std_error"), py::arg("z_threshold") = 4.0);

  m.def(
      "run_suite_json",
      [](const std::string& kind, int dim, int trials, std::uint64_t samples,
         std::uint64_t seed, double z_threshold, unsigned workers,
         double scale, const std::string& output_path) {
        ExperimentConfig cfg;
        cfg.kind = suite_kind_from_string(kind);
        cfg.dim = dim;
        cfg.trials = trials;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.z_threshold = z_threshold;
        cfg.workers = workers;
        cfg.scale = scale;
        cfg.output_path = output_path;
        const RunReport report = run_suite(cfg);
        return std::make_tuple(report_to_string(report), report.passed_count,
                               report.failed_count);
      },
      py::arg("kind"), py::arg("dim") = 2, py::arg("trials") = 1,
      py::arg("samples") = 0, py::arg("seed") = 0, py::arg("z_threshold") = 4.0,
      py::arg("workers") = 1, py::arg("scale") = 1.0,
      py::arg("output_path") = "",
      py::call_guard<py::gil_scoped_release>(),
      "Run a checking suite; returns (report_json, passed_count, "
      "failed_count).");

  m.attr("REPORT_SCHEMA_VERSION") = kReportSchemaVersion;
}
