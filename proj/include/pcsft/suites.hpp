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
#include <string>

#include <json.hpp>

namespace pcsft {

// Experiment harness behind the CLI and the Python bindings: run a suite of
// checks over a random ensemble and produce a machine-readable report.

inline constexpr const char* kReportSchemaVersion = "pcsft-report/1";

enum class SuiteKind { kIdentity, kEstimate, kRobertsonAudit };

const char* to_string(SuiteKind kind);

/// Parses "identity" / "estimate" / "robertson-audit"; throws ConfigInvalid.
SuiteKind suite_kind_from_string(const std::string& name);

struct ExperimentConfig {
  SuiteKind kind = SuiteKind::kIdentity;
  int dim = 2;                 // in [1, 512]
  int trials = 1;              // >= 1
  std::uint64_t samples = 0;   // estimate only, >= 2
  std::uint64_t seed = 0;
  double z_threshold = 4.0;    // estimate only, > 0
  unsigned workers = 1;        // advisory; excluded from the report echo
  double scale = 1.0;          // Hermitian ensemble scale; fixed 1.0 in the CLI
  std::string output_path;     // empty: caller handles serialization
};

struct RunReport {
  nlohmann::ordered_json doc;
  int passed_count = 0;
  int failed_count = 0;

  bool all_passed() const { return failed_count == 0; }
};

/// Evaluates the analytic identities both ways per trial (lifted trace
/// square, vacuum subtraction, dispersion two-route, second moment vs the
/// pairing expansion) and records absolute residuals. A check passes when the
/// residual is within 1e-10 relative with a 1e-12 absolute floor.
RunReport run_identity_suite(const ExperimentConfig& cfg);

/// Monte Carlo estimates of the mean, second moment, and dispersion of f_A
/// under both the lifted covariance and white noise, each compared with its
/// trace formula by z-score.
RunReport run_estimate_suite(const ExperimentConfig& cfg);

/// classical_robertson_audit over a random ensemble; at dim 2, trial 0 is the
/// Pauli (x, y) equality case.
RunReport run_robertson_audit(const ExperimentConfig& cfg);

/// Dispatch on cfg.kind.
RunReport run_suite(const ExperimentConfig& cfg);

/// Deterministic serialization: two-space indent, keys in insertion order,
/// floating-point numbers with 17 significant digits.
std::string report_to_string(const RunReport& report);

/// Serializes to cfg.output_path; throws OutputUnwritable.
void write_report(const RunReport& report, const std::string& path);

}  // namespace pcsft
