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

#include "pcsft/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <utility>

#include "pcsft/correspondence.hpp"
#include "pcsft/errors.hpp"
#include "pcsft/gaussian_field.hpp"
#include "pcsft/hilbert.hpp"
#include "pcsft/montecarlo.hpp"
#include "pcsft/numeric.hpp"
#include "pcsft/rng.hpp"

namespace pcsft {

namespace {

using Clock = std::chrono::steady_clock;
using Json = nlohmann::ordered_json;

// Suite-level domain separation: each trial owns a derived seed, and every
// draw or estimator run inside the trial gets its own purpose index.
constexpr std::uint64_t kSaltTrial = 0x7063736674747269ULL;  // "pcsfttri"
constexpr std::uint64_t kPurposeOperatorA = 1;
constexpr std::uint64_t kPurposeOperatorB = 2;
constexpr std::uint64_t kPurposeState = 3;
constexpr std::uint64_t kPurposeMomentsLifted = 4;
constexpr std::uint64_t kPurposeCrossLifted = 5;
constexpr std::uint64_t kPurposeMomentsWhite = 6;
constexpr std::uint64_t kPurposeCrossWhite = 7;

std::uint64_t trial_seed(const ExperimentConfig& cfg, int trial) {
  return derive_seed(cfg.seed, kSaltTrial + static_cast<std::uint64_t>(trial));
}

void validate_config(const ExperimentConfig& cfg, SuiteKind expected) {
  if (cfg.kind != expected) {
    throw ConfigInvalid(std::string("suite runner called with kind '") +
                        to_string(cfg.kind) + "', expected '" +
                        to_string(expected) + "'");
  }
  if (cfg.dim < 1 || cfg.dim > 512) {
    throw ConfigInvalid("dim must lie in [1, 512], got " +
                        std::to_string(cfg.dim));
  }
  if (cfg.trials < 1) {
    throw ConfigInvalid("trials must be >= 1, got " +
                        std::to_string(cfg.trials));
  }
  if (!(cfg.scale >= 0.0)) {
    throw ConfigInvalid("scale must be >= 0");
  }
  if (cfg.kind == SuiteKind::kEstimate) {
    if (cfg.samples < 2) {
      throw ConfigInvalid("estimate requires samples >= 2, got " +
                          std::to_string(cfg.samples));
    }
    if (!(cfg.z_threshold > 0.0)) {
      throw ConfigInvalid("z_threshold must be > 0");
    }
  }
}

// Workers and output path never influence report bytes, so they are omitted
// from the echo rather than carried as unstable fields.
Json config_echo(const ExperimentConfig& cfg) {
  Json echo;
  echo["kind"] = to_string(cfg.kind);
  echo["dim"] = cfg.dim;
  echo["trials"] = cfg.trials;
  if (cfg.kind == SuiteKind::kEstimate) {
    echo["samples"] = cfg.samples;
  }
  echo["seed"] = cfg.seed;
  if (cfg.kind == SuiteKind::kEstimate) {
    echo["z_threshold"] = cfg.z_threshold;
  }
  echo["scale"] = cfg.scale;
  return echo;
}

Json residual_check(const char* name, double lhs, double rhs) {
  Json check;
  check["name"] = name;
  check["lhs"] = lhs;
  check["rhs"] = rhs;
  check["abs_residual"] = std::abs(lhs - rhs);
  check["passed"] = approx_equal(lhs, rhs);
  return check;
}

Json comparison_entry(const char* name, const ComparisonRecord& record,
                      double std_error) {
  Json entry;
  entry["name"] = name;
  entry["analytic"] = record.analytic;
  entry["empirical"] = record.empirical;
  entry["std_error"] = std_error;
  entry["z_score"] = record.z_score;
  entry["passed"] = record.passed;
  return entry;
}

void tally(RunReport& report, bool passed) {
  if (passed) {
    ++report.passed_count;
  } else {
    ++report.failed_count;
  }
}

void finalize(RunReport& report, const ExperimentConfig& cfg,
              Json trial_records, Json aggregate, Clock::time_point start) {
  aggregate["passed_count"] = report.passed_count;
  aggregate["failed_count"] = report.failed_count;
  report.doc["trial_records"] = std::move(trial_records);
  report.doc["aggregate"] = std::move(aggregate);
  report.doc["wall_time_seconds"] =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (!cfg.output_path.empty()) {
    write_report(report, cfg.output_path);
  }
}

}  // namespace

const char* to_string(SuiteKind kind) {
  switch (kind) {
    case SuiteKind::kIdentity:
      return "identity";
    case SuiteKind::kEstimate:
      return "estimate";
    case SuiteKind::kRobertsonAudit:
      return "robertson-audit";
  }
  return "unknown";
}

SuiteKind suite_kind_from_string(const std::string& name) {
  if (name == "identity") return SuiteKind::kIdentity;
  if (name == "estimate") return SuiteKind::kEstimate;
  if (name == "robertson-audit") return SuiteKind::kRobertsonAudit;
  throw ConfigInvalid("unknown suite kind '" + name +
                      "'; expected identity, estimate, or robertson-audit");
}

RunReport run_identity_suite(const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  validate_config(cfg, SuiteKind::kIdentity);

  RunReport report;
  report.doc["schema_version"] = kReportSchemaVersion;
  report.doc["config"] = config_echo(cfg);

  double max_abs_residual = 0.0;
  Json trial_records = Json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t ts = trial_seed(cfg, t);
    const HermitianOperator a =
        random_hermitian(cfg.dim, derive_seed(ts, kPurposeOperatorA), cfg.scale);
    const HermitianOperator b =
        random_hermitian(cfg.dim, derive_seed(ts, kPurposeOperatorB), cfg.scale);
    const PureState psi = random_pure_state(cfg.dim, derive_seed(ts, kPurposeState));
    const DensityOperator rho = pure_state_density(psi);
    const CovarianceOperator lifted = covariance_for_state(rho);

    Json checks = Json::array();

    const TraceSquarePair pair = lifted_trace_square(a, psi);
    checks.push_back(
        residual_check("lifted_trace_square", pair.direct, pair.closed_form));

    checks.push_back(residual_check("vacuum_subtraction",
                                    vacuum_subtracted_average(a, rho),
                                    expectation(a, psi)));

    const DispersionReport dispersion = classical_dispersion_report(a, psi);
    const double mean_field = real_part_checked(
        prequantum_average(a.as_complex_matrix(), lifted), "E f_A");
    const double via_moments =
        second_moment(a, a, lifted) - mean_field * mean_field;
    checks.push_back(residual_check("dispersion_two_route",
                                    dispersion.classical_dispersion,
                                    via_moments));

    const double trace_formula = second_moment(a, b, lifted);
    const Complex pairing_oracle = second_moment_by_pairings(
        a.as_complex_matrix(), b.as_complex_matrix(), lifted);
    Json pairing_check;
    pairing_check["name"] = "second_moment_pairings";
    pairing_check["lhs"] = trace_formula;
    pairing_check["rhs"] = pairing_oracle.real();
    const double residual = std::abs(Complex(trace_formula) - pairing_oracle);
    pairing_check["abs_residual"] = residual;
    pairing_check["passed"] =
        residual <= std::max(kDefaultRtol * std::max(std::abs(trace_formula),
                                                     std::abs(pairing_oracle)),
                             kDefaultAtol);
    checks.push_back(std::move(pairing_check));

    for (const Json& check : checks) {
      tally(report, check.at("passed").get<bool>());
      max_abs_residual =
          std::max(max_abs_residual, check.at("abs_residual").get<double>());
    }
    Json record;
    record["trial"] = t;
    record["checks"] = std::move(checks);
    trial_records.push_back(std::move(record));
  }

  Json aggregate;
  aggregate["checks_per_trial"] = 4;
  aggregate["max_abs_residual"] = max_abs_residual;
  finalize(report, cfg, std::move(trial_records), std::move(aggregate), start);
  return report;
}

RunReport run_estimate_suite(const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  validate_config(cfg, SuiteKind::kEstimate);

  RunReport report;
  report.doc["schema_version"] = kReportSchemaVersion;
  report.doc["config"] = config_echo(cfg);

  double max_abs_z = 0.0;
  Json trial_records = Json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t ts = trial_seed(cfg, t);
    const HermitianOperator a =
        random_hermitian(cfg.dim, derive_seed(ts, kPurposeOperatorA), cfg.scale);
    const PureState psi = random_pure_state(cfg.dim, derive_seed(ts, kPurposeState));
    const CovarianceOperator lifted =
        covariance_for_state(pure_state_density(psi));
    const CovarianceOperator white = white_noise_covariance(cfg.dim);
    const CovarianceFactor lifted_factor = factorize(lifted);
    const CovarianceFactor white_factor = factorize(white);

    const double mean_lifted = real_part_checked(
        prequantum_average(a.as_complex_matrix(), lifted), "E f_A lifted");
    const double mean_white = real_part_checked(
        prequantum_average(a.as_complex_matrix(), white), "E f_A white");
    const DispersionReport dispersion = classical_dispersion_report(a, psi);

    auto estimator_config = [&cfg, ts](std::uint64_t purpose) {
      EstimatorConfig ecfg;
      ecfg.sample_count = cfg.samples;
      ecfg.base_seed = derive_seed(ts, purpose);
      ecfg.worker_hint = cfg.workers;
      ecfg.z_threshold = cfg.z_threshold;
      return ecfg;
    };
    const EstimatorSummary lifted_moments = estimate_moments(
        a.as_complex_matrix(), lifted_factor, estimator_config(kPurposeMomentsLifted));
    const EstimatorSummary lifted_cross = estimate_cross_moment(
        a, a, lifted_factor, estimator_config(kPurposeCrossLifted));
    const EstimatorSummary white_moments = estimate_moments(
        a.as_complex_matrix(), white_factor, estimator_config(kPurposeMomentsWhite));
    const EstimatorSummary white_cross = estimate_cross_moment(
        a, a, white_factor, estimator_config(kPurposeCrossWhite));

    struct Entry {
      const char* name;
      double analytic;
      double empirical;
      double std_error;
    };
    const Entry entries[] = {
        {"mean_lifted", mean_lifted, lifted_moments.mean.real(),
         lifted_moments.std_error_mean},
        {"second_moment_lifted", second_moment(a, a, lifted),
         lifted_cross.mean.real(), lifted_cross.std_error_mean},
        {"variance_lifted", dispersion.classical_dispersion,
         lifted_moments.variance, lifted_moments.std_error_variance},
        {"mean_white", mean_white, white_moments.mean.real(),
         white_moments.std_error_mean},
        {"second_moment_white", second_moment(a, a, white),
         white_cross.mean.real(), white_cross.std_error_mean},
        {"variance_white", dispersion.vacuum_dispersion, white_moments.variance,
         white_moments.std_error_variance},
    };

    Json comparisons = Json::array();
    for (const Entry& entry : entries) {
      const ComparisonRecord record = compare(
          entry.analytic, entry.empirical, entry.std_error, cfg.z_threshold);
      tally(report, record.passed);
      max_abs_z = std::max(max_abs_z, std::abs(record.z_score));
      comparisons.push_back(comparison_entry(entry.name, record, entry.std_error));
    }
    Json record;
    record["trial"] = t;
    record["comparisons"] = std::move(comparisons);
    trial_records.push_back(std::move(record));
  }

  Json aggregate;
  aggregate["checks_per_trial"] = 6;
  aggregate["max_abs_z"] = max_abs_z;
  finalize(report, cfg, std::move(trial_records), std::move(aggregate), start);
  return report;
}

RunReport run_robertson_audit(const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  validate_config(cfg, SuiteKind::kRobertsonAudit);

  RunReport report;
  report.doc["schema_version"] = kReportSchemaVersion;
  report.doc["config"] = config_echo(cfg);

  double min_margin = std::numeric_limits<double>::infinity();
  Json trial_records = Json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    const bool pauli_case = cfg.dim == 2 && t == 0;
    Json record;
    record["trial"] = t;
    record["source"] = pauli_case ? "pauli-xy" : "random";

    AuditRecord audit;
    if (pauli_case) {
      Matrix sigma_x(2, 2);
      sigma_x << 0.0, 1.0, 1.0, 0.0;
      Matrix sigma_y(2, 2);
      sigma_y << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      Vector e0(2);
      e0 << 1.0, 0.0;
      audit = classical_robertson_audit(HermitianOperator(sigma_x),
                                        HermitianOperator(sigma_y),
                                        PureState(e0));
    } else {
      const std::uint64_t ts = trial_seed(cfg, t);
      const HermitianOperator a1 = random_hermitian(
          cfg.dim, derive_seed(ts, kPurposeOperatorA), cfg.scale);
      const HermitianOperator a2 = random_hermitian(
          cfg.dim, derive_seed(ts, kPurposeOperatorB), cfg.scale);
      const PureState psi =
          random_pure_state(cfg.dim, derive_seed(ts, kPurposeState));
      audit = classical_robertson_audit(a1, a2, psi);
    }

    record["lhs"] = audit.lhs;
    record["rhs"] = audit.rhs;
    record["margin"] = audit.margin;
    record["commutator_trace_abs"] = std::abs(audit.commutator_trace);
    record["passed"] = audit.passed;
    tally(report, audit.passed);
    min_margin = std::min(min_margin, audit.margin);
    trial_records.push_back(std::move(record));
  }

  Json aggregate;
  aggregate["checks_per_trial"] = 1;
  aggregate["min_margin"] = min_margin;
  finalize(report, cfg, std::move(trial_records), std::move(aggregate), start);
  return report;
}

RunReport run_suite(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case SuiteKind::kIdentity:
      return run_identity_suite(cfg);
    case SuiteKind::kEstimate:
      return run_estimate_suite(cfg);
    case SuiteKind::kRobertsonAudit:
      return run_robertson_audit(cfg);
  }
  throw ConfigInvalid("unknown suite kind");
}

namespace {

// Serializer with a stable byte-level contract: insertion-order keys,
// two-space indent, %.17g floats (%.6f for wall_time_seconds, the one field
// determinism comparisons strip). Non-finite numbers serialize as null.
void append_double(std::string& out, double value, const char* format) {
  if (!std::isfinite(value)) {
    out += "null";
    return;
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  out += buffer;
}

void append_escaped(std::string& out, const std::string& text) {
  out += '"';
  for (const char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\b':
        out += "\\b";
        break;
      case '\f':
        out += "\\f";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof(buffer), "\\u%04x",
                        static_cast<unsigned>(static_cast<unsigned char>(c)));
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_value(std::string& out, const Json& value, int depth,
                  const char* float_format) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (value.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += value.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(value.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(value.get<std::uint64_t>());
      break;
    case Json::value_t::number_float:
      append_double(out, value.get<double>(), float_format);
      break;
    case Json::value_t::string:
      append_escaped(out, value.get<std::string>());
      break;
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      bool first = true;
      for (const Json& item : value) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        append_value(out, item, depth + 1, "%.17g");
      }
      out += '\n';
      out += indent;
      out += ']';
      break;
    }
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (const auto& item : value.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        append_escaped(out, item.key());
        out += ": ";
        const char* item_format =
            item.key() == "wall_time_seconds" ? "%.6f" : "%.17g";
        append_value(out, item.value(), depth + 1, item_format);
      }
      out += '\n';
      out += indent;
      out += '}';
      break;
    }
    default:
      out += "null";
      break;
  }
}

}  // namespace

std::string report_to_string(const RunReport& report) {
  std::string out;
  append_value(out, report.doc, 0, "%.17g");
  out += '\n';
  return out;
}

void write_report(const RunReport& report, const std::string& path) {
  std::ofstream stream(path, std::ios::binary | std::ios::trunc);
  if (!stream) {
    throw OutputUnwritable("cannot open '" + path + "' for writing");
  }
  stream << report_to_string(report);
  stream.flush();
  if (!stream.good()) {
    throw OutputUnwritable("failed writing report to '" + path + "'");
  }
}

}  // namespace pcsft
