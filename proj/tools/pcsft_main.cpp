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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcsft/errors.hpp"
#include "pcsft/suites.hpp"

namespace {

// Exit contract: 0 all checks passed, 1 any check failed, 2 bad config or IO.
constexpr int kExitChecksFailed = 1;
constexpr int kExitConfigOrIo = 2;

nlohmann::json load_config_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw pcsft::ConfigInvalid("cannot read config file '" + path + "'");
  }
  try {
    return nlohmann::json::parse(stream);
  } catch (const nlohmann::json::parse_error& e) {
    throw pcsft::ConfigInvalid("config file '" + path +
                               "' is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Workbench for the field representation of quantum averages: analytic "
      "identities, Monte Carlo estimates, and the classical uncertainty "
      "audit."};
  app.name("pcsft");
  app.set_version_flag("--version", "pcsft 0.1.0");

  std::string config_path;
  std::string kind_name;
  int dim = 2;
  int trials = 1;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double z_threshold = 4.0;
  unsigned workers = 1;
  std::string out_path;

  app.add_option("--config", config_path,
                 "JSON config file; flags override its fields");
  app.add_option("--kind", kind_name,
                 "Suite kind: identity, estimate, robertson-audit");
  app.add_option("--dim", dim, "Hilbert space dimension in [1, 512]");
  app.add_option("--trials", trials, "Number of random trials");
  app.add_option("--samples", samples,
                 "Monte Carlo samples per estimator (estimate only)");
  app.add_option("--seed", seed, "Base seed for all draws");
  app.add_option("--z-threshold", z_threshold,
                 "Pass threshold on |z| (estimate only)");
  app.add_option("--workers", workers,
                 "Advisory worker threads; never changes report values");
  app.add_option("--out", out_path,
                 "Report path; '-' writes the report to stdout");

  CLI::App* sub_identity = app.add_subcommand(
      "identity", "Check the analytic identities on a random ensemble");
  CLI::App* sub_estimate = app.add_subcommand(
      "estimate", "Compare Monte Carlo field moments with the trace formulas");
  CLI::App* sub_audit = app.add_subcommand(
      "robertson-audit", "Audit the classical uncertainty inequality");
  for (CLI::App* sub : {sub_identity, sub_estimate, sub_audit}) {
    sub->fallthrough();
  }
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigOrIo;
  }

  try {
    nlohmann::json file;
    const bool has_file = app.count("--config") > 0;
    if (has_file) file = load_config_file(config_path);
    const auto file_has = [&](const char* key) {
      return has_file && file.contains(key);
    };

    pcsft::ExperimentConfig cfg;

    std::string resolved_kind;
    if (sub_identity->parsed()) {
      resolved_kind = "identity";
    } else if (sub_estimate->parsed()) {
      resolved_kind = "estimate";
    } else if (sub_audit->parsed()) {
      resolved_kind = "robertson-audit";
    } else if (app.count("--kind") > 0) {
      resolved_kind = kind_name;
    } else if (file_has("kind")) {
      resolved_kind = file.at("kind").get<std::string>();
    } else {
      throw pcsft::ConfigInvalid(
          "no suite kind selected; use a subcommand, --kind, or a config "
          "file");
    }
    cfg.kind = pcsft::suite_kind_from_string(resolved_kind);

    const auto resolve = [&](const char* flag, const char* key, auto flag_value,
                             auto fallback) {
      if (app.count(flag) > 0) return flag_value;
      if (file_has(key)) {
        return file.at(key).template get<decltype(fallback)>();
      }
      return fallback;
    };
    cfg.dim = resolve("--dim", "dim", dim, cfg.dim);
    cfg.trials = resolve("--trials", "trials", trials, cfg.trials);
    cfg.samples = resolve("--samples", "samples", samples, cfg.samples);
    cfg.seed = resolve("--seed", "seed", seed, cfg.seed);
    cfg.z_threshold =
        resolve("--z-threshold", "z_threshold", z_threshold, cfg.z_threshold);
    cfg.workers = resolve("--workers", "workers", workers, cfg.workers);
    if (file_has("scale")) cfg.scale = file.at("scale").get<double>();

    std::string resolved_out = out_path;
    if (app.count("--out") == 0 && file_has("out")) {
      resolved_out = file.at("out").get<std::string>();
    }
    if (resolved_out.empty()) {
      throw pcsft::ConfigInvalid("--out is required; use '-' for stdout");
    }
    const bool to_stdout = resolved_out == "-";
    if (!to_stdout) cfg.output_path = resolved_out;

    const pcsft::RunReport report = pcsft::run_suite(cfg);
    if (to_stdout) {
      std::cout << pcsft::report_to_string(report);
    } else {
      std::cout << resolved_kind << ": " << report.passed_count << " passed, "
                << report.failed_count << " failed -> " << resolved_out
                << '\n';
    }
    return report.all_passed() ? 0 : kExitChecksFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "pcsft: config error: " << e.what() << '\n';
    return kExitConfigOrIo;
  } catch (const pcsft::Error& e) {
    std::cerr << "pcsft: " << e.what() << '\n';
    return kExitConfigOrIo;
  } catch (const std::exception& e) {
    std::cerr << "pcsft: internal error: " << e.what() << '\n';
    return kExitConfigOrIo;
  }
}
