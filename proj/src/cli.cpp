// Copyright 2026 The rfient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rfient/cli.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rfient/analysis.hpp"
#include "rfient/montecarlo.hpp"
#include "rfient/serialize.hpp"
#include "rfient/verify.hpp"

namespace rfient {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  double fidelity = 0.91;
  int rotations = 10;
  std::int64_t samples = 100000;
  std::string out;
  std::string format = "json";
  double z = 3.0;
  int mercator_depth = 3;
  std::string ensemble = "ginibre";
  std::string input;
  bool text = false;
};

void apply_thread_cap() {
  const char* env = std::getenv("RFI_ENT_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw ConfigError("RFI_ENT_THREADS must be a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << content;
  if (!f) throw ConfigError("cannot write " + path.string());
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

CountFormat count_format(const std::string& name) {
  if (name == "json") return CountFormat::kJson;
  if (name == "csv") return CountFormat::kCsv;
  throw ConfigError("--format must be json or csv");
}

AnalysisOptions analysis_options(const RunConfig& c) {
  AnalysisOptions o;
  o.z = c.z;
  o.mercator_depth = c.mercator_depth;
  return o;
}

void check_common(const RunConfig& c) {
  if (!(c.z > 0)) throw ConfigError("--z-threshold must be positive");
  if (c.mercator_depth < 1 || c.mercator_depth + 1 > kMaxMomentOrder)
    throw ConfigError("--mercator-depth must be in 1.." + std::to_string(kMaxMomentOrder - 1));
}

std::string summary_line(int rotation, const AnalysisReport& r) {
  const auto& q = r.rfi;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%3d  %8.4f %7.4f  %7.4f %7.4f %7.4f %7.4f  [%6.4f, %6.4f]  %s\n", rotation,
                q.q2.value, q.q2.sigma, q.q2.value / kQ2Max, q.q3.value / kQ3Max,
                q.q4.value / kQ4Max, q.q5.value / kQ5Max, r.c_from_q2.lower.value,
                r.c_from_q2.upper.value,
                r.has_adaptive ? std::string(to_string(r.adaptive.verdict)).c_str() : "-");
  return buf;
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
  check_common(c);
  if (c.budget == 0) throw ConfigError("--budget must be positive");
  if (!(c.fidelity > 0.25 && c.fidelity <= 1.0)) throw ConfigError("--fidelity must be in (0.25, 1]");
  if (c.rotations < 1) throw ConfigError("--rotations must be positive");
  const CountFormat fmt = count_format(c.format);

  // Isotropic noise: F = (1 + 3p)/4.
  const DensityMatrix target = werner((4.0 * c.fidelity - 1.0) / 3.0);
  const std::uint64_t rot_seed = splitmix64(c.seed ^ 0x726f74ULL);
  const std::uint64_t count_seed = splitmix64(c.seed ^ 0x636e74ULL);
  const AnalysisOptions opts = analysis_options(c);

  const int n = c.rotations;
  std::vector<std::vector<CountRecord>> records(static_cast<std::size_t>(n));
  std::vector<AnalysisReport> reports(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < n; ++r) {
    const auto k = static_cast<std::size_t>(r);
    try {
      SourceModel model;
      model.target = target;
      Rng rng = make_stream(rot_seed, k);
      model.rotation = r == 0 ? LocalRotation::identity() : random_rotation(rng);
      model.pairs_per_setting = c.budget;
      model.seed = splitmix64(count_seed + k);
      records[k] = simulate_all(model);
      reports[k] = analyze(records[k], opts);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (c.out.empty()) {
    Json doc;
    doc["fidelity"] = c.fidelity;
    doc["budget"] = c.budget;
    doc["seed"] = c.seed;
    doc["rotations"] = Json::array();
    for (int r = 0; r < n; ++r) {
      const auto k = static_cast<std::size_t>(r);
      Json counts = Json::parse(records_to_json(records[k]));
      doc["rotations"].push_back(
          {{"rotation", r + 1}, {"counts", counts}, {"report", to_json(reports[k])}});
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }

  std::filesystem::path dir(c.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create " + dir.string() + ": " + ec.message());
  const std::string ext = fmt == CountFormat::kJson ? ".json" : ".csv";
  std::string summary =
      "rot        Q2   sigma     Q2/3    Q3/1    Q4/6    Q5/3  C from Q2         adaptive\n";
  for (int r = 0; r < n; ++r) {
    const auto k = static_cast<std::size_t>(r);
    char stem[32];
    std::snprintf(stem, sizeof stem, "rot%02d", r + 1);
    write_file(dir / (std::string("counts_") + stem + ext), write_records(records[k], fmt));
    write_file(dir / (std::string("report_") + stem + ".json"), to_json(reports[k]).dump(2) + "\n");
    summary += summary_line(r + 1, reports[k]);
  }
  write_file(dir / "summary.txt", summary);
  out << summary;
  return kExitOk;
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  check_common(c);
  CountFormat fmt;
  if (!c.format.empty()) {
    fmt = count_format(c.format);
  } else {
    fmt = std::filesystem::path(c.input).extension() == ".csv" ? CountFormat::kCsv
                                                               : CountFormat::kJson;
  }
  const std::string text = read_file(c.input);
  const auto records = read_records(text, fmt);
  const AnalysisReport report = analyze(records, analysis_options(c));
  std::string body;
  if (c.text) {
    body = "Q2 = " + std::to_string(report.rfi.q2.value) + " +/- " +
           std::to_string(report.rfi.q2.sigma) + "\n" + format_comparison(report.tomography);
  } else {
    body = to_json(report).dump(2) + "\n";
  }
  if (c.out.empty())
    out << body;
  else
    write_file(c.out, body);
  return kExitOk;
}

int cmd_montecarlo(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.samples <= 0) throw ConfigError("--samples must be positive");
  const auto ens = parse_ensemble(c.ensemble);
  if (!ens) throw ConfigError("unknown ensemble " + c.ensemble);
  const CountFormat fmt = count_format(c.format.empty() ? "csv" : c.format);

  const auto rows = scatter(*ens, c.seed, static_cast<std::uint64_t>(c.samples));
  const BoundTally tally = tally_bounds(rows);

  Json summary;
  summary["ensemble"] = c.ensemble;
  summary["seed"] = c.seed;
  summary["bounds"] = to_json(tally);
  std::array<std::uint64_t, kPurityBands> bands{};
  for (const auto& r : rows) ++bands[static_cast<std::size_t>(r.band)];
  Json band_json;
  for (int b = 0; b < kPurityBands; ++b)
    band_json[std::string(purity_band_label(b))] = bands[static_cast<std::size_t>(b)];
  summary["purity_bands"] = band_json;
  if (*ens == Ensemble::kPure) {
    double worst = 0.0;
    for (const auto& r : rows)
      worst = std::max(worst, std::abs(r.q2 - 1.0 - 2.0 * r.concurrence * r.concurrence));
    summary["pure_curve_max_residual"] = worst;
  }

  const std::string data =
      fmt == CountFormat::kCsv ? scatter_to_csv(rows) : scatter_to_json(rows).dump(2) + "\n";
  if (c.out.empty()) {
    out << data;
    err << summary.dump(2) << "\n";
  } else {
    write_file(c.out, data);
    out << summary.dump(2) << "\n";
  }
  return tally.lower_violations || tally.sandwich_violations ? kExitInvariant : kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.samples <= 0) throw ConfigError("--samples must be positive");
  VerifyOptions o;
  o.seed = c.seed;
  o.bound_samples = static_cast<std::uint64_t>(c.samples);
  const auto checks = run_all(o);
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& k : checks) arr.push_back(to_json(k));
    out << arr.dump(2) << "\n";
  } else {
    char buf[256];
    for (const auto& k : checks) {
      std::snprintf(buf, sizeof buf, "%s %-14s %-32s max_residual=%.3e tol=%.0e violations=%llu/%llu%s\n",
                    k.passed() ? "PASS" : "FAIL", k.suite.c_str(), k.name.c_str(), k.max_residual,
                    k.tolerance, static_cast<unsigned long long>(k.violations),
                    static_cast<unsigned long long>(k.samples), k.proven ? "" : " (unproven)");
      out << buf;
    }
  }
  return all_passed(checks) ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reference-frame-independent entanglement quantities for two qubits", "rfient"};
  app.require_subcommand(1);
  RunConfig c;

  auto* sim = app.add_subcommand("simulate", "Simulate counts for rotated noisy Bell states");
  auto* ana = app.add_subcommand("analyze", "Analyze a count file");
  auto* mc = app.add_subcommand("montecarlo", "Random-state scatter data and bound tallies");
  auto* ver = app.add_subcommand("verify", "Run the identity and bound suites");

  for (auto* s : {sim, ana, mc, ver}) s->add_option("--seed", c.seed, "RNG seed");
  for (auto* s : {sim, ana}) {
    s->add_option("--z-threshold", c.z, "Verdict threshold in sigmas");
    s->add_option("--mercator-depth", c.mercator_depth, "Series depth of the S1 lower bound");
  }
  sim->add_option("--budget", c.budget, "Pairs per setting");
  sim->add_option("--fidelity", c.fidelity, "Bell-state fidelity of the source");
  sim->add_option("--rotations", c.rotations, "Number of frames; the first is unrotated");
  sim->add_option("--out", c.out, "Output directory");
  sim->add_option("--format", c.format, "Count file format (json|csv)");

  ana->add_option("file", c.input, "Count file")->required();
  ana->add_option("--format", c.format, "Input format (json|csv); default from extension");
  ana->add_option("--out", c.out, "Write the report here instead of stdout");
  ana->add_flag("--text", c.text, "Print an aligned text table");

  mc->add_option("--samples", c.samples, "Number of random states");
  mc->add_option("--ensemble", c.ensemble, "ginibre|pure|product|separable");
  mc->add_option("--format", c.format, "Dataset format (csv|json)");
  mc->add_option("--out", c.out, "Dataset path");

  ver->add_option("--samples", c.samples, "Samples for the bound suite");
  ver->add_option("--format", c.format, "text|json");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    apply_thread_cap();
    if (sim->parsed()) return cmd_simulate(c, out);
    if (ana->parsed()) {
      if (ana->count("--format") == 0) c.format.clear();
      return cmd_analyze(c, out);
    }
    if (mc->parsed()) {
      if (mc->count("--format") == 0) c.format = "csv";
      return cmd_montecarlo(c, out, err);
    }
    if (ver->parsed()) {
      if (ver->count("--format") == 0) c.format = "text";
      return cmd_verify(c, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const RecordError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitConfig;
}

}  // namespace rfient
