// Copyright 2026 The adfilter Authors
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

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adfilter/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitIoError = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepCli {
  CLI::App* cmd = nullptr;
  double t1 = 0.8;
  int points = 40;
  double tmax = 1.2;
  std::string nbar_csv;
  int nmax = 12;
  std::string mode = "scale_zz_only";
  std::string povm = "circuit";
  std::uint64_t seed = 0;
  std::string out_path;
  std::string config_path;
  bool json = false;
};

void add_sweep_options(SweepCli& cli) {
  cli.cmd->add_option("--t1", cli.t1, "Relaxation time T1 in seconds");
  cli.cmd->add_option("--points", cli.points, "Number of t/T1 grid points");
  cli.cmd->add_option("--tmax", cli.tmax, "Largest t/T1 value");
  cli.cmd->add_option("--nbar", cli.nbar_csv,
                      "Comma-separated mean phonon numbers");
  cli.cmd->add_option("--nmax", cli.nmax, "Fock-space cutoff");
  cli.cmd->add_option("--mode", cli.mode,
                      "Scheme-B thermal scaling: scale_zz_only|scale_all");
  cli.cmd->add_option("--povm", cli.povm, "POVM convention: circuit|paper");
  cli.cmd->add_option("--seed", cli.seed, "RNG seed for sampling diagnostics");
  cli.cmd->add_option("--out", cli.out_path, "Output path (default: stdout)");
  cli.cmd->add_option("--config", cli.config_path,
                      "key=value config file; flags take precedence");
  cli.cmd->add_flag("--json", cli.json, "Emit JSON instead of CSV");
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) {
      throw std::invalid_argument("invalid number in list: '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty number list");
  return values;
}

adf::SchemeBMode parse_mode(const std::string& mode) {
  if (mode == "scale_zz_only") return adf::SchemeBMode::ScaleZzOnly;
  if (mode == "scale_all") return adf::SchemeBMode::ScaleAll;
  throw std::invalid_argument("unknown --mode '" + mode +
                              "' (expected scale_zz_only|scale_all)");
}

adf::PovmMode parse_povm(const std::string& povm) {
  if (povm == "circuit") return adf::PovmMode::CircuitDerived;
  if (povm == "paper") return adf::PovmMode::PovmPaper;
  throw std::invalid_argument("unknown --povm '" + povm +
                              "' (expected circuit|paper)");
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return adf::parse_key_value_file(in);
}

/// Command-line flags beat config-file values, which beat defaults.
adf::ExperimentConfig merge_config(const SweepCli& cli, adf::SchemeKind scheme) {
  const auto cfg = load_config_file(cli.config_path);
  const auto from_file = [&](const char* key) -> const std::string* {
    const auto it = cfg.find(key);
    return it == cfg.end() ? nullptr : &it->second;
  };
  const auto given = [&](const char* flag) { return cli.cmd->count(flag) > 0; };

  double t1 = cli.t1;
  if (!given("--t1")) {
    if (const auto* v = from_file("t1")) t1 = std::stod(*v);
  }
  int points = cli.points;
  if (!given("--points")) {
    if (const auto* v = from_file("points")) points = std::stoi(*v);
  }
  double tmax = cli.tmax;
  if (!given("--tmax")) {
    if (const auto* v = from_file("tmax")) tmax = std::stod(*v);
  }
  std::string nbar_csv = cli.nbar_csv;
  if (!given("--nbar")) {
    if (const auto* v = from_file("nbar")) nbar_csv = *v;
  }
  int nmax = cli.nmax;
  if (!given("--nmax")) {
    if (const auto* v = from_file("nmax")) nmax = std::stoi(*v);
  }
  std::string mode = cli.mode;
  if (!given("--mode")) {
    if (const auto* v = from_file("mode")) mode = *v;
  }
  std::string povm = cli.povm;
  if (!given("--povm")) {
    if (const auto* v = from_file("povm")) povm = *v;
  }
  std::uint64_t seed = cli.seed;
  if (!given("--seed")) {
    if (const auto* v = from_file("seed")) seed = std::stoull(*v);
  }
  std::string out_path = cli.out_path;
  if (!given("--out")) {
    if (const auto* v = from_file("out")) out_path = *v;
  }
  bool json = cli.json;
  if (!given("--json")) {
    if (const auto* v = from_file("json")) json = (*v == "1" || *v == "true");
  }

  if (points < 1) throw std::invalid_argument("--points must be >= 1");
  if (tmax <= 0.0) throw std::invalid_argument("--tmax must be > 0");

  adf::ExperimentConfig config;
  config.t1 = t1;
  config.t_over_t1_grid = adf::ExperimentConfig::default_grid(points, tmax);
  if (!nbar_csv.empty()) config.nbar_values = parse_double_list(nbar_csv);
  config.n_max = nmax;
  config.scheme = scheme;
  config.scheme_b_mode = parse_mode(mode);
  config.povm_mode = parse_povm(povm);
  config.seed = seed;
  config.output_path = out_path;
  config.json_output = json;
  config.finalize();
  return config;
}

void emit(const adf::ExperimentConfig& config,
          const std::vector<adf::SweepRecord>& records) {
  std::ostringstream body;
  if (config.json_output) {
    adf::write_json(body, records);
  } else {
    adf::write_csv(body, records);
  }
  if (config.output_path.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + config.output_path + "'");
  out << body.str();
  out.flush();
  if (!out) throw IoError("failed writing '" + config.output_path + "'");
}

int run_sweep(const SweepCli& cli, adf::SchemeKind scheme) {
  const adf::ExperimentConfig config = merge_config(cli, scheme);
  std::vector<adf::SweepRecord> records;
  switch (scheme) {
    case adf::SchemeKind::Ideal: records = adf::run_ideal(config); break;
    case adf::SchemeKind::A: records = adf::run_scheme_a_sweep(config); break;
    case adf::SchemeKind::B: records = adf::run_scheme_b_sweep(config); break;
  }
  emit(config, records);
  return kExitOk;
}

int run_bell_demo_cmd(const std::string& state, double p, const std::string& povm,
                      const std::string& out_path) {
  const adf::BellLabel label = adf::parse_bell_label(state);
  const adf::BellDemoReport report =
      adf::run_bell_demo(label, p, parse_povm(povm));
  if (out_path.empty()) {
    adf::print_bell_demo(std::cout, report);
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + out_path + "'");
  adf::print_bell_demo(out, report);
  out.flush();
  if (!out) throw IoError("failed writing '" + out_path + "'");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "adfilter: density-matrix simulation of a probabilistic weak-measurement "
      "filter against amplitude damping on entangled ion pairs"};
  app.require_subcommand(1);

  SweepCli ideal;
  ideal.cmd = app.add_subcommand(
      "ideal", "Zero-temperature sweep through both filter realizations");
  add_sweep_options(ideal);

  SweepCli scheme_a;
  scheme_a.cmd = app.add_subcommand(
      "scheme-a", "Quantum-logic-spectroscopy filter with thermal modes");
  add_sweep_options(scheme_a);

  SweepCli scheme_b;
  scheme_b.cmd = app.add_subcommand(
      "scheme-b", "Entangling-gate filter with warm-mode phase correction");
  add_sweep_options(scheme_b);

  CLI::App* bell = app.add_subcommand(
      "bell-demo", "Damp and filter one Bell pair, print a short report");
  std::string bell_state;
  double bell_p = 0.0;
  std::string bell_povm = "circuit";
  std::string bell_out;
  bell->add_option("state", bell_state, "Bell label: phi+|phi-|psi+|psi-")
      ->required();
  bell->add_option("p", bell_p, "Decay probability in [0, 1)")->required();
  bell->add_option("--povm", bell_povm, "POVM convention: circuit|paper");
  bell->add_option("--out", bell_out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (ideal.cmd->parsed()) return run_sweep(ideal, adf::SchemeKind::Ideal);
    if (scheme_a.cmd->parsed()) return run_sweep(scheme_a, adf::SchemeKind::A);
    if (scheme_b.cmd->parsed()) return run_sweep(scheme_b, adf::SchemeKind::B);
    if (bell->parsed()) {
      return run_bell_demo_cmd(bell_state, bell_p, bell_povm, bell_out);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  return kExitConfigError;
}
