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

#include "adfilter/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "adfilter/channels.hpp"
#include "adfilter/metrics.hpp"

namespace adf {

std::vector<double> ExperimentConfig::default_grid(int points, double tmax) {
  if (points < 1) throw std::invalid_argument("default_grid: points must be >= 1");
  if (tmax <= 0.0) throw std::invalid_argument("default_grid: tmax must be > 0");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = tmax;
    return grid;
  }
  const double tmin = std::min(0.01, tmax);
  for (int i = 0; i < points; ++i) {
    grid[i] = tmin + (tmax - tmin) * i / (points - 1);
  }
  return grid;
}

void ExperimentConfig::finalize() {
  if (t1 <= 0.0) throw std::invalid_argument("config: t1 must be > 0");
  if (n_max < 1) throw std::invalid_argument("config: nmax must be >= 1");
  if (t_over_t1_grid.empty()) t_over_t1_grid = default_grid();
  for (double t : t_over_t1_grid) {
    if (t < 0.0) throw std::invalid_argument("config: t/T1 values must be >= 0");
  }
  if (nbar_values.empty()) {
    switch (scheme) {
      case SchemeKind::Ideal: nbar_values = {0.0}; break;
      case SchemeKind::A: nbar_values = {0.05, 0.09, 0.125}; break;
      case SchemeKind::B: nbar_values = {0.0, 10.0, 25.0, 50.0}; break;
    }
  }
  for (double n : nbar_values) {
    if (n < 0.0) throw std::invalid_argument("config: nbar values must be >= 0");
  }
}

ConditionalChannel unfiltered_pipeline_channel(double p) {
  const Operator id2 = Operator::Identity(2, 2);
  const KrausChannel damping = damping_kraus(p);
  std::vector<Operator> pair_kraus;
  pair_kraus.reserve(4);
  for (const Operator& k1 : damping.kraus) {
    for (const Operator& k2 : damping.kraus) {
      pair_kraus.push_back(tensor(k1, k2));
    }
  }
  const ConditionalChannel noise = ConditionalChannel::from_kraus(pair_kraus);
  return noise.compose_after(ConditionalChannel::from_unitary(ms_gate()));
}

ConditionalChannel scheme_a_filtered_pipeline(double p, double p_r,
                                              const ThermalModeSpec& thermal,
                                              LeakagePolicy policy) {
  const ConditionalChannel block = block_conditional_channel(p_r, thermal);
  ConditionalChannel pair = tensor(block, block);
  if (policy == LeakagePolicy::Discard) pair = pair.restrict_to_embedding();
  return pair.compose_after(unfiltered_pipeline_channel(p));
}

ConditionalChannel scheme_b_filtered_pipeline(double p, double p_r,
                                              const ChainSpec& chain,
                                              SchemeBMode mode) {
  const double chi_c = chi_from_strength(p_r);
  const double correction = thermal_correction(chain);
  const double chi_zz = chi_c * correction;
  const double chi_single = (mode == SchemeBMode::ScaleAll) ? chi_zz : chi_c;
  const Operator block =
      ancilla_ground_block(reversal_unitary_b(chi_single, chi_zz));
  const ConditionalChannel filter_pair =
      ConditionalChannel::from_operator(tensor(block, block));
  return filter_pair.compose_after(unfiltered_pipeline_channel(p));
}

PipelineFigures pipeline_figures(const ConditionalChannel& channel) {
  const Operator u_id = ms_gate();
  const double f_e = entanglement_fidelity(channel, u_id);
  return PipelineFigures{avg_gate_fidelity(f_e, channel.dim_in()),
                         mean_success_probability(channel)};
}

namespace {

SweepRecord make_record(double t_over_t1, double p, double nbar,
                        std::string scheme, const PipelineFigures& unfiltered,
                        const PipelineFigures& filtered, double o_factor) {
  SweepRecord rec;
  rec.t_over_t1 = t_over_t1;
  rec.p = p;
  rec.nbar = nbar;
  rec.scheme = std::move(scheme);
  rec.f_unfiltered = unfiltered.avg_gate_fidelity;
  rec.f_filtered = filtered.avg_gate_fidelity;
  rec.p_success = filtered.success_probability;
  rec.f_analytic_unf = analytic_unfiltered(p);
  rec.f_analytic_f = analytic_filtered(p);
  rec.o_factor = o_factor;
  return rec;
}

}  // namespace

std::vector<SweepRecord> run_ideal(const ExperimentConfig& config) {
  ExperimentConfig cfg = config;
  cfg.finalize();

  std::vector<SweepRecord> records;
  records.reserve(2 * cfg.t_over_t1_grid.size());
  const ThermalModeSpec vacuum{0.0, cfg.n_max};
  const ChainSpec cold = ChainSpec::axial_four_ion(0.0);

  for (double t : cfg.t_over_t1_grid) {
    const double p = damping_probability(t * cfg.t1, cfg.t1);
    const PipelineFigures unf = pipeline_figures(unfiltered_pipeline_channel(p));
    const PipelineFigures via_a =
        pipeline_figures(scheme_a_filtered_pipeline(p, p, vacuum));
    const PipelineFigures via_b = pipeline_figures(
        scheme_b_filtered_pipeline(p, p, cold, cfg.scheme_b_mode));
    records.push_back(make_record(t, p, 0.0, "ideal_a", unf, via_a, 1.0));
    records.push_back(make_record(t, p, 0.0, "ideal_b", unf, via_b, 1.0));
  }
  return records;
}

std::vector<SweepRecord> run_scheme_a_sweep(const ExperimentConfig& config) {
  ExperimentConfig cfg = config;
  cfg.scheme = SchemeKind::A;
  cfg.finalize();

  std::vector<SweepRecord> records;
  records.reserve(cfg.nbar_values.size() * cfg.t_over_t1_grid.size());
  for (double nbar : cfg.nbar_values) {
    const ThermalModeSpec thermal{nbar, cfg.n_max};
    for (double t : cfg.t_over_t1_grid) {
      const double p = damping_probability(t * cfg.t1, cfg.t1);
      const PipelineFigures unf = pipeline_figures(unfiltered_pipeline_channel(p));
      const PipelineFigures filt =
          pipeline_figures(scheme_a_filtered_pipeline(p, p, thermal));
      records.push_back(make_record(t, p, nbar, "a", unf, filt, 1.0));
    }
  }
  return records;
}

std::vector<SweepRecord> run_scheme_b_sweep(const ExperimentConfig& config) {
  ExperimentConfig cfg = config;
  cfg.scheme = SchemeKind::B;
  cfg.finalize();

  std::vector<SweepRecord> records;
  records.reserve(cfg.nbar_values.size() * cfg.t_over_t1_grid.size());
  for (double nbar : cfg.nbar_values) {
    const ChainSpec chain = ChainSpec::axial_four_ion(nbar);
    const double o_factor = thermal_correction(chain);
    for (double t : cfg.t_over_t1_grid) {
      const double p = damping_probability(t * cfg.t1, cfg.t1);
      const PipelineFigures unf = pipeline_figures(unfiltered_pipeline_channel(p));
      const PipelineFigures filt = pipeline_figures(
          scheme_b_filtered_pipeline(p, p, chain, cfg.scheme_b_mode));
      records.push_back(make_record(t, p, nbar, "b", unf, filt, o_factor));
    }
  }
  return records;
}

BellDemoReport run_bell_demo(BellLabel label, double p, PovmMode mode) {
  if (p < 0.0 || p >= 1.0) {
    throw std::invalid_argument("run_bell_demo: p must lie in [0, 1)");
  }
  const DensityMatrix target = bell_pair(label);
  const DensityMatrix damped = two_qubit_damping(target, p, p);
  const FilterResult filtered = apply_filter(damped, p, p);

  BellDemoReport report;
  report.label = label;
  report.p = p;
  report.f_unfiltered = state_fidelity(damped, target);
  report.f_filtered = state_fidelity(filtered.state, target);
  report.p_success = filtered.success_probability;
  report.ref_unfiltered = 1.0 - p;
  report.ref_filtered = 1.0 / (1.0 + p);
  report.ref_success = (1.0 - p) * (1.0 - p) * (1.0 + p);
  report.outcomes = four_outcome_measurement(damped, p, mode);
  return report;
}

namespace {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const SweepRecord> records) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << format_double(r.t_over_t1) << ',' << format_double(r.p) << ','
        << format_double(r.nbar) << ',' << r.scheme << ','
        << format_double(r.f_unfiltered) << ',' << format_double(r.f_filtered)
        << ',' << format_double(r.p_success) << ','
        << format_double(r.f_analytic_unf) << ','
        << format_double(r.f_analytic_f) << ',' << format_double(r.o_factor)
        << '\n';
  }
}

void write_json(std::ostream& out, std::span<const SweepRecord> records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepRecord& r : records) {
    rows.push_back({{"t_over_t1", r.t_over_t1},
                    {"p", r.p},
                    {"nbar", r.nbar},
                    {"scheme", r.scheme},
                    {"f_unfiltered", r.f_unfiltered},
                    {"f_filtered", r.f_filtered},
                    {"p_success", r.p_success},
                    {"f_analytic_unf", r.f_analytic_unf},
                    {"f_analytic_f", r.f_analytic_f},
                    {"o_factor", r.o_factor}});
  }
  out << rows.dump(2) << '\n';
}

void print_bell_demo(std::ostream& out, const BellDemoReport& report) {
  out << "state: " << bell_label_name(report.label) << '\n'
      << "p: " << format_double(report.p) << '\n'
      << "f_unfiltered: " << format_double(report.f_unfiltered) << '\n'
      << "f_filtered: " << format_double(report.f_filtered) << '\n'
      << "p_success: " << format_double(report.p_success) << '\n'
      << "ref_unfiltered(psi-): " << format_double(report.ref_unfiltered) << '\n'
      << "ref_filtered(psi-): " << format_double(report.ref_filtered) << '\n'
      << "ref_success(psi-): " << format_double(report.ref_success) << '\n';
  for (const FilterOutcome& o : report.outcomes) {
    out << "outcome_" << o.outcome_bits[0] << o.outcome_bits[1] << ": "
        << format_double(o.probability) << '\n';
  }
}

std::map<std::string, std::string> parse_key_value_file(std::istream& in) {
  std::map<std::string, std::string> values;
  std::string line;
  int line_no = 0;
  const auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    if (begin == std::string::npos) return std::string();
    return s.substr(begin, end - begin + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    values[key] = value;
  }
  return values;
}

}  // namespace adf
