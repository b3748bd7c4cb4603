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

#ifndef ADFILTER_EXPERIMENTS_HPP
#define ADFILTER_EXPERIMENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "adfilter/conditional_channel.hpp"
#include "adfilter/filter.hpp"
#include "adfilter/gates.hpp"
#include "adfilter/scheme_a.hpp"
#include "adfilter/scheme_b.hpp"

namespace adf {

enum class SchemeKind { Ideal, A, B };

struct ExperimentConfig {
  double t1 = 0.8;  // seconds
  std::vector<double> t_over_t1_grid;
  std::vector<double> nbar_values;
  int n_max = 12;
  SchemeKind scheme = SchemeKind::Ideal;
  SchemeBMode scheme_b_mode = SchemeBMode::ScaleZzOnly;
  PovmMode povm_mode = PovmMode::CircuitDerived;
  std::uint64_t seed = 0;
  std::string output_path;
  bool json_output = false;

  /// Evenly spaced grid over [0.01, tmax] (a single point lands on tmax).
  static std::vector<double> default_grid(int points = 40, double tmax = 1.2);
  /// Fills empty grids with the per-scheme defaults and checks ranges.
  void finalize();
};

/// One output row of a sweep.
struct SweepRecord {
  double t_over_t1 = 0.0;
  double p = 0.0;
  double nbar = 0.0;
  std::string scheme;
  double f_unfiltered = 0.0;
  double f_filtered = 0.0;
  double p_success = 0.0;
  double f_analytic_unf = 0.0;
  double f_analytic_f = 0.0;
  double o_factor = 1.0;
};

/// Full noisy implementation of the entangling gate: uncorrelated amplitude
/// damping at probability p composed after XX(pi/2).
ConditionalChannel unfiltered_pipeline_channel(double p);

/// The unfiltered pipeline followed by one scheme-A reversal block per qubit
/// (output on the two three-level ions; computational block embedded).
ConditionalChannel scheme_a_filtered_pipeline(double p, double p_r,
                                              const ThermalModeSpec& thermal,
                                              LeakagePolicy policy =
                                                  LeakagePolicy::KeepInWeight);

/// The unfiltered pipeline followed by one scheme-B reversal per qubit with
/// the thermally corrected entangling phase.
ConditionalChannel scheme_b_filtered_pipeline(double p, double p_r,
                                              const ChainSpec& chain,
                                              SchemeBMode mode =
                                                  SchemeBMode::ScaleZzOnly);

/// Simulated average gate fidelity and mean success probability of a
/// (possibly post-selected) pipeline channel against XX(pi/2).
struct PipelineFigures {
  double avg_gate_fidelity = 0.0;
  double success_probability = 0.0;
};
PipelineFigures pipeline_figures(const ConditionalChannel& channel);

/// Ideal-condition sweep: both realizations at zero temperature, matched
/// reversal strength p_r = p, two rows per grid point (ideal_a, ideal_b).
std::vector<SweepRecord> run_ideal(const ExperimentConfig& config);

/// Scheme-A sweep over the (t/T1, nbar) grid with thermal initial modes.
std::vector<SweepRecord> run_scheme_a_sweep(const ExperimentConfig& config);

/// Scheme-B sweep over the (t/T1, nbar) grid for the four-ion axial chain.
std::vector<SweepRecord> run_scheme_b_sweep(const ExperimentConfig& config);

struct BellDemoReport {
  BellLabel label = BellLabel::PsiMinus;
  double p = 0.0;
  double f_unfiltered = 0.0;
  double f_filtered = 0.0;
  double p_success = 0.0;
  // Closed-form |Psi-> references: 1-p, 1/(1+p), (1-p)^2 (1+p).
  double ref_unfiltered = 0.0;
  double ref_filtered = 0.0;
  double ref_success = 0.0;
  std::vector<FilterOutcome> outcomes;
};

/// Damps the chosen Bell pair at probability p, filters with p_r = p, and
/// reports fidelities, success probability, and the four-outcome
/// distribution under the chosen POVM convention. Requires p in [0, 1).
BellDemoReport run_bell_demo(BellLabel label, double p,
                             PovmMode mode = PovmMode::CircuitDerived);

inline constexpr const char* kSweepCsvHeader =
    "t_over_t1,p,nbar,scheme,f_unfiltered,f_filtered,p_success,"
    "f_analytic_unf,f_analytic_f,o_factor";

/// Fixed-header CSV with 12 significant digits, newline-terminated rows.
void write_csv(std::ostream& out, std::span<const SweepRecord> records);
/// JSON mirror of the same rows.
void write_json(std::ostream& out, std::span<const SweepRecord> records);
void print_bell_demo(std::ostream& out, const BellDemoReport& report);

/// key=value lines, '#' comments, blank lines ignored.
std::map<std::string, std::string> parse_key_value_file(std::istream& in);

}  // namespace adf

#endif  // ADFILTER_EXPERIMENTS_HPP
