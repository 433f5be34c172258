#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gpsort/engine.hpp"
#include "gpsort/oracle.hpp"
#include "gpsort/rational.hpp"

namespace gpsort {

enum class ExperimentKind { scale, stagnate, probe };
const char* to_string(ExperimentKind k);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::scale;
  std::vector<int> n_values;  // non-empty, strictly increasing
  int trials = 1;
  std::uint64_t budget = 1'000'000;
  std::uint64_t base_seed = 1;
  MeasureKind measure = MeasureKind::inv;
  Variant variant = Variant::single;
  InitMode init = InitMode::perm_comb;
  std::string out_path;  // artifact base path; empty writes no files
  int workers = 1;

  std::string id() const;  // e.g. "scale-inv-single-perm"
  void validate() const;   // throws std::invalid_argument
};

// Per-trial seed: base_seed ^ mix64(row_index), with row_index counting
// (n, trial) pairs in declaration order. Trials stay decoupled while the
// whole experiment replays from one base seed.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t row_index);

// One CSV row per run. The header is fixed:
//   experiment_id,kind,measure,variant,init,n,trial,seed,evaluations,
//   hit_optimum,best_fitness,improvements,max_tree_size
struct TrialRow {
  std::string experiment_id;
  ExperimentKind kind = ExperimentKind::scale;
  MeasureKind measure = MeasureKind::inv;
  Variant variant = Variant::single;
  InitMode init = InitMode::perm_comb;
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t evaluations = 0;
  bool hit_optimum = false;
  std::int64_t best_fitness = 0;
  std::uint64_t improvements = 0;
  int max_tree_size = 0;  // peak leaf count seen during the run
};

extern const char* const kCsvHeader;
std::string to_csv_row(const TrialRow& r);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Ordinary least squares on (log x, log y). Requires at least 3 points,
// all with positive coordinates; throws std::invalid_argument otherwise.
// A constant series fits slope 0 with r_squared 1.
FitResult fit_loglog(const std::vector<std::pair<double, double>>& points);

// Runs jobs on a small thread pool. Results land at the index of their
// job, so the output is identical for any worker count.
std::vector<RunRecord> run_many(const std::vector<RunConfig>& jobs, int workers);

struct ScaleResult {
  std::vector<TrialRow> rows;
  std::vector<std::pair<int, double>> median_evaluations;
  FitResult fit;  // log-log fit of median evaluations vs n (3+ n values)
  bool has_fit = false;
  int solved = 0;
  int total = 0;
};

// trials runs per n. Artifacts (with out_path set): <out>.csv,
// <out>-median.dat (two columns: n, median evaluations), <out>.json.
ScaleResult scaling_experiment(const ExperimentSpec& spec);

struct StagnationResult {
  // single: the exact one-step improvement probability per n
  std::vector<std::pair<int, Rational>> exact_single_step;
  bool exact_all_zero = false;
  // multi: one row per trial
  std::vector<TrialRow> rows;
  int zero_improvement_trials = 0;
  int total_trials = 0;
};

// Requires the matching worst-case start: init w1 pairs with run/las,
// init w2 with ham/exc; anything else throws std::invalid_argument.
// single proves stagnation exactly by enumeration; multi runs the full
// budget and counts trials that never improve. Artifacts: single
// <out>-exact.dat + <out>.json; multi <out>.csv + <out>.json.
StagnationResult stagnation_experiment(const ExperimentSpec& spec);

struct ProbeSeries {
  std::string name;
  std::vector<std::pair<int, Rational>> points;  // (n, exact probability)
  FitResult fit;
  bool has_fit = false;
};

struct ProbeResult {
  // misplaced-front start: a single deletion fixes it, success mass 1/(3n)
  ProbeSeries deletion_fixable;
  // missing-interior start: only pinpoint insert/substitute fix it, Theta(1/n^2)
  ProbeSeries pinpoint_fix;
};

// Exact one-step success probabilities for the two canonical families,
// with log-log fits of probability against n. Artifacts:
// <out>-deletion.dat, <out>-pinpoint.dat, <out>.json.
ProbeResult success_probability_sweep(const ExperimentSpec& spec);

// Renders a measure-by-variant status table from the .json sidecars in
// dir. Cells without a matching sidecar read "no data"; a missing or
// empty directory yields a note instead of an error.
std::string summary_table(const std::string& dir);

}  // namespace gpsort
