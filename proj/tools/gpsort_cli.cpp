#include <algorithm>
#include <cstdio>
#include <exception>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpsort/engine.hpp"
#include "gpsort/harness.hpp"
#include "gpsort/oracle.hpp"

namespace {

using namespace gpsort;

MeasureKind measure_of(const std::string& s) {
  MeasureKind m;
  if (!parse_measure(s, m)) throw CLI::ValidationError("--measure", "unknown measure " + s);
  return m;
}

Variant variant_of(const std::string& s) {
  Variant v;
  if (!parse_variant(s, v)) throw CLI::ValidationError("--variant", "unknown variant " + s);
  return v;
}

InitMode init_of(const std::string& s) {
  InitMode m;
  if (!parse_init_mode(s, m)) throw CLI::ValidationError("--init", "unknown init " + s);
  return m;
}

struct CommonFlags {
  std::vector<int> n_list;
  std::string measure = "inv";
  std::string variant = "single";
  std::string init = "perm";
  int trials = 20;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 1;
  std::string out;
  int workers = 1;
};

void add_experiment_flags(CLI::App* cmd, CommonFlags& f, bool with_variant_measure = true) {
  cmd->add_option("--n-list", f.n_list, "problem sizes, ascending")
      ->required()
      ->delimiter(',');
  if (with_variant_measure) {
    cmd->add_option("--measure", f.measure, "sortedness measure")
        ->check(CLI::IsMember({"inv", "ham", "run", "las", "exc"}));
    cmd->add_option("--variant", f.variant, "mutation variant")
        ->check(CLI::IsMember({"single", "multi"}));
    cmd->add_option("--trials", f.trials, "runs per n")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", f.budget, "evaluations per run")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "base seed");
    cmd->add_option("--workers", f.workers, "worker threads")->check(CLI::PositiveNumber);
  }
  cmd->add_option("--out", f.out, "artifact base path (csv/dat/json)");
}

int cmd_run(int n, const std::string& measure, const std::string& variant,
            const std::string& init, double p_join, int depth_cap,
            std::uint64_t budget, std::uint64_t seed, bool trace) {
  RunConfig cfg;
  cfg.n = n;
  cfg.measure = measure_of(measure);
  cfg.variant = variant_of(variant);
  cfg.init.mode = init_of(init);
  cfg.init.p_join = p_join;
  cfg.init.depth_cap = depth_cap;
  cfg.budget = budget;
  cfg.seed = seed;
  RunRecord rec = run(cfg);
  std::printf("run n=%d measure=%s variant=%s init=%s budget=%llu seed=%llu\n", n,
              measure.c_str(), variant.c_str(), init.c_str(),
              (unsigned long long)budget, (unsigned long long)seed);
  std::printf(
      "evaluations=%llu hit_optimum=%s final_fitness=%lld improvements=%zu "
      "max_tree_size=%d\n",
      (unsigned long long)rec.evaluations_used, rec.hit_optimum ? "yes" : "no",
      (long long)rec.final_fitness.value, rec.improvements.size(), rec.max_tree_size);
  if (trace)
    for (const auto& imp : rec.improvements)
      std::printf("  eval=%llu fitness=%lld size=%d\n", (unsigned long long)imp.evaluation,
                  (long long)imp.fitness, imp.leaf_count);
  return 0;
}

int cmd_scale(const CommonFlags& f) {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::scale;
  spec.n_values = f.n_list;
  spec.trials = f.trials;
  spec.budget = f.budget;
  spec.base_seed = f.seed;
  spec.measure = measure_of(f.measure);
  spec.variant = variant_of(f.variant);
  spec.init = init_of(f.init);
  spec.out_path = f.out;
  spec.workers = f.workers;
  ScaleResult res = scaling_experiment(spec);
  std::printf("%s: %d/%d runs reached the optimum\n", spec.id().c_str(), res.solved,
              res.total);
  for (const auto& [n, med] : res.median_evaluations)
    std::printf("  n=%d median_evaluations=%.1f\n", n, med);
  if (res.has_fit)
    std::printf("  log-log fit: slope=%.3f intercept=%.3f r2=%.4f\n", res.fit.slope,
                res.fit.intercept, res.fit.r_squared);
  if (!f.out.empty())
    std::printf("wrote %s.csv, %s-median.dat, %s.json\n", f.out.c_str(), f.out.c_str(),
                f.out.c_str());
  return 0;
}

int cmd_stagnate(const CommonFlags& f) {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::stagnate;
  spec.n_values = f.n_list;
  spec.trials = f.trials;
  spec.budget = f.budget;
  spec.base_seed = f.seed;
  spec.measure = measure_of(f.measure);
  spec.variant = variant_of(f.variant);
  spec.init = init_of(f.init);
  spec.out_path = f.out;
  spec.workers = f.workers;
  StagnationResult res = stagnation_experiment(spec);
  if (spec.variant == Variant::single) {
    std::printf("%s: exact one-step improvement probability\n", spec.id().c_str());
    for (const auto& [n, p] : res.exact_single_step)
      std::printf("  n=%d p=%s\n", n, p.to_string().c_str());
    std::printf("  %s\n", res.exact_all_zero ? "stuck: probability 0 at every n"
                                             : "improvable at some n");
  } else {
    std::printf("%s: %d/%d trials saw no accepted improvement (budget %llu)\n",
                spec.id().c_str(), res.zero_improvement_trials, res.total_trials,
                (unsigned long long)spec.budget);
  }
  return 0;
}

int cmd_probe(const CommonFlags& f) {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::probe;
  spec.n_values = f.n_list;
  spec.out_path = f.out;
  ProbeResult res = success_probability_sweep(spec);
  for (const ProbeSeries* s : {&res.deletion_fixable, &res.pinpoint_fix}) {
    std::printf("%s:\n", s->name.c_str());
    for (const auto& [n, p] : s->points)
      std::printf("  n=%d p=%s (%.6g)\n", n, p.to_string().c_str(), p.to_double());
    if (s->has_fit)
      std::printf("  log-log fit: slope=%.3f r2=%.4f\n", s->fit.slope, s->fit.r_squared);
  }
  return 0;
}

bool check(bool ok, const char* what, int& failures) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what);
  if (!ok) ++failures;
  return ok;
}

int cmd_verify(int n_max) {
  int failures = 0;

  {
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
      std::vector<int> perm(std::size_t(n), 0);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        auto p = express(perm, n);
        for (MeasureKind m : {MeasureKind::inv, MeasureKind::ham, MeasureKind::run,
                              MeasureKind::las, MeasureKind::exc})
          if (measure_value(m, p) != naive_fitness(p, m)) ok = false;
      } while (ok && std::next_permutation(perm.begin(), perm.end()));
    }
    check(ok, "measure values match the naive definitions on all permutations, n <= 6",
          failures);
  }

  {
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n) {
      std::vector<int> perm(std::size_t(n), 0);
      std::iota(perm.begin(), perm.end(), 1);
      do {
        if (exc(express(perm, n)) != brute_force_exc(perm)) ok = false;
      } while (ok && std::next_permutation(perm.begin(), perm.end()));
    }
    {
      std::vector<int> perm{1, 2, 3, 4, 5, 6};
      int idx = 0;
      do {
        if (idx++ % 7 != 0) continue;
        if (exc(express(perm, 6)) != brute_force_exc(perm)) ok = false;
      } while (ok && std::next_permutation(perm.begin(), perm.end()));
    }
    check(ok, "exchange counts match breadth-first search (all perms n <= 5, sample at 6)",
          failures);
  }

  {
    bool ok = true;
    RandomStream rng(7);
    std::vector<std::pair<Tree, int>> trees;
    trees.push_back({make_leaf(2, 4), 4});
    trees.push_back({comb_from_leaf_list({3, 1, 4, 1, 5, 2, 6}, 6), 6});
    trees.push_back({worst_case_w1(6), 6});
    trees.push_back({worst_case_w2(6), 6});
    for (int i = 0; i < 5; ++i) {
      InitConfig ic;
      ic.n = 8;
      ic.mode = InitMode::grow;
      trees.push_back({random_init(ic, rng), 8});
    }
    for (const auto& [t, n] : trees) {
      Rational total;
      std::int64_t entries = 0;
      for_each_single_mutation(
          t, n, [&](const MutationInstance&, const Tree&, const Rational& p) {
            total += p;
            ++entries;
          });
      if (!(total == Rational::one())) ok = false;
      if (entries != neighborhood_size(t, n)) ok = false;
    }
    check(ok, "neighborhood probabilities sum to exactly 1 and entry counts match",
          failures);
  }

  {
    bool ok = true;
    for (int n = 3; n <= n_max; ++n) {
      FixKindReport rep = verify_fix_kinds(n);
      if (!rep.all_pass) {
        ok = false;
        std::printf("%s", rep.to_text().c_str());
      }
    }
    check(ok, "one-step fix kinds match the exact expected counts", failures);
    // the per-case breakdown at the largest n checked
    std::printf("%s", verify_fix_kinds(n_max).to_text().c_str());
  }

  {
    bool ok = true;
    for (int n = 3; n <= 8; ++n)
      for (MeasureKind m : {MeasureKind::run, MeasureKind::las})
        if (!(exact_improvement_probability(worst_case_w1(n), n, m) == Rational::zero()))
          ok = false;
    for (int n = 3; n <= 8; ++n)
      for (MeasureKind m : {MeasureKind::ham, MeasureKind::exc})
        if (!(exact_improvement_probability(worst_case_w2(n), n, m) == Rational::zero()))
          ok = false;
    check(ok, "worst-case starts admit no one-step improvement (exact zeros)", failures);
  }

  std::printf("%s\n", failures == 0 ? "verify: all checks passed"
                                    : "verify: some checks FAILED");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(1+1) GP on sorting join-trees: runs, sweeps and exact checks"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "one run, printing the improvement record");
  int run_n = 8;
  std::string run_measure = "inv", run_variant = "single", run_init = "perm";
  double run_p_join = 0.5;
  int run_depth_cap = 0;
  std::uint64_t run_budget = 1'000'000, run_seed = 1;
  bool run_trace = false;
  run_cmd->add_option("--n", run_n, "problem size")->check(CLI::Range(2, 1000000));
  run_cmd->add_option("--measure", run_measure, "sortedness measure")
      ->check(CLI::IsMember({"inv", "ham", "run", "las", "exc"}));
  run_cmd->add_option("--variant", run_variant, "mutation variant")
      ->check(CLI::IsMember({"single", "multi"}));
  run_cmd->add_option("--init", run_init, "initial tree")
      ->check(CLI::IsMember({"grow", "perm", "w1", "w2"}));
  run_cmd->add_option("--p-join", run_p_join, "grow: join probability");
  run_cmd->add_option("--depth-cap", run_depth_cap, "grow: depth cap (0 = default)");
  run_cmd->add_option("--budget", run_budget, "evaluation budget")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run_seed, "seed");
  run_cmd->add_flag("--trace", run_trace, "print every accepted improvement");

  auto* scale_cmd = app.add_subcommand("scale", "median evaluations to optimum vs n");
  CommonFlags scale_flags;
  add_experiment_flags(scale_cmd, scale_flags);
  scale_cmd->add_option("--init", scale_flags.init, "initial tree")
      ->check(CLI::IsMember({"grow", "perm", "w1", "w2"}));

  auto* stagnate_cmd =
      app.add_subcommand("stagnate", "worst-case starts: exact zeros or quiet runs");
  CommonFlags stagnate_flags;
  stagnate_flags.init = "w1";
  stagnate_flags.measure = "run";
  add_experiment_flags(stagnate_cmd, stagnate_flags);
  stagnate_cmd->add_option("--init", stagnate_flags.init, "worst-case start")
      ->check(CLI::IsMember({"w1", "w2"}));

  auto* probe_cmd =
      app.add_subcommand("probe", "exact one-step success probabilities vs n");
  CommonFlags probe_flags;
  add_experiment_flags(probe_cmd, probe_flags, false);

  auto* verify_cmd = app.add_subcommand("verify", "oracle cross-checks; exit 1 on failure");
  int verify_n_max = 12;
  verify_cmd->add_option("--n-max", verify_n_max, "upper n for the fix-kind checks")
      ->check(CLI::Range(3, 16));

  auto* summary_cmd = app.add_subcommand("summary", "status table from artifact sidecars");
  std::string summary_dir;
  summary_cmd->add_option("--dir", summary_dir, "artifact directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed())
      return cmd_run(run_n, run_measure, run_variant, run_init, run_p_join,
                     run_depth_cap, run_budget, run_seed, run_trace);
    if (scale_cmd->parsed()) return cmd_scale(scale_flags);
    if (stagnate_cmd->parsed()) return cmd_stagnate(stagnate_flags);
    if (probe_cmd->parsed()) return cmd_probe(probe_flags);
    if (verify_cmd->parsed()) return cmd_verify(verify_n_max);
    if (summary_cmd->parsed()) {
      std::fputs(summary_table(summary_dir).c_str(), stdout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
