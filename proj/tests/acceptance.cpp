// Acceptance gate: one criterion per invocation, selected by argv[1].
// Prints exactly one [PASS]/[FAIL] line per criterion and exits nonzero
// on failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "gpsort/engine.hpp"
#include "gpsort/harness.hpp"
#include "gpsort/oracle.hpp"

using namespace gpsort;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::printf("       failed: %s\n", what.c_str());
  }
}

int pool_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return int(std::min(hw == 0 ? 4u : hw, 8u));
}

const std::vector<MeasureKind> kAllMeasures = {
    MeasureKind::inv, MeasureKind::ham, MeasureKind::run, MeasureKind::las, MeasureKind::exc};

// 1. One tree, five frozen values; the two commonly miscopied values
//    (INV 10, LAS 4) are explicitly ruled out against the naive oracle.
bool criterion_worked_example() {
  const LabelList leaves{2, 2, 3, 4, 5, 1, 6, 3};
  Tree t = comb_from_leaf_list(leaves, 6);
  ExpressedPermutation p = express(leaves, 6);
  expect(p.elements() == std::vector<int>{2, 3, 4, 5, 1, 6}, "expressed permutation");

  expect(evaluate(t, MeasureKind::ham, 6).value == 1, "HAM = 1");
  expect(evaluate(t, MeasureKind::run, 6).value == 2, "RUN = 2");
  expect(evaluate(t, MeasureKind::exc, 6).value == 4, "EXC = 4");

  const std::int64_t inv_naive = naive_fitness(p, MeasureKind::inv);
  const std::int64_t las_naive = naive_fitness(p, MeasureKind::las);
  expect(inv_naive == 11, "naive INV oracle = 11");
  expect(las_naive == 5, "naive LAS oracle = 5");
  expect(evaluate(t, MeasureKind::inv, 6).value == inv_naive, "INV matches oracle");
  expect(evaluate(t, MeasureKind::las, 6).value == las_naive, "LAS matches oracle");
  // the definitions give 11 and 5; 10 and 4 are wrong and stay wrong
  expect(inv_naive != 10, "INV is not 10");
  expect(las_naive != 4, "LAS is not 4");
  return g_failures == 0;
}

// 2. exc equals breadth-first transposition distance on all 120
//    permutations of n=5; evaluate equals the naive oracle on all
//    permutations n <= 6 under all five measures.
bool criterion_oracle_equivalence() {
  {
    std::vector<int> perm{1, 2, 3, 4, 5};
    int checked = 0;
    do {
      expect(std::int64_t(brute_force_exc(perm)) == exc(express(perm, 5)),
             "exc vs search");
      ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    expect(checked == 120, "120 permutations of n=5");
  }
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      Tree t = comb_from_leaf_list(perm, n);
      ExpressedPermutation p = express(perm, n);
      for (MeasureKind m : kAllMeasures)
        expect(evaluate(t, m, n).value == naive_fitness(p, m), "evaluate vs naive");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return g_failures == 0;
}

// 3. Exact stagnation of the single variant: improvement probability is
//    exactly zero from the adversarial starts at every n in 4..8.
bool criterion_exact_stagnation() {
  for (int n = 4; n <= 8; ++n) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=%d", n);
    expect(exact_improvement_probability(worst_case_w1(n), n, MeasureKind::run) ==
               Rational::zero(),
           std::string("w1/run ") + buf);
    expect(exact_improvement_probability(worst_case_w1(n), n, MeasureKind::las) ==
               Rational::zero(),
           std::string("w1/las ") + buf);
    expect(exact_improvement_probability(worst_case_w2(n), n, MeasureKind::ham) ==
               Rational::zero(),
           std::string("w2/ham ") + buf);
    expect(exact_improvement_probability(worst_case_w2(n), n, MeasureKind::exc) ==
               Rational::zero(),
           std::string("w2/exc ") + buf);
  }
  return g_failures == 0;
}

// 4. Statistical stagnation of the multi variant at n=8: 20 runs of one
//    million evaluations, at least 19 of which accept nothing.
bool criterion_statistical_stagnation() {
  struct Pair {
    MeasureKind m;
    InitMode init;
    const char* name;
  };
  for (const Pair& pr : {Pair{MeasureKind::run, InitMode::w1, "w1/run"},
                         Pair{MeasureKind::ham, InitMode::w2, "w2/ham"}}) {
    ExperimentSpec s;
    s.kind = ExperimentKind::stagnate;
    s.n_values = {8};
    s.trials = 20;
    s.budget = 1'000'000;
    s.base_seed = 88001;
    s.measure = pr.m;
    s.variant = Variant::multi;
    s.init = pr.init;
    s.workers = pool_workers();
    StagnationResult res = stagnation_experiment(s);
    expect(res.total_trials == 20, std::string(pr.name) + ": 20 trials");
    std::printf("       %s: %d/20 trials accepted nothing\n", pr.name,
                res.zero_improvement_trials);
    expect(res.zero_improvement_trials >= 19,
           std::string(pr.name) + ": >= 19/20 zero-improvement trials");
    for (const TrialRow& r : res.rows)
      expect(!r.hit_optimum, std::string(pr.name) + ": no run reaches the optimum");
  }
  return g_failures == 0;
}

// 5. Inversion scaling: both variants solve every instance from random
//    permutation starts, and median evaluations grow with a fitted
//    log-log slope of at most 4.2.
bool criterion_inv_scaling() {
  for (Variant v : {Variant::single, Variant::multi}) {
    ExperimentSpec s;
    s.kind = ExperimentKind::scale;
    s.n_values = {4, 8, 16, 32};
    s.trials = 50;
    s.budget = 100'000'000;
    s.base_seed = 55001;
    s.measure = MeasureKind::inv;
    s.variant = v;
    s.init = InitMode::perm_comb;
    s.workers = pool_workers();
    ScaleResult res = scaling_experiment(s);
    expect(res.total == 200, "200 runs");
    expect(res.solved == res.total,
           std::string(to_string(v)) + ": every run reaches the optimum");
    expect(res.has_fit, "fit available");
    std::printf("       %s: slope %.3f, medians", to_string(v), res.fit.slope);
    for (const auto& [n, med] : res.median_evaluations) std::printf(" %d:%.1f", n, med);
    std::printf("\n");
    expect(res.fit.slope <= 4.2, std::string(to_string(v)) + ": slope <= 4.2");
    expect(res.fit.slope > 0.0, std::string(to_string(v)) + ": slope positive");
  }
  return g_failures == 0;
}

// 6. One-step success probability structure: exact log-log slope -1
//    (deletion-assisted family) and -2 +- 0.2 (pinpoint family) across
//    n in {8,16,32,64}; the per-case fix-kind reports pass for every
//    n in 3..16, including the insertion-only counterexample guard.
bool criterion_probability_structure() {
  ExperimentSpec s;
  s.kind = ExperimentKind::probe;
  s.n_values = {8, 16, 32, 64};
  ProbeResult res = success_probability_sweep(s);
  expect(res.deletion_fixable.has_fit && res.pinpoint_fix.has_fit, "fits available");
  std::printf("       deletion-assisted slope %.3f, pinpoint slope %.3f\n",
              res.deletion_fixable.fit.slope, res.pinpoint_fix.fit.slope);
  expect(std::abs(res.deletion_fixable.fit.slope + 1.0) <= 0.2, "slope -1 +- 0.2");
  expect(std::abs(res.pinpoint_fix.fit.slope + 2.0) <= 0.2, "slope -2 +- 0.2");
  for (const auto& [n, p] : res.deletion_fixable.points)
    expect(p == Rational(1, 3 * n), "deletion family mass is exactly 1/(3n)");

  for (int n = 3; n <= 16; ++n) {
    FixKindReport rep = verify_fix_kinds(n);
    if (!rep.all_pass) std::printf("%s", rep.to_text().c_str());
    expect(rep.all_pass, "fix-kind cases at n=" + std::to_string(n));
  }
  // the guard in one line: relabeling cannot fix the blind tree, insertion can
  Tree blind = substitution_blind_tree(8);
  MutationInstance sub_front{MutationKind::substitute, 0, 1, false};
  expect(!is_optimal(apply_instance(blind, sub_front), 8),
         "front relabel trades one gap for another");
  expect(Rational::zero() < exact_success_probability(blind, 8),
         "insertion still reaches the optimum");
  return g_failures == 0;
}

// 7. Property battery over the stochastic core.
bool criterion_properties() {
  // mutation closure + size deltas, ten thousand random steps
  {
    InitConfig ic;
    ic.n = 7;
    ic.mode = InitMode::grow;
    RandomStream rng(70001);
    Tree t = random_init(ic, rng);
    for (int step = 0; step < 10000; ++step) {
      int before = t.leaf_count();
      MutationKind k = sample_kind(rng);
      t = apply_instance(t, sample_instance(k, t, 7, rng));
      if (!t.valid(7)) {
        expect(false, "closure: tree invalid after step " + std::to_string(step));
        return false;
      }
      int want = k == MutationKind::insert ? 1
                 : k == MutationKind::remove ? (before == 1 ? 0 : -1)
                                             : 0;
      if (t.leaf_count() - before != want) {
        expect(false, "closure: wrong size delta at step " + std::to_string(step));
        return false;
      }
    }
  }

  // strict monotonicity of accepted fitness in every record
  for (MeasureKind m : kAllMeasures)
    for (Variant v : {Variant::single, Variant::multi}) {
      RunConfig cfg;
      cfg.n = 6;
      cfg.measure = m;
      cfg.variant = v;
      cfg.init.mode = InitMode::perm_comb;
      cfg.budget = 300000;
      cfg.seed = 7000 + int(m) * 10 + int(v);
      RunRecord r = run(cfg);
      const bool up = direction(m) == Direction::maximize;
      for (std::size_t i = 1; i < r.improvements.size(); ++i) {
        bool mono = up ? r.improvements[i].fitness > r.improvements[i - 1].fitness
                       : r.improvements[i].fitness < r.improvements[i - 1].fitness;
        expect(mono, "monotone acceptance");
      }
    }

  // express idempotence and ham <= las over ten thousand random lists
  {
    RandomStream rng(70002);
    for (int rep = 0; rep < 10000; ++rep) {
      int n = 3 + int(rng.below(7));
      int len = 1 + int(rng.below(std::uint64_t(2 * n)));
      LabelList l;
      for (int i = 0; i < len; ++i) l.push_back(1 + int(rng.below(std::uint64_t(n))));
      ExpressedPermutation p = express(l, n);
      ExpressedPermutation q = express(p.elements(), n);
      expect(q.elements() == p.elements(), "express idempotence");
      expect(ham(p) <= las(p), "ham <= las");
    }
  }

  // enumeration mass is exactly one on assorted shapes
  {
    auto mass = [](const Tree& t, int n) {
      Rational sum = Rational::zero();
      for_each_single_mutation(
          t, n, [&](const MutationInstance&, const Tree&, const Rational& p) { sum += p; });
      return sum;
    };
    expect(mass(make_leaf(2, 4), 4) == Rational::one(), "mass: single leaf");
    expect(mass(worst_case_w1(6), 6) == Rational::one(), "mass: w1");
    expect(mass(worst_case_w2(6), 6) == Rational::one(), "mass: w2");
    InitConfig ic;
    ic.n = 9;
    ic.mode = InitMode::grow;
    RandomStream rng(70003);
    for (int i = 0; i < 8; ++i)
      expect(mass(random_init(ic, rng), 9) == Rational::one(), "mass: grown tree");
  }

  // Monte-Carlo sub-operation frequencies match enumeration within 3 SE
  {
    TreeBuilder b;
    Tree t = b.finish(b.add_join(b.add_leaf(1), b.add_leaf(2)));
    const int n = 2;
    std::map<std::string, double> exact;
    for_each_single_mutation(
        t, n, [&](const MutationInstance& mi, const Tree&, const Rational& p) {
          std::string key = std::string(to_string(mi.kind)) + ":" +
                            std::to_string(mi.target) + ":" +
                            std::to_string(mi.new_label) + ":" +
                            (mi.insert_left ? "l" : "r");
          exact[key] = p.to_double();
        });
    RandomStream rng(70004);
    const int draws = 200000;
    std::map<std::string, int> seen;
    for (int i = 0; i < draws; ++i) {
      MutationKind k = sample_kind(rng);
      MutationInstance mi = sample_instance(k, t, n, rng);
      std::string key = std::string(to_string(mi.kind)) + ":" +
                        std::to_string(mi.target) + ":" +
                        std::to_string(mi.new_label) + ":" + (mi.insert_left ? "l" : "r");
      ++seen[key];
    }
    expect(seen.size() == exact.size(), "sampler visits every enumerated instance");
    for (const auto& [key, p] : exact) {
      double freq = seen.count(key) ? seen.at(key) / double(draws) : 0.0;
      double se = std::sqrt(p * (1 - p) / draws);
      expect(std::abs(freq - p) < 3 * se, "frequency of " + key + " within 3 SE");
    }
    // end to end: success frequency against the exact success mass
    Tree probe = missing_interior_tree(6);
    const double ps = exact_success_probability(probe, 6).to_double();
    int hits = 0;
    for (int i = 0; i < draws; ++i) {
      MutationKind k = sample_kind(rng);
      if (is_optimal(apply_instance(probe, sample_instance(k, probe, 6, rng)), 6)) ++hits;
    }
    double se = std::sqrt(ps * (1 - ps) / draws);
    expect(std::abs(hits / double(draws) - ps) < 3 * se, "success frequency within 3 SE");
  }

  // bitwise determinism per seed
  for (Variant v : {Variant::single, Variant::multi}) {
    RunConfig cfg;
    cfg.n = 6;
    cfg.measure = MeasureKind::las;
    cfg.variant = v;
    cfg.init.mode = InitMode::grow;
    cfg.budget = 100000;
    cfg.seed = 70005;
    RunRecord a = run(cfg), b = run(cfg);
    bool same = a.evaluations_used == b.evaluations_used && a.hit_optimum == b.hit_optimum &&
                a.final_fitness.value == b.final_fitness.value &&
                a.max_tree_size == b.max_tree_size &&
                a.improvements.size() == b.improvements.size();
    for (std::size_t i = 0; same && i < a.improvements.size(); ++i)
      same = a.improvements[i].evaluation == b.improvements[i].evaluation &&
             a.improvements[i].fitness == b.improvements[i].fitness &&
             a.improvements[i].leaf_count == b.improvements[i].leaf_count;
    expect(same, "replay determinism");
  }

  return g_failures == 0;
}

struct Criterion {
  const char* label;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {"worked example: expressed permutation and all five measure values", criterion_worked_example},
    {"oracle equivalence: search-based and naive reference values", criterion_oracle_equivalence},
    {"exact stagnation of the single variant from adversarial starts", criterion_exact_stagnation},
    {"statistical stagnation of the multi variant at n=8", criterion_statistical_stagnation},
    {"inversion scaling: all runs solve, slope at most 4.2", criterion_inv_scaling},
    {"success-probability structure and fix-kind case reports", criterion_probability_structure},
    {"property battery: closure, monotonicity, mass, frequencies, determinism", criterion_properties},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1..7>\n", argv[0]);
    return 2;
  }
  const int k = std::atoi(argv[1]);
  if (k < 1 || k > 7) {
    std::fprintf(stderr, "criterion must be 1..7\n");
    return 2;
  }
  bool ok = false;
  try {
    ok = kCriteria[k - 1].fn();
  } catch (const std::exception& e) {
    std::printf("       exception: %s\n", e.what());
    ok = false;
  }
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", k, kCriteria[k - 1].label);
  return ok ? 0 : 1;
}
