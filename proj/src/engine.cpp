#include "gpsort/engine.hpp"

#include <stdexcept>

namespace gpsort {

void RunConfig::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  if (init.n != 0 && init.n != n)
    throw std::invalid_argument("init.n conflicts with run n");
  InitConfig ic = init;
  ic.n = n;
  ic.validate();
}

RunRecord run(const RunConfig& cfg) {
  cfg.validate();
  RandomStream rng(cfg.seed);

  InitConfig ic = cfg.init;
  ic.n = cfg.n;

  RunRecord rec;
  rec.seed = cfg.seed;

  Tree parent = random_init(ic, rng);
  Fitness best = evaluate(parent, cfg.measure, cfg.n);
  rec.evaluations_used = 1;
  rec.max_tree_size = parent.leaf_count();
  bool optimal = is_optimal(parent, cfg.n);

  while (!optimal && rec.evaluations_used < cfg.budget) {
    int k = sample_k(cfg.variant, rng);
    Tree child = hvl_mutate(parent, k, cfg.n, rng);
    Fitness f = evaluate(child, cfg.measure, cfg.n);
    ++rec.evaluations_used;
    if (child.leaf_count() > rec.max_tree_size) rec.max_tree_size = child.leaf_count();
    if (better(cfg.measure, f, best)) {
      parent = std::move(child);
      best = f;
      rec.improvements.push_back({rec.evaluations_used, f.value, parent.leaf_count()});
      optimal = is_optimal(parent, cfg.n);
    }
  }

  rec.hit_optimum = optimal;
  rec.final_fitness = best;
  return rec;
}

}  // namespace gpsort
