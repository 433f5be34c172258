#pragma once

#include <cstdint>
#include <vector>

#include "gpsort/mutation.hpp"
#include "gpsort/sortedness.hpp"
#include "gpsort/tree.hpp"

namespace gpsort {

struct RunConfig {
  int n = 0;
  MeasureKind measure = MeasureKind::inv;
  Variant variant = Variant::single;
  InitConfig init;          // init.n == 0 inherits n
  std::uint64_t budget = 1; // maximum fitness evaluations, >= 1
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct Improvement {
  std::uint64_t evaluation = 0;  // 1-based evaluation index at acceptance
  std::int64_t fitness = 0;
  int leaf_count = 0;
};

struct RunRecord {
  std::uint64_t evaluations_used = 0;
  bool hit_optimum = false;
  Fitness final_fitness{};
  std::vector<Improvement> improvements;
  int max_tree_size = 0;  // peak leaf count over parent and all offspring
  std::uint64_t seed = 0;
};

// One (1+1) run with strict-improvement acceptance. The initial tree
// costs the first evaluation; each offspring (k = sample_k sub-operations
// applied in sequence) costs one more. The loop stops at the optimum
// (unique: complete identity) or when the budget is exhausted.
//
// All randomness flows through a single RandomStream seeded with
// cfg.seed: first the init draws, then per offspring the sample_k draws
// followed by each sub-operation's kind and coordinate draws. Equal
// (seed, config) pairs replay bit-identically across platforms.
RunRecord run(const RunConfig& cfg);

}  // namespace gpsort
