#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gpsort/mutation.hpp"
#include "gpsort/rational.hpp"
#include "gpsort/sortedness.hpp"
#include "gpsort/tree.hpp"

namespace gpsort {

// Exact enumeration of the one-step mutation neighborhood, with the
// exact rational probability of each outcome, plus slow reference
// implementations used to cross-check the fast paths.

struct NeighborEntry {
  MutationInstance instance;
  Tree result;
  Rational probability;
};

inline constexpr std::int64_t kEnumerationGuard = 10'000'000;

// L*n substitutions + 2*N*n insertions + L deletions (one no-op entry
// when L == 1), where L = leaf count and N = 2L-1.
std::int64_t neighborhood_size(const Tree& t, int n);

// Visits every distinct sub-operation instance exactly once, in a fixed
// order: substitutions (leaf index ascending, label ascending), then
// insertions (in-order node index ascending, label ascending, right
// placement before left), then deletions (leaf index ascending). Entry
// probabilities are 1/(3Ln), 1/(6Nn) and 1/(3L) respectively; the
// single-leaf no-op deletion carries 1/3. They sum to exactly 1.
// Throws std::length_error when neighborhood_size exceeds
// kEnumerationGuard.
void for_each_single_mutation(
    const Tree& t, int n,
    const std::function<void(const MutationInstance&, const Tree&, const Rational&)>& fn);

// Materialized form of the above; prefer the streaming fold for anything
// beyond small trees.
std::vector<NeighborEntry> enumerate_single_mutations(const Tree& t, int n);

// Probability that one sub-operation turns t into the optimum. Requires
// t non-optimal (throws std::invalid_argument otherwise: from the
// optimum, expression-neutral edits would count as vacuous successes).
Rational exact_success_probability(const Tree& t, int n);

// Probability that one sub-operation strictly improves fitness under m.
// Zero exactly when t is a local optimum of the single-step process.
Rational exact_improvement_probability(const Tree& t, int n, MeasureKind m);

// Minimal number of element exchanges that sort perm, by breadth-first
// search over permutations. perm must be a complete permutation of
// 1..perm.size() with size <= 6.
int brute_force_exc(const std::vector<int>& perm);

// Literal per-definition fitness, kept deliberately naive: quadratic
// pair scan for inv, position walk for ham, subset enumeration for las
// (size <= 10), cycle walk for exc. Used only to cross-check
// measure_value.
std::int64_t naive_fitness(const ExpressedPermutation& p, MeasureKind m);

// Canonical one-edit-from-sorted combs used by the fix-kind case checks
// and the success-probability sweeps. i = ceil(n/2) below.
Tree missing_first_tree(int n);        // (2, 2, 3, ..., n)
Tree missing_interior_tree(int n);     // (1, .., i-1, i-1, i+1, i+1, .., n)
Tree missing_last_tree(int n);         // (1, ..., n-1, n-1)
Tree misplaced_front_tree(int n);      // (n, 1, 2, ..., n)
Tree misplaced_interior_tree(int n);   // (1, .., i-1, n, i, .., n)
Tree substitution_blind_tree(int n);   // (2, 3, ..., n): only insertion fixes it

struct FixCaseReport {
  std::string name;
  LabelList leaves;
  int substitute_successes = 0;
  int insert_successes = 0;
  int delete_successes = 0;
  bool pass = false;
  std::string note;
};

struct FixKindReport {
  int n = 0;
  std::vector<FixCaseReport> cases;
  bool all_pass = false;
  std::string to_text() const;
};

// Enumerates the full neighborhood of each canonical tree and checks
// which sub-operation kinds reach the optimum, against exact expected
// instance counts (i = ceil(n/2); L = leaf count):
//   missing-first        substitute 1   insert n            delete 0
//   missing-interior     substitute 2   insert 5 (6, i>=3)  delete 0
//   missing-last         substitute 1   insert 5            delete 0
//   misplaced-front      substitute 1   insert 0            delete 1
//   misplaced-interior   substitute i   insert 0            delete 1  (n >= 4)
//   substitution-blind   substitute 0   insert n-1          delete 0
// Insert counts exceed one instance per list gap because several
// (node, side) pairs realize the same gap, and expression dedup makes
// the gap inside a duplicate run equivalent to the gap after it. The
// misplaced cases accept substitution by any already-expressed smaller
// value (the duplicate evaporates on expression), hence i instances
// rather than 2. misplaced-interior is skipped at n == 3, where the
// pattern degenerates and an insertion fix appears.
// Also asserts that on the substitution-blind tree the specific
// instance "substitute leaf 0 by 1" is not optimal. Requires 3 <= n <= 16.
FixKindReport verify_fix_kinds(int n);

}  // namespace gpsort
