#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpsort/tree.hpp"

namespace gpsort {

// Five sortedness measures over (possibly incomplete) permutations:
//   inv - pairs in correct relative order            maximize, opt n(n-1)/2
//   ham - fixed points                               maximize, opt n
//   run - maximal ascending runs (descents + 1)      minimize, opt 1
//   las - longest strictly ascending subsequence     maximize, opt n
//   exc - minimal transpositions to sort (n - #cycles) minimize, opt 0
// run and exc are only defined on complete permutations; on incomplete
// ones both take the penalty value n+1. inv, ham, las are computed
// directly on the partial element list. Every measure attains its
// optimal value exactly on the complete identity permutation, and only
// there.
enum class MeasureKind { inv, ham, run, las, exc };
enum class Direction { maximize, minimize };

Direction direction(MeasureKind m);
std::int64_t optimal_value(MeasureKind m, int n);
const char* to_string(MeasureKind m);
bool parse_measure(const std::string& s, MeasureKind& out);

struct Fitness {
  std::int64_t value = 0;
  MeasureKind measure = MeasureKind::inv;
};

// The duplicate-free projection of a leaf list: first occurrences kept in
// order, later duplicates dropped. May be missing elements of [1, n].
class ExpressedPermutation {
 public:
  int n() const { return n_; }
  int size() const { return int(elements_.size()); }
  bool complete() const { return size() == n_; }
  const std::vector<int>& elements() const { return elements_; }

  // 1-based position of x in the element list, or nullopt if absent.
  std::optional<int> position(int x) const {
    if (x < 1 || x > n_ || pos_[x] == 0) return std::nullopt;
    return pos_[x];
  }

  bool is_identity() const;

 private:
  friend ExpressedPermutation express(const LabelList&, int);
  std::vector<int> elements_;
  std::vector<int> pos_;  // pos_[x] in [1, size], 0 when absent
  int n_ = 0;
};

// Throws std::invalid_argument when a label falls outside [1, n].
ExpressedPermutation express(const LabelList& l, int n);

std::int64_t inv(const ExpressedPermutation& p);
std::int64_t ham(const ExpressedPermutation& p);
std::int64_t run_count(const ExpressedPermutation& p);
std::int64_t las(const ExpressedPermutation& p);
std::int64_t exc(const ExpressedPermutation& p);
std::int64_t measure_value(MeasureKind m, const ExpressedPermutation& p);

Fitness evaluate(const Tree& t, MeasureKind m, int n);

// Strict direction-aware comparison; throws std::invalid_argument when
// either fitness was produced under a different measure.
bool better(MeasureKind m, const Fitness& candidate, const Fitness& incumbent);

// True iff the expressed permutation is the complete identity, the
// unique optimum shared by all five measures.
bool is_optimal(const Tree& t, int n);

}  // namespace gpsort
