#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gpsort/rng.hpp"
#include "gpsort/sortedness.hpp"
#include "gpsort/tree.hpp"

using namespace gpsort;

TEST_CASE("expression keeps first occurrences in order") {
  ExpressedPermutation p = express({2, 2, 3, 4, 5, 1, 6, 3}, 6);
  CHECK(p.elements() == std::vector<int>{2, 3, 4, 5, 1, 6});
  CHECK(p.complete());
  CHECK(p.position(2) == 1);
  CHECK(p.position(6) == 6);
  CHECK_FALSE(p.is_identity());

  ExpressedPermutation q = express({4, 4, 1}, 6);
  CHECK(q.size() == 2);
  CHECK_FALSE(q.complete());
  CHECK_FALSE(q.position(2).has_value());

  CHECK_THROWS_AS(express({0, 1}, 6), std::invalid_argument);
  CHECK_THROWS_AS(express({7}, 6), std::invalid_argument);
}

TEST_CASE("worked example values on all five measures") {
  // one tree, five frozen values, cross-checked by hand from the
  // definitions: expressed (2,3,4,5,1,6) at n = 6
  Tree t = comb_from_leaf_list({2, 2, 3, 4, 5, 1, 6, 3}, 6);
  CHECK(evaluate(t, MeasureKind::inv, 6).value == 11);
  CHECK(evaluate(t, MeasureKind::ham, 6).value == 1);
  CHECK(evaluate(t, MeasureKind::run, 6).value == 2);
  CHECK(evaluate(t, MeasureKind::las, 6).value == 5);
  CHECK(evaluate(t, MeasureKind::exc, 6).value == 4);
  CHECK(evaluate(t, MeasureKind::exc, 6).measure == MeasureKind::exc);
  CHECK_FALSE(is_optimal(t, 6));
}

TEST_CASE("incomplete permutations take the run and exc penalty") {
  ExpressedPermutation p = express({2, 3, 1}, 4);  // 4 missing
  CHECK(run_count(p) == 5);
  CHECK(exc(p) == 5);
  // inv, ham, las still read the partial list
  CHECK(inv(p) == 1);   // only the value pair (2,3) sits in correct order
  CHECK(ham(p) == 0);   // 2@1, 3@2, 1@3: no fixed point
  CHECK(las(p) == 2);   // (2,3)

  ExpressedPermutation empty_side = express({2, 2, 2}, 5);
  CHECK(run_count(empty_side) == 6);
  CHECK(exc(empty_side) == 6);
  CHECK(inv(empty_side) == 0);
  CHECK(las(empty_side) == 1);
}

TEST_CASE("optimal values and directions") {
  CHECK(optimal_value(MeasureKind::inv, 6) == 15);
  CHECK(optimal_value(MeasureKind::ham, 6) == 6);
  CHECK(optimal_value(MeasureKind::run, 6) == 1);
  CHECK(optimal_value(MeasureKind::las, 6) == 6);
  CHECK(optimal_value(MeasureKind::exc, 6) == 0);
  CHECK(direction(MeasureKind::inv) == Direction::maximize);
  CHECK(direction(MeasureKind::ham) == Direction::maximize);
  CHECK(direction(MeasureKind::run) == Direction::minimize);
  CHECK(direction(MeasureKind::las) == Direction::maximize);
  CHECK(direction(MeasureKind::exc) == Direction::minimize);
}

TEST_CASE("measure parsing round trips") {
  MeasureKind m;
  for (const char* s : {"inv", "ham", "run", "las", "exc"}) {
    REQUIRE(parse_measure(s, m));
    CHECK(std::string(to_string(m)) == s);
  }
  CHECK_FALSE(parse_measure("kendall", m));
}

TEST_CASE("better is strict and direction-aware") {
  auto f = [](MeasureKind m, std::int64_t v) { return Fitness{v, m}; };
  CHECK(better(MeasureKind::inv, f(MeasureKind::inv, 5), f(MeasureKind::inv, 4)));
  CHECK_FALSE(better(MeasureKind::inv, f(MeasureKind::inv, 4), f(MeasureKind::inv, 4)));
  CHECK_FALSE(better(MeasureKind::inv, f(MeasureKind::inv, 3), f(MeasureKind::inv, 4)));
  CHECK(better(MeasureKind::run, f(MeasureKind::run, 1), f(MeasureKind::run, 2)));
  CHECK_FALSE(better(MeasureKind::run, f(MeasureKind::run, 2), f(MeasureKind::run, 2)));
  CHECK_THROWS_AS(better(MeasureKind::inv, f(MeasureKind::ham, 5), f(MeasureKind::inv, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(better(MeasureKind::inv, f(MeasureKind::inv, 5), f(MeasureKind::run, 4)),
                  std::invalid_argument);
}

TEST_CASE("every measure is optimal exactly at the complete identity") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      bool ident = std::is_sorted(perm.begin(), perm.end());
      Tree t = comb_from_leaf_list(perm, n);
      CHECK(is_optimal(t, n) == ident);
      for (MeasureKind m : {MeasureKind::inv, MeasureKind::ham, MeasureKind::run,
                            MeasureKind::las, MeasureKind::exc}) {
        bool at_opt = evaluate(t, m, n).value == optimal_value(m, n);
        CHECK(at_opt == ident);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("edge permutations and the complement identity") {
  // reversal: no correct pair, singleton ascents, n/2 transposition pairs
  ExpressedPermutation rev = express({6, 5, 4, 3, 2, 1}, 6);
  CHECK(inv(rev) == 0);
  CHECK(las(rev) == 1);
  CHECK(run_count(rev) == 6);
  CHECK(ham(express({2, 1}, 2)) == 0);

  CHECK(evaluate(worst_case_w1(6), MeasureKind::run, 6).value == 2);
  CHECK(evaluate(comb_from_leaf_list({1, 2, 3, 4, 5, 6}, 6),
                 MeasureKind::exc, 6).value == 0);

  // duplicates are absorbed before the optimality check
  CHECK(is_optimal(comb_from_leaf_list({1, 1, 2, 3}, 3), 3));
  CHECK_FALSE(is_optimal(comb_from_leaf_list({1, 2}, 3), 3));

  // complete perms: correct pairs + inverted pairs = n(n-1)/2, and
  // run == 1 iff las == n iff identity
  std::vector<int> perm{1, 2, 3, 4, 5};
  do {
    ExpressedPermutation p = express(perm, 5);
    std::int64_t inverted = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (perm[i] > perm[j]) ++inverted;
    CHECK(inv(p) + inverted == 10);
    bool ident = p.is_identity();
    CHECK((run_count(p) == 1) == ident);
    CHECK((las(p) == 5) == ident);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("incomplete expressions are never optimal under any measure") {
  for (int n = 2; n <= 5; ++n) {
    // identity prefix with the last element missing: the sharpest case
    LabelList l;
    for (int x = 1; x < n; ++x) l.push_back(x);
    l.push_back(n - 1);
    ExpressedPermutation p = express(l, n);
    REQUIRE_FALSE(p.complete());
    for (MeasureKind m : {MeasureKind::inv, MeasureKind::ham, MeasureKind::run,
                          MeasureKind::las, MeasureKind::exc})
      CHECK(measure_value(m, p) != optimal_value(m, n));
  }
}

TEST_CASE("fixed points form an ascending subsequence: ham <= las") {
  RandomStream rng(555);
  for (int rep = 0; rep < 300; ++rep) {
    int n = 3 + int(rng.below(6));
    int len = 1 + int(rng.below(std::uint64_t(2 * n)));
    LabelList l;
    for (int i = 0; i < len; ++i) l.push_back(1 + int(rng.below(std::uint64_t(n))));
    ExpressedPermutation p = express(l, n);
    CHECK(ham(p) <= las(p));
    CHECK(las(p) <= p.size());
    CHECK(inv(p) <= std::int64_t(p.size()) * (p.size() - 1) / 2);
  }
}
