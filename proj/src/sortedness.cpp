#include "gpsort/sortedness.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpsort {

Direction direction(MeasureKind m) {
  switch (m) {
    case MeasureKind::inv:
    case MeasureKind::ham:
    case MeasureKind::las: return Direction::maximize;
    case MeasureKind::run:
    case MeasureKind::exc: return Direction::minimize;
  }
  throw std::logic_error("unreachable");
}

std::int64_t optimal_value(MeasureKind m, int n) {
  switch (m) {
    case MeasureKind::inv: return std::int64_t(n) * (n - 1) / 2;
    case MeasureKind::ham: return n;
    case MeasureKind::run: return 1;
    case MeasureKind::las: return n;
    case MeasureKind::exc: return 0;
  }
  throw std::logic_error("unreachable");
}

const char* to_string(MeasureKind m) {
  switch (m) {
    case MeasureKind::inv: return "inv";
    case MeasureKind::ham: return "ham";
    case MeasureKind::run: return "run";
    case MeasureKind::las: return "las";
    case MeasureKind::exc: return "exc";
  }
  return "?";
}

bool parse_measure(const std::string& s, MeasureKind& out) {
  if (s == "inv") out = MeasureKind::inv;
  else if (s == "ham") out = MeasureKind::ham;
  else if (s == "run") out = MeasureKind::run;
  else if (s == "las") out = MeasureKind::las;
  else if (s == "exc") out = MeasureKind::exc;
  else return false;
  return true;
}

bool ExpressedPermutation::is_identity() const {
  if (!complete()) return false;
  for (int i = 0; i < n_; ++i)
    if (elements_[i] != i + 1) return false;
  return true;
}

ExpressedPermutation express(const LabelList& l, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  ExpressedPermutation p;
  p.n_ = n;
  p.pos_.assign(std::size_t(n) + 1, 0);
  p.elements_.reserve(std::min(l.size(), std::size_t(n)));
  for (int x : l) {
    if (x < 1 || x > n) throw std::invalid_argument("leaf label out of [1, n]");
    if (p.pos_[x] == 0) {
      p.elements_.push_back(x);
      p.pos_[x] = int(p.elements_.size());
    }
  }
  return p;
}

std::int64_t inv(const ExpressedPermutation& p) {
  // pairs i < j whose first occurrences are in ascending order, counted
  // left to right with a Fenwick tree over element values
  const auto& e = p.elements();
  const int n = p.n();
  std::vector<int> bit(std::size_t(n) + 1, 0);
  std::int64_t ordered = 0;
  for (int v : e) {
    for (int i = v - 1; i > 0; i -= i & -i) ordered += bit[i];
    for (int i = v; i <= n; i += i & -i) bit[i] += 1;
  }
  return ordered;
}

std::int64_t ham(const ExpressedPermutation& p) {
  const auto& e = p.elements();
  std::int64_t fixed = 0;
  for (int i = 0; i < int(e.size()); ++i)
    if (e[i] == i + 1) ++fixed;
  return fixed;
}

std::int64_t run_count(const ExpressedPermutation& p) {
  if (!p.complete()) return p.n() + 1;
  const auto& e = p.elements();
  std::int64_t runs = 1;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] < e[i - 1]) ++runs;
  return runs;
}

std::int64_t las(const ExpressedPermutation& p) {
  // patience sorting: tails[k] = least possible tail of an ascending
  // subsequence of length k+1
  std::vector<int> tails;
  tails.reserve(p.elements().size());
  for (int v : p.elements()) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) tails.push_back(v);
    else *it = v;
  }
  return std::int64_t(tails.size());
}

std::int64_t exc(const ExpressedPermutation& p) {
  if (!p.complete()) return p.n() + 1;
  const auto& e = p.elements();
  const int n = p.n();
  std::vector<char> seen(std::size_t(n) + 1, 0);
  int cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    int cur = start;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = e[cur - 1];  // position -> element
    }
  }
  return std::int64_t(n) - cycles;
}

std::int64_t measure_value(MeasureKind m, const ExpressedPermutation& p) {
  switch (m) {
    case MeasureKind::inv: return inv(p);
    case MeasureKind::ham: return ham(p);
    case MeasureKind::run: return run_count(p);
    case MeasureKind::las: return las(p);
    case MeasureKind::exc: return exc(p);
  }
  throw std::logic_error("unreachable");
}

Fitness evaluate(const Tree& t, MeasureKind m, int n) {
  return {measure_value(m, express(t.in_order_leaves(), n)), m};
}

bool better(MeasureKind m, const Fitness& candidate, const Fitness& incumbent) {
  if (candidate.measure != m || incumbent.measure != m)
    throw std::invalid_argument("fitness values from different measures are not comparable");
  return direction(m) == Direction::maximize ? candidate.value > incumbent.value
                                             : candidate.value < incumbent.value;
}

bool is_optimal(const Tree& t, int n) {
  return express(t.in_order_leaves(), n).is_identity();
}

}  // namespace gpsort
