#include "gpsort/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gpsort {

std::int64_t neighborhood_size(const Tree& t, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const std::int64_t L = t.leaf_count();
  const std::int64_t N = t.node_count();
  return L * n + 2 * N * n + (L == 1 ? 1 : L);
}

void for_each_single_mutation(
    const Tree& t, int n,
    const std::function<void(const MutationInstance&, const Tree&, const Rational&)>& fn) {
  if (neighborhood_size(t, n) > kEnumerationGuard)
    throw std::length_error("mutation neighborhood exceeds the enumeration guard");
  const int L = t.leaf_count();
  const int N = t.node_count();

  const Rational p_sub(1, 3LL * L * n);
  for (int leaf = 0; leaf < L; ++leaf)
    for (int u = 1; u <= n; ++u) {
      MutationInstance mi{MutationKind::substitute, 2 * leaf, u, false};
      fn(mi, apply_instance(t, mi), p_sub);
    }

  const Rational p_ins(1, 6LL * N * n);
  for (int node = 0; node < N; ++node)
    for (int u = 1; u <= n; ++u)
      for (int side = 0; side < 2; ++side) {
        MutationInstance mi{MutationKind::insert, node, u, side == 1};
        fn(mi, apply_instance(t, mi), p_ins);
      }

  if (L == 1) {
    MutationInstance mi{MutationKind::remove, 0, 0, false};
    fn(mi, t, Rational(1, 3));
  } else {
    const Rational p_del(1, 3LL * L);
    for (int leaf = 0; leaf < L; ++leaf) {
      MutationInstance mi{MutationKind::remove, 2 * leaf, 0, false};
      fn(mi, apply_instance(t, mi), p_del);
    }
  }
}

std::vector<NeighborEntry> enumerate_single_mutations(const Tree& t, int n) {
  std::vector<NeighborEntry> out;
  out.reserve(std::size_t(neighborhood_size(t, n)));
  for_each_single_mutation(t, n, [&](const MutationInstance& mi, const Tree& r, const Rational& p) {
    out.push_back({mi, r, p});
  });
  return out;
}

Rational exact_success_probability(const Tree& t, int n) {
  if (is_optimal(t, n))
    throw std::invalid_argument("success probability is undefined from the optimum");
  Rational total;
  for_each_single_mutation(t, n, [&](const MutationInstance&, const Tree& r, const Rational& p) {
    if (is_optimal(r, n)) total += p;
  });
  return total;
}

Rational exact_improvement_probability(const Tree& t, int n, MeasureKind m) {
  const Fitness base = evaluate(t, m, n);
  Rational total;
  for_each_single_mutation(t, n, [&](const MutationInstance&, const Tree& r, const Rational& p) {
    if (better(m, evaluate(r, m, n), base)) total += p;
  });
  return total;
}

int brute_force_exc(const std::vector<int>& perm) {
  const int m = int(perm.size());
  if (m < 1 || m > 6)
    throw std::invalid_argument("exchange search handles sizes 1 through 6");
  std::vector<char> seen(std::size_t(m) + 1, 0);
  for (int x : perm) {
    if (x < 1 || x > m || seen[x])
      throw std::invalid_argument("exchange search needs a complete permutation");
    seen[x] = 1;
  }
  std::vector<int> identity(perm.size());
  for (int i = 0; i < m; ++i) identity[i] = i + 1;
  if (perm == identity) return 0;

  std::map<std::vector<int>, int> dist{{perm, 0}};
  std::queue<std::vector<int>> frontier;
  frontier.push(perm);
  while (!frontier.empty()) {
    std::vector<int> cur = frontier.front();
    frontier.pop();
    const int d = dist[cur];
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        std::swap(cur[i], cur[j]);
        if (!dist.count(cur)) {
          if (cur == identity) return d + 1;
          dist[cur] = d + 1;
          frontier.push(cur);
        }
        std::swap(cur[i], cur[j]);
      }
  }
  throw std::logic_error("exchange graph is connected; unreachable");
}

std::int64_t naive_fitness(const ExpressedPermutation& p, MeasureKind m) {
  const int n = p.n();
  switch (m) {
    case MeasureKind::inv: {
      std::int64_t c = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto pi = p.position(i), pj = p.position(j);
          if (pi && pj && *pi < *pj) ++c;
        }
      return c;
    }
    case MeasureKind::ham: {
      std::int64_t c = 0;
      for (int x = 1; x <= n; ++x)
        if (p.position(x) == x) ++c;
      return c;
    }
    case MeasureKind::run: {
      if (!p.complete()) return n + 1;
      std::int64_t runs = 1;
      const auto& e = p.elements();
      for (std::size_t i = 1; i < e.size(); ++i)
        if (e[i] < e[i - 1]) ++runs;
      return runs;
    }
    case MeasureKind::las: {
      const auto& e = p.elements();
      const int m_ = int(e.size());
      if (m_ > 10)
        throw std::invalid_argument("exhaustive ascending-subsequence search handles sizes up to 10");
      std::int64_t best = 0;
      for (unsigned mask = 1; mask < (1u << m_); ++mask) {
        int prev = 0, len = 0;
        bool ascending = true;
        for (int i = 0; i < m_ && ascending; ++i)
          if (mask & (1u << i)) {
            if (e[i] <= prev) ascending = false;
            prev = e[i];
            ++len;
          }
        if (ascending && len > best) best = len;
      }
      return best;
    }
    case MeasureKind::exc: {
      if (!p.complete()) return n + 1;
      // cycle walk over the inverse mapping element -> position
      std::vector<char> seen(std::size_t(n) + 1, 0);
      int cycles = 0;
      for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        ++cycles;
        int cur = start;
        while (!seen[cur]) {
          seen[cur] = 1;
          cur = *p.position(cur);
        }
      }
      return std::int64_t(n) - cycles;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

int split_point(int n) { return (n + 1) / 2; }

void require_case_n(int n, int lo) {
  if (n < lo) throw std::invalid_argument("case tree needs a larger n");
}

}  // namespace

Tree missing_first_tree(int n) {
  require_case_n(n, 3);
  LabelList l{2};
  for (int x = 2; x <= n; ++x) l.push_back(x);
  return comb_from_leaf_list(l, n);
}

Tree missing_interior_tree(int n) {
  require_case_n(n, 3);
  const int i = split_point(n);
  LabelList l;
  for (int x = 1; x <= n; ++x) {
    if (x == i) continue;
    l.push_back(x);
    if (x == i - 1 || x == i + 1) l.push_back(x);
  }
  return comb_from_leaf_list(l, n);
}

Tree missing_last_tree(int n) {
  require_case_n(n, 3);
  LabelList l;
  for (int x = 1; x <= n - 1; ++x) l.push_back(x);
  l.push_back(n - 1);
  return comb_from_leaf_list(l, n);
}

Tree misplaced_front_tree(int n) {
  require_case_n(n, 3);
  LabelList l{n};
  for (int x = 1; x <= n; ++x) l.push_back(x);
  return comb_from_leaf_list(l, n);
}

Tree misplaced_interior_tree(int n) {
  require_case_n(n, 3);
  const int i = split_point(n);
  LabelList l;
  for (int x = 1; x <= i - 1; ++x) l.push_back(x);
  l.push_back(n);
  for (int x = i; x <= n; ++x) l.push_back(x);
  return comb_from_leaf_list(l, n);
}

Tree substitution_blind_tree(int n) {
  require_case_n(n, 3);
  LabelList l;
  for (int x = 2; x <= n; ++x) l.push_back(x);
  return comb_from_leaf_list(l, n);
}

namespace {

struct KindCounts {
  int substitute = 0;
  int insert = 0;
  int remove = 0;
};

KindCounts count_successes(const Tree& t, int n) {
  KindCounts c;
  for_each_single_mutation(t, n, [&](const MutationInstance& mi, const Tree& r, const Rational&) {
    if (!is_optimal(r, n)) return;
    switch (mi.kind) {
      case MutationKind::substitute: ++c.substitute; break;
      case MutationKind::insert: ++c.insert; break;
      case MutationKind::remove: ++c.remove; break;
    }
  });
  return c;
}

FixCaseReport check_case(const std::string& name, const Tree& t, int n,
                         int want_sub, int want_ins, int want_del) {
  FixCaseReport rep;
  rep.name = name;
  rep.leaves = t.in_order_leaves();
  if (is_optimal(t, n)) {
    rep.pass = false;
    rep.note = "case tree is already optimal";
    return rep;
  }
  KindCounts c = count_successes(t, n);
  rep.substitute_successes = c.substitute;
  rep.insert_successes = c.insert;
  rep.delete_successes = c.remove;
  rep.pass = c.substitute == want_sub && c.insert == want_ins && c.remove == want_del;
  if (!rep.pass) {
    std::ostringstream os;
    os << "expected substitute=" << want_sub << " insert=" << want_ins
       << " delete=" << want_del;
    rep.note = os.str();
  }
  return rep;
}

}  // namespace

std::string FixKindReport::to_text() const {
  std::ostringstream os;
  os << "fix kinds, n=" << n << "\n";
  for (const auto& c : cases) {
    os << "  " << c.name << ": substitute=" << c.substitute_successes
       << " insert=" << c.insert_successes << " delete=" << c.delete_successes
       << (c.pass ? "  ok" : "  FAIL");
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  return os.str();
}

FixKindReport verify_fix_kinds(int n) {
  if (n < 3 || n > 16)
    throw std::invalid_argument("fix-kind verification covers 3 <= n <= 16");
  FixKindReport rep;
  rep.n = n;
  // Insert counts: a successful list gap is realized by 3 (node, side)
  // instances when interior (2 when adjacent to the front), and dedup of
  // the expressed permutation lets the new element land either inside a
  // duplicate run or right after it, so the doubled-neighbor trees admit
  // two gaps. Substitution counts for the misplaced cases include
  // replacing the stray element by any already-expressed smaller value.
  const int i = split_point(n);
  rep.cases.push_back(check_case("missing-first", missing_first_tree(n), n, 1, n, 0));
  rep.cases.push_back(check_case("missing-interior", missing_interior_tree(n), n, 2,
                                 i >= 3 ? 6 : 5, 0));
  rep.cases.push_back(check_case("missing-last", missing_last_tree(n), n, 1, 5, 0));
  rep.cases.push_back(check_case("misplaced-front", misplaced_front_tree(n), n, 1, 0, 1));
  if (n >= 4)
    rep.cases.push_back(check_case("misplaced-interior", misplaced_interior_tree(n), n, i, 0, 1));
  rep.cases.push_back(check_case("substitution-blind", substitution_blind_tree(n), n, 0, n - 1, 0));

  // relabeling the front leaf to the missing element trades one gap for
  // another; pin that down as a direct spot check
  {
    FixCaseReport& blind = rep.cases.back();
    Tree t = substitution_blind_tree(n);
    Tree r = apply_instance(t, {MutationKind::substitute, 0, 1, false});
    if (is_optimal(r, n)) {
      blind.pass = false;
      blind.note += std::string(blind.note.empty() ? "" : "; ") +
                    "front relabel unexpectedly reached the optimum";
    }
  }

  rep.all_pass = std::all_of(rep.cases.begin(), rep.cases.end(),
                             [](const FixCaseReport& c) { return c.pass; });
  return rep;
}

}  // namespace gpsort
