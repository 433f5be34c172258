#include "gpsort/tree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gpsort {

LabelList Tree::in_order_leaves() const {
  LabelList out;
  out.reserve(leaf_count_);
  for (std::int32_t id : in_order_nodes()) {
    const Node& nd = nodes_[id];
    if (nd.is_leaf()) out.push_back(nd.label);
  }
  return out;
}

std::vector<std::int32_t> Tree::in_order_nodes() const {
  std::vector<std::int32_t> order;
  order.reserve(nodes_.size());
  std::vector<std::int32_t> stack;
  std::int32_t cur = root_;
  while (cur != -1 || !stack.empty()) {
    while (cur != -1) {
      stack.push_back(cur);
      cur = nodes_[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    order.push_back(cur);
    cur = nodes_[cur].right;
  }
  return order;
}

bool Tree::valid(int n) const {
  if (root_ < 0 || root_ >= std::int32_t(nodes_.size())) return false;
  if (nodes_.empty()) return false;
  int leaves = 0;
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<std::int32_t> stack{root_};
  while (!stack.empty()) {
    std::int32_t id = stack.back();
    stack.pop_back();
    if (id < 0 || id >= std::int32_t(nodes_.size())) return false;
    if (seen[id]) return false;  // sharing or a cycle
    seen[id] = 1;
    const Node& nd = nodes_[id];
    if (nd.is_leaf()) {
      if (nd.label < 1 || nd.label > n) return false;
      if (nd.left != -1 || nd.right != -1) return false;
      ++leaves;
    } else {
      if (nd.left == -1 || nd.right == -1) return false;
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
    return false;  // orphaned arena nodes
  if (leaves != leaf_count_) return false;
  return int(nodes_.size()) == 2 * leaves - 1;
}

std::string Tree::to_text() const {
  std::string out;
  std::vector<std::pair<std::int32_t, int>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto [id, state] = stack.back();
    stack.pop_back();
    if (id == -2) {  // sentinel emitted between children / at close
      out += state == 0 ? "," : ")";
      continue;
    }
    const Node& nd = nodes_[id];
    if (nd.is_leaf()) {
      out += std::to_string(nd.label);
    } else {
      out += "J(";
      stack.push_back({-2, 1});
      stack.push_back({nd.right, 0});
      stack.push_back({-2, 0});
      stack.push_back({nd.left, 0});
    }
  }
  return out;
}

TreeBuilder::TreeBuilder(int reserve_nodes) {
  if (reserve_nodes > 0) t_.nodes_.reserve(reserve_nodes);
}

std::int32_t TreeBuilder::add_leaf(int label) {
  if (label < 1) throw std::invalid_argument("leaf label must be positive");
  Tree::Node nd;
  nd.label = label;
  t_.nodes_.push_back(nd);
  ++t_.leaf_count_;
  return std::int32_t(t_.nodes_.size()) - 1;
}

std::int32_t TreeBuilder::add_join(std::int32_t left, std::int32_t right) {
  std::int32_t sz = std::int32_t(t_.nodes_.size());
  if (left < 0 || left >= sz || right < 0 || right >= sz || left == right)
    throw std::invalid_argument("join children must be distinct existing nodes");
  Tree::Node nd;
  nd.left = left;
  nd.right = right;
  t_.nodes_.push_back(nd);
  return sz;
}

Tree TreeBuilder::finish(std::int32_t root) {
  if (root < 0 || root >= std::int32_t(t_.nodes_.size()))
    throw std::invalid_argument("root id out of range");
  t_.root_ = root;
  return std::move(t_);
}

const char* to_string(InitMode m) {
  switch (m) {
    case InitMode::grow: return "grow";
    case InitMode::perm_comb: return "perm";
    case InitMode::w1: return "w1";
    case InitMode::w2: return "w2";
    case InitMode::explicit_list: return "explicit";
  }
  return "?";
}

bool parse_init_mode(const std::string& s, InitMode& out) {
  if (s == "grow") out = InitMode::grow;
  else if (s == "perm") out = InitMode::perm_comb;
  else if (s == "w1") out = InitMode::w1;
  else if (s == "w2") out = InitMode::w2;
  else return false;
  return true;
}

int default_depth_cap(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return std::bit_width(unsigned(n - 1)) + 2;  // ceil(log2 n) + 2
}

void InitConfig::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (mode == InitMode::grow) {
    if (!(p_join >= 0.0 && p_join < 1.0))
      throw std::invalid_argument("p_join must lie in [0, 1)");
    if (depth_cap < 0) throw std::invalid_argument("depth_cap must be >= 1 (0 selects the default)");
  }
  if (mode == InitMode::w1 && n < 3)
    throw std::invalid_argument("w1 needs n >= 3");
  if (mode == InitMode::w2 && n < 3)
    throw std::invalid_argument("w2 needs n >= 3");
  if (mode == InitMode::explicit_list) {
    if (explicit_labels.empty())
      throw std::invalid_argument("explicit leaf list must be non-empty");
    for (int x : explicit_labels)
      if (x < 1 || x > n) throw std::invalid_argument("explicit leaf label out of [1, n]");
  }
}

Tree make_leaf(int label, int n) {
  if (n < 2 || label < 1 || label > n)
    throw std::invalid_argument("leaf label out of [1, n]");
  TreeBuilder b(1);
  return b.finish(b.add_leaf(label));
}

Tree comb_from_leaf_list(const LabelList& labels, int n) {
  if (labels.empty()) throw std::invalid_argument("leaf list must be non-empty");
  for (int x : labels)
    if (x < 1 || x > n) throw std::invalid_argument("leaf label out of [1, n]");
  TreeBuilder b(2 * int(labels.size()) - 1);
  std::int32_t cur = b.add_leaf(labels[0]);
  for (std::size_t i = 1; i < labels.size(); ++i)
    cur = b.add_join(cur, b.add_leaf(labels[i]));
  return b.finish(cur);
}

Tree worst_case_w1(int n) {
  if (n < 3) throw std::invalid_argument("w1 needs n >= 3");
  LabelList l(n + 1, n);
  for (int x = 1; x <= n; ++x) l.push_back(x);
  return comb_from_leaf_list(l, n);
}

Tree worst_case_w2(int n) {
  if (n < 3) throw std::invalid_argument("w2 needs n >= 3");
  LabelList l(n + 1, n);
  for (int x = 2; x <= n - 1; ++x) l.push_back(x);
  l.push_back(1);
  l.push_back(n);
  return comb_from_leaf_list(l, n);
}

namespace {

std::int32_t grow_node(TreeBuilder& b, int depth, int cap, double p_join, int n,
                       RandomStream& rng) {
  if (depth < cap && rng.uniform01() < p_join) {
    std::int32_t l = grow_node(b, depth + 1, cap, p_join, n, rng);
    std::int32_t r = grow_node(b, depth + 1, cap, p_join, n, rng);
    return b.add_join(l, r);
  }
  return b.add_leaf(1 + int(rng.below(std::uint64_t(n))));
}

}  // namespace

Tree random_init(const InitConfig& cfg, RandomStream& rng) {
  cfg.validate();
  switch (cfg.mode) {
    case InitMode::grow: {
      int cap = cfg.depth_cap > 0 ? cfg.depth_cap : default_depth_cap(cfg.n);
      TreeBuilder b;
      return b.finish(grow_node(b, 1, cap, cfg.p_join, cfg.n, rng));
    }
    case InitMode::perm_comb: {
      LabelList a(cfg.n);
      std::iota(a.begin(), a.end(), 1);
      for (int i = cfg.n - 1; i >= 1; --i) {
        int j = int(rng.below(std::uint64_t(i) + 1));
        std::swap(a[i], a[j]);
      }
      return comb_from_leaf_list(a, cfg.n);
    }
    case InitMode::w1: return worst_case_w1(cfg.n);
    case InitMode::w2: return worst_case_w2(cfg.n);
    case InitMode::explicit_list: return comb_from_leaf_list(cfg.explicit_labels, cfg.n);
  }
  throw std::logic_error("unreachable");
}

LabelList in_order_leaves(const Tree& t) { return t.in_order_leaves(); }

TreeCounts counts(const Tree& t) { return {t.leaf_count(), t.node_count()}; }

}  // namespace gpsort
