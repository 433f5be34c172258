#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpsort/rng.hpp"

namespace gpsort {

using LabelList = std::vector<int>;

// Full binary join-tree. Internal nodes are the arity-2 join function,
// leaves carry labels from [1, n] (duplicates and gaps allowed). Nodes
// live in an arena; a Tree is immutable once built, mutation operators
// produce fresh trees.
//
// In the in-order node sequence of a full binary tree, leaves and
// internal nodes strictly alternate, with leaves at the even indices;
// leaf i (0-based, left to right) sits at in-order index 2*i. Mutation
// targets are addressed by in-order node index throughout.
class Tree {
 public:
  struct Node {
    std::int32_t label = 0;  // > 0 for leaves, 0 for joins
    std::int32_t left = -1;
    std::int32_t right = -1;
    bool is_leaf() const { return label > 0; }
  };

  int leaf_count() const { return leaf_count_; }
  int node_count() const { return int(nodes_.size()); }
  std::int32_t root() const { return root_; }
  const Node& node(std::int32_t id) const { return nodes_[id]; }

  // Leaf labels left to right.
  LabelList in_order_leaves() const;
  // Arena ids in in-order sequence.
  std::vector<std::int32_t> in_order_nodes() const;

  // Structural soundness: full binary shape, exactly one root, arena
  // fully reachable, labels in [1, n], node_count == 2*leaf_count - 1.
  bool valid(int n) const;

  // Parenthesized rendering, e.g. "J(J(2,5),1)".
  std::string to_text() const;

 private:
  friend class TreeBuilder;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  int leaf_count_ = 0;
};

// Bottom-up arena construction: children must be added before parents.
class TreeBuilder {
 public:
  explicit TreeBuilder(int reserve_nodes = 0);
  std::int32_t add_leaf(int label);
  std::int32_t add_join(std::int32_t left, std::int32_t right);
  Tree finish(std::int32_t root);

 private:
  Tree t_;
};

enum class InitMode { grow, perm_comb, w1, w2, explicit_list };

const char* to_string(InitMode m);
// Parses the CLI spellings "grow", "perm", "w1", "w2".
bool parse_init_mode(const std::string& s, InitMode& out);

// ceil(log2 n) + 2
int default_depth_cap(int n);

struct InitConfig {
  int n = 0;
  InitMode mode = InitMode::perm_comb;
  double p_join = 0.5;        // grow: probability of drawing the join symbol
  int depth_cap = 0;          // grow: 0 means default_depth_cap(n)
  LabelList explicit_labels;  // explicit_list only

  void validate() const;  // throws std::invalid_argument
};

// Single-leaf tree.
Tree make_leaf(int label, int n);

// Left-deep comb J(...J(J(l1,l2),l3)..., lk) whose in-order leaf list is
// exactly `labels`.
Tree comb_from_leaf_list(const LabelList& labels, int n);

// Comb over (n, ..., n, 1, 2, ..., n) with n+1 copies of n in front;
// expressed permutation (n, 1, 2, ..., n-1). Requires n >= 3.
Tree worst_case_w1(int n);

// Comb over (n, ..., n, 2, 3, ..., n-1, 1, n) with n+1 copies of n in
// front; expressed permutation (n, 2, 3, ..., n-1, 1). Requires n >= 3.
Tree worst_case_w2(int n);

// Draw order (documented for replay):
//   grow      - per growth point at depth < depth_cap, one uniform01()
//               branch decision (< p_join grows a join); at depth_cap the
//               node is a leaf with no decision draw; every leaf then
//               draws its label via below(n). Nodes are expanded
//               depth-first, left child before right. The root sits at
//               depth 1.
//   perm_comb - Fisher-Yates shuffle of (1..n): for i = n-1 down to 1,
//               j = below(i+1), swap a[i], a[j]; then a left-deep comb.
//   w1 / w2 / explicit_list - deterministic, no draws.
Tree random_init(const InitConfig& cfg, RandomStream& rng);

LabelList in_order_leaves(const Tree& t);

struct TreeCounts {
  int leaf_count = 0;
  int node_count = 0;
};
TreeCounts counts(const Tree& t);

}  // namespace gpsort
