#include "gpsort/mutation.hpp"

#include <stdexcept>

namespace gpsort {

const char* to_string(MutationKind k) {
  switch (k) {
    case MutationKind::substitute: return "substitute";
    case MutationKind::insert: return "insert";
    case MutationKind::remove: return "delete";
  }
  return "?";
}

const char* to_string(Variant v) {
  return v == Variant::single ? "single" : "multi";
}

bool parse_variant(const std::string& s, Variant& out) {
  if (s == "single") out = Variant::single;
  else if (s == "multi") out = Variant::multi;
  else return false;
  return true;
}

namespace {

// io maps arena id -> in-order index
std::int32_t copy_plain(const Tree& src, std::int32_t id, TreeBuilder& b) {
  const auto& nd = src.node(id);
  if (nd.is_leaf()) return b.add_leaf(nd.label);
  std::int32_t l = copy_plain(src, nd.left, b);
  std::int32_t r = copy_plain(src, nd.right, b);
  return b.add_join(l, r);
}

std::int32_t copy_mutated(const Tree& src, std::int32_t id,
                          const std::vector<std::int32_t>& io,
                          const MutationInstance& mi, TreeBuilder& b) {
  const auto& nd = src.node(id);
  if (mi.kind == MutationKind::insert && io[id] == mi.target) {
    std::int32_t kept = copy_plain(src, id, b);
    std::int32_t added = b.add_leaf(mi.new_label);
    return mi.insert_left ? b.add_join(added, kept) : b.add_join(kept, added);
  }
  if (nd.is_leaf()) {
    if (mi.kind == MutationKind::substitute && io[id] == mi.target)
      return b.add_leaf(mi.new_label);
    return b.add_leaf(nd.label);
  }
  if (mi.kind == MutationKind::remove) {
    if (src.node(nd.left).is_leaf() && io[nd.left] == mi.target)
      return copy_plain(src, nd.right, b);
    if (src.node(nd.right).is_leaf() && io[nd.right] == mi.target)
      return copy_plain(src, nd.left, b);
  }
  std::int32_t l = copy_mutated(src, nd.left, io, mi, b);
  std::int32_t r = copy_mutated(src, nd.right, io, mi, b);
  return b.add_join(l, r);
}

}  // namespace

Tree apply_instance(const Tree& t, const MutationInstance& mi) {
  const int N = t.node_count();
  if (mi.target < 0 || mi.target >= N)
    throw std::invalid_argument("mutation target out of range");
  if (mi.kind != MutationKind::insert && mi.target % 2 != 0)
    throw std::invalid_argument("substitute/delete must target a leaf (even in-order index)");
  if (mi.kind != MutationKind::remove && mi.new_label < 1)
    throw std::invalid_argument("new leaf label must be positive");
  if (mi.kind == MutationKind::remove && t.leaf_count() == 1) return t;

  std::vector<std::int32_t> io(std::size_t(N), 0);
  auto order = t.in_order_nodes();
  for (int i = 0; i < N; ++i) io[order[i]] = i;

  int delta = mi.kind == MutationKind::substitute ? 0
            : mi.kind == MutationKind::insert     ? 2
                                                  : -2;
  TreeBuilder b(N + delta);
  return b.finish(copy_mutated(t, t.root(), io, mi, b));
}

MutationKind sample_kind(RandomStream& rng) {
  return MutationKind(int(rng.below(3)));
}

MutationInstance sample_instance(MutationKind k, const Tree& t, int n,
                                 RandomStream& rng) {
  MutationInstance mi;
  mi.kind = k;
  switch (k) {
    case MutationKind::substitute:
      mi.target = 2 * int(rng.below(std::uint64_t(t.leaf_count())));
      mi.new_label = 1 + int(rng.below(std::uint64_t(n)));
      break;
    case MutationKind::insert:
      mi.target = int(rng.below(std::uint64_t(t.node_count())));
      mi.new_label = 1 + int(rng.below(std::uint64_t(n)));
      mi.insert_left = rng.below(2) == 1;
      break;
    case MutationKind::remove:
      mi.target = 2 * int(rng.below(std::uint64_t(t.leaf_count())));
      break;
  }
  return mi;
}

Tree mutate_substitute(const Tree& t, int n, RandomStream& rng) {
  return apply_instance(t, sample_instance(MutationKind::substitute, t, n, rng));
}

Tree mutate_insert(const Tree& t, int n, RandomStream& rng) {
  return apply_instance(t, sample_instance(MutationKind::insert, t, n, rng));
}

Tree mutate_delete(const Tree& t, RandomStream& rng) {
  return apply_instance(t, sample_instance(MutationKind::remove, t, 1, rng));
}

Tree hvl_mutate(const Tree& t, int k, int n, RandomStream& rng) {
  if (k < 1) throw std::invalid_argument("mutation needs at least one sub-operation");
  Tree cur = t;
  for (int i = 0; i < k; ++i) {
    MutationKind kind = sample_kind(rng);
    cur = apply_instance(cur, sample_instance(kind, cur, n, rng));
  }
  return cur;
}

int sample_k(Variant v, RandomStream& rng) {
  return v == Variant::single ? 1 : 1 + rng.poisson1();
}

}  // namespace gpsort
