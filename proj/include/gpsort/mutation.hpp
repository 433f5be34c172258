#pragma once

#include "gpsort/rng.hpp"
#include "gpsort/tree.hpp"

namespace gpsort {

// The three sub-operations of one mutation step. Numeric values fix the
// sampling map: sample_kind draws below(3) and casts.
enum class MutationKind { substitute = 0, insert = 1, remove = 2 };

const char* to_string(MutationKind k);  // "substitute" / "insert" / "delete"

// One fully determined sub-operation. target is an in-order node index:
// even indices are leaves (leaf i at index 2*i), so substitute/remove
// targets are always even while insert may target any node including the
// root.
struct MutationInstance {
  MutationKind kind = MutationKind::substitute;
  int target = 0;
  int new_label = 0;        // substitute / insert
  bool insert_left = false; // insert: new leaf becomes the left child
  bool operator==(const MutationInstance&) const = default;
};

// Applies one sub-operation, returning a fresh tree:
//   substitute - relabel the target leaf with new_label.
//   insert     - replace the target subtree v by a join of v and a new
//                leaf u = new_label; insert_left selects J(u, v) over
//                J(v, u).
//   remove     - delete the target leaf and promote its sibling. On a
//                single-leaf tree the operation is a no-op that returns
//                the tree unchanged (it still consumes its slot in a
//                mutation sequence).
// Throws std::invalid_argument on a malformed instance (target out of
// range, wrong parity for the kind, label < 1).
Tree apply_instance(const Tree& t, const MutationInstance& mi);

// Uniform kind choice. Draw order of a full sub-operation: kind first
// (below(3): 0 substitute, 1 insert, 2 delete), then the draws of
// sample_instance for that kind.
MutationKind sample_kind(RandomStream& rng);

// Draws the remaining coordinates of a sub-operation of the given kind:
//   substitute - leaf index below(L), then label 1 + below(n); the fresh
//                label may equal the old one.
//   insert     - node index below(N) over all N = 2L-1 nodes, then label
//                1 + below(n), then one order bit below(2) (1 puts the
//                new leaf on the left).
//   remove     - leaf index below(L); with L == 1 the bound-1 draw
//                consumes nothing and the no-op instance targets index 0.
MutationInstance sample_instance(MutationKind k, const Tree& t, int n, RandomStream& rng);

// One sampled sub-operation of the given kind, applied.
Tree mutate_substitute(const Tree& t, int n, RandomStream& rng);
Tree mutate_insert(const Tree& t, int n, RandomStream& rng);
Tree mutate_delete(const Tree& t, RandomStream& rng);

// k >= 1 sequential sub-operations, each sampled on the intermediate
// tree it applies to.
Tree hvl_mutate(const Tree& t, int k, int n, RandomStream& rng);

enum class Variant { single, multi };

const char* to_string(Variant v);
bool parse_variant(const std::string& s, Variant& out);

// Number of sub-operations for one offspring: 1 for single,
// 1 + poisson1() for multi.
int sample_k(Variant v, RandomStream& rng);

}  // namespace gpsort
