// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "f2q/pauli.hpp"

namespace f2q::tree {

enum class Branch : std::uint8_t { X = 0, Y = 1, Z = 2 };

char branch_char(Branch b);

/// Complete ternary tree over an arena of 3N+1 nodes. Ids 0..2N are leaves
/// (one per candidate Majorana string), ids 2N+1..3N are internal; internal
/// node 2N+1+i settles qubit q_i. Built incrementally via attach(); complete
/// once every internal node has its three children and exactly one root
/// remains.
class TernaryTree {
 public:
  explicit TernaryTree(unsigned n_modes);

  /// Minimal-depth complete tree: internal nodes filled breadth-first
  /// (root = q_0), leaves numbered left-to-right in X,Y,Z traversal order so
  /// the all-Z path ends at leaf 2N.
  static TernaryTree balanced(unsigned n_modes);

  unsigned n_modes() const { return n_; }
  unsigned n_nodes() const { return 3 * n_ + 1; }
  unsigned n_leaves() const { return 2 * n_ + 1; }
  bool is_leaf(unsigned id) const { return id < n_leaves(); }
  unsigned qubit_of(unsigned internal_id) const { return internal_id - n_leaves(); }
  unsigned internal_id_of_qubit(unsigned q) const { return n_leaves() + q; }

  /// Links x,y,z as the X,Y,Z children of internal_id. Children must not
  /// already have a parent; internal_id must not already have children.
  void attach(unsigned internal_id, unsigned x, unsigned y, unsigned z);

  bool complete() const;
  unsigned root() const;  // throws unless complete

  int parent(unsigned id) const { return parent_[id]; }
  Branch parent_branch(unsigned id) const;
  bool has_children(unsigned internal_id) const;
  std::array<unsigned, 3> children(unsigned internal_id) const;

  /// Rightmost leaf of the subtree: follow Z children until a leaf.
  unsigned desc_z(unsigned id) const;

  /// String i is the root-to-leaf-i path: internal node on the path at qubit
  /// q_j contributes X_j/Y_j/Z_j per the branch taken, all else identity.
  std::vector<pauli::PauliString> extract_strings() const;

  /// Nested s-expression dump, e.g. "(q0 (X leaf0) (Y leaf1) (Z leaf2))".
  std::string to_sexpr() const;

 private:
  unsigned n_;
  std::vector<std::array<int, 3>> children_;  // indexed by internal ordinal, -1 = unset
  std::vector<int> parent_;
  std::vector<Branch> parent_branch_;
};

/// O(1) Z-descendant bookkeeping for the bottom-up construction:
/// down[node] = desc_z(node), up[leaf] = the node-set member it descends from.
struct DescMaps {
  std::vector<int> down;
  std::vector<int> up;  // -1 where absent

  static DescMaps initial(unsigned n_modes);

  /// Registers a freshly attached parent: the new node inherits the Z child's
  /// Z-descendant. O(1).
  void update(unsigned new_internal_id, unsigned x, unsigned y, unsigned z);
};

}  // namespace f2q::tree
