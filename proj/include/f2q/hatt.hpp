// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "f2q/fermion.hpp"
#include "f2q/mapping.hpp"
#include "f2q/tree.hpp"

namespace f2q::hatt {

/// Hamiltonian rewritten over tree-node ids. Initially every Majorana index i
/// is leaf i; merging three nodes under a fresh internal node replaces them in
/// each term, keeping the new node only when an odd number of the three was
/// present. Terms that shrink to the empty set stay (they never contribute
/// weight); duplicate sets are not combined.
struct ReducedHamiltonian {
  unsigned n_modes = 0;
  std::vector<std::vector<unsigned>> terms;  // strictly increasing node ids

  static ReducedHamiltonian from_majorana(const fermion::MajoranaHamiltonian& h);

  /// Pauli weight the merge of `sel` would place on its qubit: one per term
  /// whose intersection with sel has size 1 or 2. Deliberately naive; the
  /// builder keeps an incidence-indexed fast path that must agree with this.
  std::uint64_t weight_on_qubit(const std::array<unsigned, 3>& sel) const;

  /// Applies the merge. Returns the ids of terms that received new_id.
  std::vector<unsigned> reduce(const std::array<unsigned, 3>& sel, unsigned new_id);
};

/// Snapshot handed to the step observer before a merge is applied.
struct StepInfo {
  unsigned step = 0;      // 0-based; the new internal node settles qubit `step`
  unsigned new_node = 0;  // arena id of that node
  unsigned ox = 0, oy = 0, oz = 0;  // chosen children in X/Y/Z branch order
  std::uint64_t weight = 0;
  std::vector<unsigned> node_set;  // frontier before the merge, ascending
  ReducedHamiltonian state;        // reduced Hamiltonian before the merge
  /// Every feasible child triple this step, in scan order (X,Y,Z roles).
  std::vector<std::array<unsigned, 3>> candidates;
  /// (O_X, O_Z) pairs rejected before weighing: either O_X's Z-descendant is
  /// the vacuum leaf 2N, or the Y partner coincides with O_Z.
  std::vector<std::pair<unsigned, unsigned>> discarded;
};

struct Options {
  /// Recompute descendants by walking the tree instead of the O(1) maps.
  bool explicit_traversal = false;
  /// Worker threads for the candidate scan; 0 = hardware concurrency.
  /// The result is identical for any thread count.
  unsigned threads = 1;
  /// Called once per step, before the merge. Forces a single-threaded scan
  /// and per-step snapshots; intended for tracing and tests.
  std::function<void(const StepInfo&)> observer;
};

/// Greedy pair scan with the partner trick: candidate X children are the
/// frontier nodes, the Y child is forced to be the node holding the partner
/// leaf, and weight ties break on the first (O_X, O_Z) pair in scan order.
/// The produced mapping is vacuum-preserving; O(N^3) overall.
Mapping build(const fermion::MajoranaHamiltonian& h, const Options& opts = {});

/// Exhaustive triple scan (no pairing constraint, no descendant maps);
/// O(N^5) and not vacuum-preserving. Kept as the comparison baseline.
Mapping build_unopt(const fermion::MajoranaHamiltonian& h, const Options& opts = {});

}  // namespace f2q::hatt
