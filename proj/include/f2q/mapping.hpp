// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f2q/pauli.hpp"
#include "f2q/tree.hpp"

#include <nlohmann/json_fwd.hpp>

namespace f2q {

enum class Method { JW, BK, BTT, HATT_UNOPT, HATT };

std::string method_name(Method m);
Method method_from_name(std::string_view name);

/// A Fermion-to-qubit mapping: string j represents Majorana operator M_j.
/// All 2N strings pairwise anticommute and are non-identity; when
/// vacuum_preserving is claimed, every (S_2j, S_2j+1) is a valid pair.
struct Mapping {
  unsigned n_modes = 0;
  Method method = Method::JW;
  bool vacuum_preserving = false;
  std::vector<pauli::PauliString> strings;
  std::optional<tree::TernaryTree> source_tree;

  nlohmann::json to_json() const;
  static Mapping from_json(const nlohmann::json& j);
};

namespace baselines {

/// M_2j = Z...Z X_j, M_2j+1 = Z...Z Y_j.
Mapping jordan_wigner(unsigned n_modes);

/// Standard binary-tree (update/parity/flip set) Bravyi-Kitaev construction.
Mapping bravyi_kitaev(unsigned n_modes);

enum class BttAssignment {
  /// Pair desc_Z of each internal node's X and Y children; vacuum-preserving.
  Vacuum,
  /// S_i = string of leaf i, leaf 2N dropped. Not vacuum-preserving in
  /// general; kept for reproducing weight figures stated in leaf order.
  LeafOrder,
};

Mapping balanced_ternary_tree(unsigned n_modes, BttAssignment assignment = BttAssignment::Vacuum);

}  // namespace baselines

/// Pairs each internal node's X/Y-child Z-descendants: Majorana 2k gets the
/// X-side string and 2k+1 the Y-side, k following qubit order. Shared by the
/// balanced-tree baseline; requires the tree's unpaired leaf to be leaf 2N
/// only when the leaves were numbered that way.
std::vector<pauli::PauliString> pair_strings_by_tree(const tree::TernaryTree& t);

}  // namespace f2q
