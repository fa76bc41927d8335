// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/mapping.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

#include "f2q/apply.hpp"

namespace f2q {

std::string method_name(Method m) {
  switch (m) {
    case Method::JW: return "jw";
    case Method::BK: return "bk";
    case Method::BTT: return "btt";
    case Method::HATT_UNOPT: return "hatt-unopt";
    case Method::HATT: return "hatt";
  }
  throw std::logic_error("bad Method");
}

Method method_from_name(std::string_view name) {
  if (name == "jw") return Method::JW;
  if (name == "bk") return Method::BK;
  if (name == "btt") return Method::BTT;
  if (name == "hatt-unopt") return Method::HATT_UNOPT;
  if (name == "hatt") return Method::HATT;
  throw std::invalid_argument("unknown mapping method: " + std::string(name));
}

nlohmann::json Mapping::to_json() const {
  nlohmann::json j;
  j["n_modes"] = n_modes;
  j["method"] = method_name(method);
  j["vacuum_preserving"] = vacuum_preserving;
  auto arr = nlohmann::json::array();
  for (const auto& s : strings) arr.push_back(s.to_dense());
  j["strings"] = std::move(arr);
  return j;
}

Mapping Mapping::from_json(const nlohmann::json& j) {
  Mapping m;
  m.n_modes = j.at("n_modes").get<unsigned>();
  m.method = method_from_name(j.at("method").get<std::string>());
  m.vacuum_preserving = j.at("vacuum_preserving").get<bool>();
  for (const auto& s : j.at("strings"))
    m.strings.push_back(pauli::PauliString::parse(s.get<std::string>()));
  if (m.strings.size() != 2ull * m.n_modes)
    throw std::invalid_argument("mapping JSON: expected 2N strings");
  return m;
}

std::vector<pauli::PauliString> pair_strings_by_tree(const tree::TernaryTree& t) {
  auto all = t.extract_strings();
  unsigned n = t.n_modes();
  std::vector<pauli::PauliString> out(2 * n, pauli::PauliString(n));
  for (unsigned q = 0; q < n; ++q) {
    auto kids = t.children(t.internal_id_of_qubit(q));
    out[2 * q] = all[t.desc_z(kids[0])];
    out[2 * q + 1] = all[t.desc_z(kids[1])];
  }
  return out;
}

namespace baselines {

Mapping jordan_wigner(unsigned n_modes) {
  if (n_modes == 0) throw std::invalid_argument("n_modes must be >= 1");
  Mapping m;
  m.n_modes = n_modes;
  m.method = Method::JW;
  m.vacuum_preserving = true;
  for (unsigned j = 0; j < n_modes; ++j) {
    pauli::PauliString even(n_modes), odd(n_modes);
    for (unsigned k = 0; k < j; ++k) {
      even.set_op(k, pauli::Op::Z);
      odd.set_op(k, pauli::Op::Z);
    }
    even.set_op(j, pauli::Op::X);
    odd.set_op(j, pauli::Op::Y);
    m.strings.push_back(std::move(even));
    m.strings.push_back(std::move(odd));
  }
  return m;
}

namespace {

// Fenwick-tree structure used by the Bravyi-Kitaev transformation.
struct Fenwick {
  std::vector<int> parent;                 // -1 for the root
  std::vector<std::vector<unsigned>> kids;

  explicit Fenwick(unsigned n) : parent(n, -1), kids(n) {
    // The subrange [left, right] is rooted at `right` itself; its pivot
    // becomes a child of the root and the recursion keeps the pivot inside
    // the left subrange.
    auto build = [&](auto&& self, unsigned left, unsigned right) -> void {
      if (left == right) return;
      unsigned pivot = (left + right) / 2;
      parent[pivot] = static_cast<int>(right);
      kids[right].push_back(pivot);
      self(self, left, pivot);
      self(self, pivot + 1, right);
    };
    build(build, 0, n - 1);
  }

  std::vector<unsigned> ancestors(unsigned j) const {
    std::vector<unsigned> out;
    for (int p = parent[j]; p != -1; p = parent[p]) out.push_back(static_cast<unsigned>(p));
    return out;
  }

  // Children of j's ancestors with index < j (the "remainder" set).
  std::vector<unsigned> remainder(unsigned j) const {
    std::vector<unsigned> out;
    for (unsigned a : ancestors(j))
      for (unsigned c : kids[a])
        if (c < j) out.push_back(c);
    return out;
  }
};

}  // namespace

Mapping bravyi_kitaev(unsigned n_modes) {
  if (n_modes == 0) throw std::invalid_argument("n_modes must be >= 1");
  Fenwick fw(n_modes);
  Mapping m;
  m.n_modes = n_modes;
  m.method = Method::BK;
  for (unsigned j = 0; j < n_modes; ++j) {
    auto update = fw.ancestors(j);
    auto flip = fw.kids[j];
    auto rem = fw.remainder(j);

    pauli::PauliString even(n_modes);
    for (unsigned q : update) even.set_op(q, pauli::Op::X);
    even.set_op(j, pauli::Op::X);
    for (unsigned q : rem) even.set_op(q, pauli::Op::Z);
    for (unsigned q : flip) even.set_op(q, pauli::Op::Z);  // parity set = rem + flip

    pauli::PauliString odd(n_modes);
    for (unsigned q : update) odd.set_op(q, pauli::Op::X);
    odd.set_op(j, pauli::Op::Y);
    for (unsigned q : rem) odd.set_op(q, pauli::Op::Z);

    m.strings.push_back(std::move(even));
    m.strings.push_back(std::move(odd));
  }
  // The Fenwick construction preserves the vacuum; claim it only after
  // checking rather than by fiat.
  m.vacuum_preserving = apply::vacuum_pair_predicate(m);
  return m;
}

Mapping balanced_ternary_tree(unsigned n_modes, BttAssignment assignment) {
  auto t = tree::TernaryTree::balanced(n_modes);
  Mapping m;
  m.n_modes = n_modes;
  m.method = Method::BTT;
  if (assignment == BttAssignment::Vacuum) {
    m.strings = pair_strings_by_tree(t);
    m.vacuum_preserving = true;
  } else {
    auto all = t.extract_strings();
    all.pop_back();  // leaf 2N (the root's Z-descendant) is discarded
    m.strings = std::move(all);
    m.vacuum_preserving = false;
  }
  m.source_tree = std::move(t);
  return m;
}

}  // namespace baselines
}  // namespace f2q
