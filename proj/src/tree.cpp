// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/tree.hpp"

#include <sstream>
#include <stdexcept>

namespace f2q::tree {

char branch_char(Branch b) {
  switch (b) {
    case Branch::X: return 'X';
    case Branch::Y: return 'Y';
    case Branch::Z: return 'Z';
  }
  throw std::logic_error("bad Branch");
}

TernaryTree::TernaryTree(unsigned n_modes)
    : n_(n_modes),
      children_(n_modes, {-1, -1, -1}),
      parent_(3 * n_modes + 1, -1),
      parent_branch_(3 * n_modes + 1, Branch::X) {
  if (n_modes == 0) throw std::invalid_argument("n_modes must be >= 1");
}

void TernaryTree::attach(unsigned internal_id, unsigned x, unsigned y, unsigned z) {
  if (is_leaf(internal_id) || internal_id >= n_nodes())
    throw std::invalid_argument("attach: not an internal node id");
  unsigned ord = qubit_of(internal_id);
  if (children_[ord][0] != -1) throw std::logic_error("attach: node already has children");
  std::array<unsigned, 3> kids = {x, y, z};
  if (x == y || y == z || x == z) throw std::invalid_argument("attach: duplicate child");
  for (unsigned b = 0; b < 3; ++b) {
    unsigned c = kids[b];
    if (c >= n_nodes()) throw std::invalid_argument("attach: child id out of range");
    if (parent_[c] != -1) throw std::logic_error("attach: child already has a parent");
    children_[ord][b] = static_cast<int>(c);
    parent_[c] = static_cast<int>(internal_id);
    parent_branch_[c] = static_cast<Branch>(b);
  }
}

bool TernaryTree::complete() const {
  unsigned roots = 0;
  for (const auto& kids : children_)
    if (kids[0] == -1) return false;
  for (unsigned id = 0; id < n_nodes(); ++id)
    if (parent_[id] == -1) ++roots;
  return roots == 1;
}

unsigned TernaryTree::root() const {
  if (!complete()) throw std::logic_error("tree is not complete");
  for (unsigned id = n_nodes(); id-- > 0;)
    if (parent_[id] == -1) return id;
  throw std::logic_error("unreachable");
}

Branch TernaryTree::parent_branch(unsigned id) const {
  if (parent_[id] == -1) throw std::logic_error("node has no parent");
  return parent_branch_[id];
}

bool TernaryTree::has_children(unsigned internal_id) const {
  return children_[qubit_of(internal_id)][0] != -1;
}

std::array<unsigned, 3> TernaryTree::children(unsigned internal_id) const {
  const auto& kids = children_[qubit_of(internal_id)];
  if (kids[0] == -1) throw std::logic_error("node has no children");
  return {static_cast<unsigned>(kids[0]), static_cast<unsigned>(kids[1]),
          static_cast<unsigned>(kids[2])};
}

unsigned TernaryTree::desc_z(unsigned id) const {
  unsigned cur = id;
  while (!is_leaf(cur)) {
    int z = children_[qubit_of(cur)][2];
    if (z == -1) break;  // childless internal node is its own frontier
    cur = static_cast<unsigned>(z);
  }
  return cur;
}

std::vector<pauli::PauliString> TernaryTree::extract_strings() const {
  if (!complete()) throw std::logic_error("extract_strings: tree is not complete");
  std::vector<pauli::PauliString> out;
  out.reserve(n_leaves());
  for (unsigned leaf = 0; leaf < n_leaves(); ++leaf) {
    pauli::PauliString s(n_);
    unsigned cur = leaf;
    while (parent_[cur] != -1) {
      unsigned p = static_cast<unsigned>(parent_[cur]);
      pauli::Op op;
      switch (parent_branch_[cur]) {
        case Branch::X: op = pauli::Op::X; break;
        case Branch::Y: op = pauli::Op::Y; break;
        default: op = pauli::Op::Z; break;
      }
      s.set_op(qubit_of(p), op);
      cur = p;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string TernaryTree::to_sexpr() const {
  std::ostringstream os;
  auto rec = [&](auto&& self, unsigned id) -> void {
    if (is_leaf(id)) {
      os << "leaf" << id;
      return;
    }
    os << "(q" << qubit_of(id);
    auto kids = children(id);
    const char* tags[3] = {"X", "Y", "Z"};
    for (unsigned b = 0; b < 3; ++b) {
      os << " (" << tags[b] << ' ';
      self(self, kids[b]);
      os << ')';
    }
    os << ')';
  };
  rec(rec, root());
  return os.str();
}

TernaryTree TernaryTree::balanced(unsigned n_modes) {
  TernaryTree t(n_modes);
  // Heap layout: positions 0..N-1 are internal (position p = qubit p),
  // children of p at 3p+1, 3p+2, 3p+3. Leaf ids follow depth-first X,Y,Z
  // order so that the all-Z path ends at leaf 2N.
  unsigned next_leaf = 0;
  std::vector<int> arena_id(3 * n_modes + 1, -1);
  auto number = [&](auto&& self, unsigned pos) -> void {
    if (pos < n_modes) {
      arena_id[pos] = static_cast<int>(t.internal_id_of_qubit(pos));
      for (unsigned b = 1; b <= 3; ++b) self(self, 3 * pos + b);
    } else {
      arena_id[pos] = static_cast<int>(next_leaf++);
    }
  };
  number(number, 0);
  for (unsigned pos = 0; pos < n_modes; ++pos) {
    t.attach(static_cast<unsigned>(arena_id[pos]), static_cast<unsigned>(arena_id[3 * pos + 1]),
             static_cast<unsigned>(arena_id[3 * pos + 2]),
             static_cast<unsigned>(arena_id[3 * pos + 3]));
  }
  return t;
}

DescMaps DescMaps::initial(unsigned n_modes) {
  DescMaps m;
  m.down.assign(3 * n_modes + 1, -1);
  m.up.assign(3 * n_modes + 1, -1);
  for (unsigned leaf = 0; leaf < 2 * n_modes + 1; ++leaf) {
    m.down[leaf] = static_cast<int>(leaf);
    m.up[leaf] = static_cast<int>(leaf);
  }
  return m;
}

void DescMaps::update(unsigned new_internal_id, unsigned /*x*/, unsigned /*y*/, unsigned z) {
  int zdesc = down[z];
  down[new_internal_id] = zdesc;
  up[zdesc] = static_cast<int>(new_internal_id);
}

}  // namespace f2q::tree
