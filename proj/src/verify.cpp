// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/verify.hpp"

#include <algorithm>
#include <complex>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace f2q::verify {

namespace {

using Complex = std::complex<double>;

Eigen::Matrix2cd single_qubit_matrix(pauli::Op op) {
  Eigen::Matrix2cd m;
  switch (op) {
    case pauli::Op::I: m << 1, 0, 0, 1; break;
    case pauli::Op::X: m << 0, 1, 1, 0; break;
    case pauli::Op::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case pauli::Op::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

DenseOperator string_to_matrix(const pauli::PauliString& s) {
  if (s.n_qubits() > 12) throw std::invalid_argument("dense oracle capped at 12 qubits");
  const Eigen::Index dim = Eigen::Index(1) << s.n_qubits();
  DenseOperator m = DenseOperator::Identity(1, 1);
  // Each step wraps the accumulated matrix with the next factor on the
  // outside, so the loop must end at qubit N-1 for it to sit leftmost.
  for (std::size_t k = 0; k < s.n_qubits(); ++k) {
    Eigen::Matrix2cd f = single_qubit_matrix(s.op(k));
    DenseOperator next(2 * m.rows(), 2 * m.cols());
    next << f(0, 0) * m, f(0, 1) * m, f(1, 0) * m, f(1, 1) * m;
    m = std::move(next);
  }
  static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  m *= kPhases[s.phase_exp() & 3u];
  if (m.rows() != dim) throw std::logic_error("kron dimension mismatch");
  return m;
}

DenseOperator dense_qubit_hamiltonian(const apply::QubitHamiltonian& q) {
  const Eigen::Index dim = Eigen::Index(1) << q.n_qubits;
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& t : q.terms) m += t.coefficient * string_to_matrix(t.string);
  return m;
}

bool check_majorana_algebra(const Mapping& m, bool dense) {
  if (m.strings.size() != 2ull * m.n_modes) return false;
  for (std::size_t i = 0; i < m.strings.size(); ++i) {
    if (m.strings[i].is_identity()) return false;
    if (m.strings[i].n_qubits() != m.n_modes) return false;
    for (std::size_t j = i + 1; j < m.strings.size(); ++j) {
      if (m.strings[i].same_bits(m.strings[j])) return false;
      if (!m.strings[i].anticommutes_with(m.strings[j])) return false;
    }
  }
  if (!dense) return true;
  if (m.n_modes > 6) throw std::invalid_argument("dense algebra check capped at 6 modes");
  const Eigen::Index dim = Eigen::Index(1) << m.n_modes;
  std::vector<DenseOperator> mats;
  mats.reserve(m.strings.size());
  for (const auto& s : m.strings) mats.push_back(string_to_matrix(s));
  DenseOperator eye = DenseOperator::Identity(dim, dim);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i; j < mats.size(); ++j) {
      DenseOperator anti = mats[i] * mats[j] + mats[j] * mats[i];
      DenseOperator want = (i == j) ? DenseOperator(2.0 * eye) : DenseOperator::Zero(dim, dim);
      if ((anti - want).cwiseAbs().maxCoeff() > 1e-10) return false;
    }
  }
  return true;
}

bool check_vacuum(const Mapping& m) {
  if (m.n_modes > 6) throw std::invalid_argument("vacuum check capped at 6 modes");
  if (m.strings.size() != 2ull * m.n_modes) return false;
  const Eigen::Index dim = Eigen::Index(1) << m.n_modes;
  Eigen::VectorXcd vac = Eigen::VectorXcd::Zero(dim);
  vac(0) = 1.0;
  for (unsigned j = 0; j < m.n_modes; ++j) {
    DenseOperator a = 0.5 * (string_to_matrix(m.strings[2 * j]) +
                             Complex(0, 1) * string_to_matrix(m.strings[2 * j + 1]));
    if ((a * vac).norm() >= 1e-10) return false;
  }
  return true;
}

std::vector<double> spectrum(const apply::QubitHamiltonian& q) {
  if (q.n_qubits > 10) throw std::invalid_argument("spectrum capped at 10 qubits");
  DenseOperator m = dense_qubit_hamiltonian(q);
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("spectrum: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

namespace {

// A tree shape: every internal node lists its three children; -1 marks a
// leaf slot. Nodes are created in prefix (root-first) order.
struct Shape {
  std::vector<std::array<int, 3>> nodes;
};

// All shapes with n internal nodes, distributing the remaining count over
// the three subtrees.
std::vector<Shape> all_shapes(unsigned n) {
  if (n == 0) return {Shape{}};
  std::vector<Shape> out;
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; a + b < n; ++b) {
      unsigned c = n - 1 - a - b;
      for (const auto& sa : all_shapes(a)) {
        for (const auto& sb : all_shapes(b)) {
          for (const auto& sc : all_shapes(c)) {
            Shape s;
            s.nodes.push_back({-1, -1, -1});
            auto splice = [&](const Shape& sub, unsigned branch) {
              int base = static_cast<int>(s.nodes.size());
              s.nodes[0][branch] = sub.nodes.empty() ? -1 : base;
              for (auto kids : sub.nodes) {
                for (int& k : kids)
                  if (k != -1) k += base;
                s.nodes.push_back(kids);
              }
            };
            splice(sa, 0);
            splice(sb, 1);
            splice(sc, 2);
            out.push_back(std::move(s));
          }
        }
      }
    }
  }
  return out;
}

// Realizes a shape plus a leaf labeling as a TernaryTree: shape node i is
// the internal node of qubit i; the k-th leaf slot in X,Y,Z prefix order
// holds arena leaf labels[k].
tree::TernaryTree realize(const Shape& shape, const std::vector<unsigned>& labels, unsigned n) {
  tree::TernaryTree t(n);
  unsigned next_slot = 0;
  std::vector<std::array<unsigned, 3>> kids(shape.nodes.size());
  auto walk = [&](auto&& self, unsigned node) -> void {
    for (unsigned b = 0; b < 3; ++b) {
      int c = shape.nodes[node][b];
      if (c == -1) {
        kids[node][b] = labels[next_slot++];
      } else {
        kids[node][b] = t.internal_id_of_qubit(static_cast<unsigned>(c));
        self(self, static_cast<unsigned>(c));
      }
    }
  };
  walk(walk, 0);
  for (unsigned i = 0; i < shape.nodes.size(); ++i)
    t.attach(t.internal_id_of_qubit(i), kids[i][0], kids[i][1], kids[i][2]);
  return t;
}

}  // namespace

std::pair<Mapping, std::uint64_t> brute_force_best_tree(const fermion::MajoranaHamiltonian& h) {
  const unsigned n = h.n_modes;
  if (n == 0 || n > 3) throw std::invalid_argument("brute force capped at 3 modes");
  auto shapes = all_shapes(n);
  std::vector<unsigned> labels(2 * n + 1);
  std::iota(labels.begin(), labels.end(), 0u);

  Mapping best;
  std::uint64_t best_weight = 0;
  bool have_best = false;
  for (const auto& shape : shapes) {
    auto perm = labels;
    do {
      auto t = realize(shape, perm, n);
      Mapping m;
      m.n_modes = n;
      m.method = Method::HATT;
      m.strings = t.extract_strings();
      // Leaf id k carries Majorana k; the extra leaf 2N is unassigned.
      std::vector<pauli::PauliString> by_label(2 * n, pauli::PauliString(n));
      for (unsigned leaf = 0; leaf <= 2 * n; ++leaf)
        if (leaf != 2 * n) by_label[leaf] = m.strings[leaf];
      m.strings = std::move(by_label);
      std::uint64_t w = apply::weight_report(apply::map_hamiltonian(h, m)).total_pauli_weight;
      if (!have_best || w < best_weight) {
        m.vacuum_preserving = apply::vacuum_pair_predicate(m);
        m.source_tree = std::move(t);
        best = std::move(m);
        best_weight = w;
        have_best = true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {std::move(best), best_weight};
}

}  // namespace f2q::verify
