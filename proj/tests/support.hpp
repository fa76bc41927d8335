// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Shared test utilities: an independent Fock-space dense oracle built
// directly from occupation-number bookkeeping (no Pauli code involved), a
// random Hermitian Hamiltonian generator, and a dense circuit simulator.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "f2q/circuit.hpp"
#include "f2q/fermion.hpp"

namespace f2q::testing {

using Complex = std::complex<double>;

// Annihilation operator a_j on the 2^n Fock basis; basis index bit j is the
// occupation of mode j and the sign is (-1)^(number of occupied modes below j).
inline Eigen::MatrixXcd ladder_down(unsigned n, unsigned j) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (!(b >> j & 1)) continue;
    int parity = __builtin_popcountll(static_cast<unsigned long long>(b) & ((1ull << j) - 1));
    a(b & ~(Eigen::Index(1) << j), b) = parity % 2 ? -1.0 : 1.0;
  }
  return a;
}

inline Eigen::MatrixXcd dense_fermionic(const fermion::FermionicHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index(1) << h.n_modes;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& op : term.ops) {
      Eigen::MatrixXcd a = ladder_down(h.n_modes, op.mode);
      p = p * (op.dagger ? Eigen::MatrixXcd(a.adjoint()) : a);
    }
    m += term.coefficient * p;
  }
  return m;
}

// M_2j = a_j + a_j^dagger, M_2j+1 = -i (a_j - a_j^dagger).
inline Eigen::MatrixXcd dense_majorana_op(unsigned n, unsigned idx) {
  Eigen::MatrixXcd a = ladder_down(n, idx / 2);
  if (idx % 2 == 0) return a + Eigen::MatrixXcd(a.adjoint());
  return Complex(0, -1) * (a - Eigen::MatrixXcd(a.adjoint()));
}

inline Eigen::MatrixXcd dense_majorana(const fermion::MajoranaHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index(1) << h.n_modes;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : h.terms) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
    for (unsigned idx : term.indices) p = p * dense_majorana_op(h.n_modes, idx);
    m += term.coefficient * p;
  }
  return m;
}

// Random Hermitian Majorana Hamiltonian: distinct increasing index sets with
// coefficients phased so each monomial times its conjugate-transpose sign
// stays put.
inline fermion::MajoranaHamiltonian random_hermitian_majorana(unsigned n, unsigned n_terms,
                                                              std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> size_dist(1, std::min(2 * n, 4u));
  std::uniform_int_distribution<unsigned> idx_dist(0, 2 * n - 1);
  std::uniform_real_distribution<double> coeff_dist(-1.0, 1.0);
  std::map<std::vector<unsigned>, Complex> acc;
  while (acc.size() < n_terms) {
    unsigned k = size_dist(rng);
    std::vector<unsigned> indices;
    while (indices.size() < k) {
      unsigned i = idx_dist(rng);
      if (std::find(indices.begin(), indices.end(), i) == indices.end()) indices.push_back(i);
    }
    std::sort(indices.begin(), indices.end());
    if (acc.count(indices)) continue;
    double v = coeff_dist(rng);
    // (M_i1...M_ik)^dagger = (-1)^(k(k-1)/2) times itself, so Hermiticity
    // wants a real coefficient when that sign is +1 and imaginary otherwise.
    bool flip = (indices.size() * (indices.size() - 1) / 2) % 2 == 1;
    acc[indices] = flip ? Complex(0, v) : Complex(v, 0);
  }
  fermion::MajoranaHamiltonian h;
  h.n_modes = n;
  for (auto& [idx, c] : acc) h.terms.push_back({c, idx});
  return h;
}

// Dense simulation of a gate list, for checking circuits against matrix
// exponentials. Conventions: RX(t) = exp(-i t X / 2), RZ(t) = exp(-i t Z / 2).
inline Eigen::MatrixXcd dense_circuit(const circuit::Circuit& c) {
  const Eigen::Index dim = Eigen::Index(1) << c.n_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  auto apply_1q = [&](const Eigen::Matrix2cd& g, unsigned q) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      for (Eigen::Index row = 0; row < dim; ++row) {
        Complex v = u(row, col);
        if (v == 0.0) continue;
        Eigen::Index bit = row >> q & 1;
        next(row & ~(Eigen::Index(1) << q), col) += g(0, bit) * v;
        next(row | (Eigen::Index(1) << q), col) += g(1, bit) * v;
      }
    }
    u = std::move(next);
  };
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case circuit::Gate::Kind::H: {
        Eigen::Matrix2cd m;
        m << 1, 1, 1, -1;
        apply_1q(m / std::sqrt(2.0), g.q0);
        break;
      }
      case circuit::Gate::Kind::RX: {
        Eigen::Matrix2cd m;
        m << std::cos(g.angle / 2), Complex(0, -std::sin(g.angle / 2)),
            Complex(0, -std::sin(g.angle / 2)), std::cos(g.angle / 2);
        apply_1q(m, g.q0);
        break;
      }
      case circuit::Gate::Kind::RZ: {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        m(0, 0) = std::exp(Complex(0, -g.angle / 2));
        m(1, 1) = std::exp(Complex(0, g.angle / 2));
        apply_1q(m, g.q0);
        break;
      }
      case circuit::Gate::Kind::CNOT: {
        Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index col = 0; col < dim; ++col) {
          for (Eigen::Index row = 0; row < dim; ++row) {
            Eigen::Index out = (row >> g.q0 & 1) ? row ^ (Eigen::Index(1) << g.q1) : row;
            next(out, col) += u(row, col);
          }
        }
        u = std::move(next);
        break;
      }
    }
  }
  return u;
}

// The Eq.-style two-site number Hamiltonian used in several goldens:
// c0 n_0 + c1 n_1 + c2 a0+ a1+ a0 a1.
inline fermion::FermionicHamiltonian two_mode_number_hamiltonian(double c0, double c1, double c2) {
  fermion::FermionicHamiltonian h;
  h.n_modes = 2;
  h.terms.push_back({c0, {{0, true}, {0, false}}});
  h.terms.push_back({c1, {{1, true}, {1, false}}});
  h.terms.push_back({c2, {{0, true}, {1, true}, {0, false}, {1, false}}});
  return h;
}

// H = c1 M0 M5 + c2 M1 M3 on three modes (the balanced-vs-adaptive
// motivating example).
inline fermion::MajoranaHamiltonian motivating_pair_hamiltonian(double c1 = 1.0, double c2 = 0.7) {
  fermion::MajoranaHamiltonian h;
  h.n_modes = 3;
  h.terms.push_back({{0.0, c1}, {0, 5}});
  h.terms.push_back({{0.0, c2}, {1, 3}});
  return h;
}

// a0+ a0 + 2 a1+ a2+ a1 a2 on three modes (the construction walk-through).
inline fermion::FermionicHamiltonian walkthrough_hamiltonian() {
  fermion::FermionicHamiltonian h;
  h.n_modes = 3;
  h.terms.push_back({1.0, {{0, true}, {0, false}}});
  h.terms.push_back({2.0, {{1, true}, {2, true}, {1, false}, {2, false}}});
  return h;
}

}  // namespace f2q::testing
