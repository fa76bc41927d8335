// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "f2q/fermion.hpp"
#include "f2q/mapping.hpp"
#include "f2q/pauli.hpp"

#include <nlohmann/json_fwd.hpp>

namespace f2q::apply {

/// H_Q = sum c_j S_j with every S_j phase-free (the i^k folded into c_j),
/// terms unique and sorted by the canonical (z,x) key, coefficients above
/// the pruning tolerance.
struct QubitHamiltonian {
  struct Term {
    pauli::PauliString string;
    std::complex<double> coefficient;
  };

  unsigned n_qubits = 0;
  std::vector<Term> terms;

  nlohmann::json to_json() const;
  static QubitHamiltonian from_json(const nlohmann::json& j);
};

struct WeightReport {
  std::uint64_t total_pauli_weight = 0;
  std::uint64_t term_count = 0;
  std::uint64_t max_term_weight = 0;
  std::vector<std::uint64_t> per_qubit_weight;

  nlohmann::json to_json() const;
};

/// Substitutes each monomial's index list by the ordered product of mapping
/// strings, folds phases, combines like terms and prunes below tol.
QubitHamiltonian map_hamiltonian(const fermion::MajoranaHamiltonian& h, const Mapping& m,
                                 double tol = fermion::kCoeffTol);

WeightReport weight_report(const QubitHamiltonian& q);

/// True iff every (S_2j, S_2j+1) is a valid pair: exactly one position holds
/// (X, Y) in that order and all other positions act identically on |0>.
bool vacuum_pair_predicate(const Mapping& m);

bool is_hermitian(const QubitHamiltonian& q, double tol = 1e-9);

}  // namespace f2q::apply
