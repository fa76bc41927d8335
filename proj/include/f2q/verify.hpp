// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "f2q/apply.hpp"
#include "f2q/fermion.hpp"
#include "f2q/mapping.hpp"
#include "f2q/pauli.hpp"

namespace f2q::verify {

using DenseOperator = Eigen::MatrixXcd;

/// Kronecker product sigma_{N-1} (x) ... (x) sigma_0 times i^phase.
/// Guarded at 12 qubits.
DenseOperator string_to_matrix(const pauli::PauliString& s);

DenseOperator dense_qubit_hamiltonian(const apply::QubitHamiltonian& q);

/// dense=false: pairwise symplectic anticommutation, non-identity,
/// distinctness — any N. dense=true additionally verifies
/// {S_i, S_j} = 2*delta_ij*I on matrices (N <= 6).
bool check_majorana_algebra(const Mapping& m, bool dense = false);

/// Applies (S_2j + i S_2j+1)/2 to |0...0> for each mode; true iff every
/// result has norm below 1e-10. N <= 6.
bool check_vacuum(const Mapping& m);

/// Ascending eigenvalues of the dense matrix. Requires n_qubits <= 10 and a
/// Hermitian matrix (checked, tolerance 1e-9).
std::vector<double> spectrum(const apply::QubitHamiltonian& q);

/// Exhaustive minimum over every complete ternary tree shape and every leaf
/// labeling (N <= 3): returns a minimizing mapping and its total Pauli weight
/// on h. Optimality oracle for the greedy construction.
std::pair<Mapping, std::uint64_t> brute_force_best_tree(const fermion::MajoranaHamiltonian& h);

}  // namespace f2q::verify
