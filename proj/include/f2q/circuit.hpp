// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "f2q/apply.hpp"
#include "f2q/pauli.hpp"

#include <nlohmann/json_fwd.hpp>

namespace f2q::circuit {

struct Gate {
  enum class Kind : std::uint8_t { H, RX, RZ, CNOT };

  Kind kind = Kind::H;
  unsigned q0 = 0;  // the acted qubit; CNOT control
  unsigned q1 = 0;  // CNOT target, unused otherwise
  double angle = 0.0;  // RX/RZ only

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  unsigned n_qubits = 0;
  std::vector<Gate> gates;
};

struct CircuitMetrics {
  std::uint64_t cnot_count = 0;
  std::uint64_t single_qubit_count = 0;
  std::uint64_t depth = 0;

  nlohmann::json to_json() const;
};

/// Rotation snippet implementing exp(-i*theta*S): basis changes (H for X,
/// RX(-pi/2) for Y) on the involved qubits from high to low, a CNOT ladder
/// onto the lowest involved qubit, the RZ rotation, then the mirror image.
/// Throws on the identity string (it is a global phase; callers skip it).
std::vector<Gate> trotter_term(const pauli::PauliString& s, double theta);

/// First-order Trotter circuit for exp(-i*H*t): n_steps sweeps over the
/// non-identity terms in canonical order with angle c_j*t/n_steps each.
/// Throws if any coefficient has |imaginary part| > 1e-9.
Circuit trotterize(const apply::QubitHamiltonian& q, double t, unsigned n_steps);

/// Gate counts plus unit-cost ASAP depth (each gate takes one slot on each
/// qubit it touches, scheduled greedily in list order).
CircuitMetrics metrics(const Circuit& c);

/// OpenQASM 2.0 text (h/rx/rz/cx over a single qreg).
std::string emit_qasm(const Circuit& c);

/// Reads back exactly the subset of OpenQASM 2.0 that emit_qasm produces.
Circuit parse_qasm(std::string_view text);

}  // namespace f2q::circuit
