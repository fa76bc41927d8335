// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f2q::pauli {

/// Single-qubit Pauli operator. The numeric encoding is (x_bit | z_bit<<1):
/// I=00, X=01, Z=10, Y=11.
enum class Op : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char op_char(Op op);
Op op_from_char(char c);

/// Effect of a single-qubit Pauli on |0>.
enum class ZeroAction : std::uint8_t { KeepZero, FlipToOne, FlipToOneWithPhaseI };

/// I,Z keep |0>; X maps it to |1>; Y maps it to i|1>.
ZeroAction action_on_zero(Op op);

/// An N-qubit Pauli string in symplectic form: per-qubit (x,z) bit pairs plus
/// a global phase i^phase_exp. Qubit k decodes as (x=0,z=0) -> I,
/// (1,0) -> X, (1,1) -> Y, (0,1) -> Z.
///
/// Dense text form lists operators from qubit N-1 down to qubit 0 ("XYIZ"),
/// compact form subscripts non-identity operators ("X3 Y2 Z0").
class PauliString {
 public:
  explicit PauliString(std::size_t n_qubits);

  static PauliString identity(std::size_t n_qubits) { return PauliString(n_qubits); }

  /// Parses either the dense or the compact form. For the compact form the
  /// qubit count is max(index)+1 unless n_qubits is given explicitly.
  static PauliString parse(std::string_view text,
                           std::optional<std::size_t> n_qubits = std::nullopt);

  std::size_t n_qubits() const { return n_; }

  Op op(std::size_t k) const;
  void set_op(std::size_t k, Op op);

  bool x_bit(std::size_t k) const;
  bool z_bit(std::size_t k) const;

  unsigned phase_exp() const { return phase_; }
  void set_phase_exp(unsigned p) { phase_ = static_cast<std::uint8_t>(p & 3u); }

  /// Number of non-identity positions. Phase-blind.
  std::size_t weight() const;

  bool is_identity() const { return weight() == 0; }

  /// Group product with exact phase tracking. Throws on length mismatch.
  friend PauliString operator*(const PauliString& a, const PauliString& b);

  /// True iff the symplectic inner product is odd, i.e. the strings share an
  /// odd number of positions with distinct non-identity operators.
  bool anticommutes_with(const PauliString& other) const;

  std::string to_dense() const;
  std::string to_compact() const;

  /// Bits and phase both equal.
  bool operator==(const PauliString& other) const;

  /// Bits equal, phase ignored.
  bool same_bits(const PauliString& other) const;

  /// Canonical phase-blind ordering by (z_bits, x_bits), highest qubit first.
  static bool key_less(const PauliString& a, const PauliString& b);

 private:
  std::size_t n_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::uint8_t phase_ = 0;

  static std::size_t blocks_for(std::size_t n) { return (n + 63) / 64; }
};

}  // namespace f2q::pauli
