// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace f2q::pauli {

char op_char(Op op) {
  switch (op) {
    case Op::I: return 'I';
    case Op::X: return 'X';
    case Op::Y: return 'Y';
    case Op::Z: return 'Z';
  }
  throw std::logic_error("bad Op");
}

Op op_from_char(char c) {
  switch (c) {
    case 'I': return Op::I;
    case 'X': return Op::X;
    case 'Y': return Op::Y;
    case 'Z': return Op::Z;
    default: throw std::invalid_argument(std::string("not a Pauli letter: ") + c);
  }
}

ZeroAction action_on_zero(Op op) {
  switch (op) {
    case Op::I:
    case Op::Z: return ZeroAction::KeepZero;
    case Op::X: return ZeroAction::FlipToOne;
    case Op::Y: return ZeroAction::FlipToOneWithPhaseI;
  }
  throw std::logic_error("bad Op");
}

PauliString::PauliString(std::size_t n_qubits)
    : n_(n_qubits), x_(blocks_for(n_qubits), 0), z_(blocks_for(n_qubits), 0) {}

Op PauliString::op(std::size_t k) const {
  unsigned bits = static_cast<unsigned>(x_bit(k)) | (static_cast<unsigned>(z_bit(k)) << 1);
  return static_cast<Op>(bits);
}

void PauliString::set_op(std::size_t k, Op op) {
  if (k >= n_) throw std::out_of_range("qubit index out of range");
  auto bits = static_cast<unsigned>(op);
  std::uint64_t mask = std::uint64_t{1} << (k % 64);
  if (bits & 1u)
    x_[k / 64] |= mask;
  else
    x_[k / 64] &= ~mask;
  if (bits & 2u)
    z_[k / 64] |= mask;
  else
    z_[k / 64] &= ~mask;
}

bool PauliString::x_bit(std::size_t k) const {
  if (k >= n_) throw std::out_of_range("qubit index out of range");
  return (x_[k / 64] >> (k % 64)) & 1u;
}

bool PauliString::z_bit(std::size_t k) const {
  if (k >= n_) throw std::out_of_range("qubit index out of range");
  return (z_[k / 64] >> (k % 64)) & 1u;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t b = 0; b < x_.size(); ++b) w += std::popcount(x_[b] | z_[b]);
  return w;
}

namespace {

// Power of i in sigma_a * sigma_b = i^g * sigma_{a xor b}, indexed by the
// (x | z<<1) encoding: I=0, X=1, Z=2, Y=3.
constexpr int kPhaseTable[4][4] = {
    //            I  X  Z  Y
    /* I */      {0, 0, 0, 0},
    /* X */      {0, 0, 3, 1},
    /* Z */      {0, 1, 0, 3},
    /* Y */      {0, 3, 1, 0},
};

}  // namespace

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("PauliString length mismatch");
  PauliString out(a.n_);
  int phase = static_cast<int>(a.phase_) + static_cast<int>(b.phase_);
  for (std::size_t k = 0; k < a.n_; ++k) {
    auto oa = static_cast<unsigned>(a.op(k));
    auto ob = static_cast<unsigned>(b.op(k));
    phase += kPhaseTable[oa][ob];
  }
  for (std::size_t blk = 0; blk < a.x_.size(); ++blk) {
    out.x_[blk] = a.x_[blk] ^ b.x_[blk];
    out.z_[blk] = a.z_[blk] ^ b.z_[blk];
  }
  out.phase_ = static_cast<std::uint8_t>(phase & 3);
  return out;
}

bool PauliString::anticommutes_with(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("PauliString length mismatch");
  std::size_t parity = 0;
  for (std::size_t b = 0; b < x_.size(); ++b) {
    parity ^= static_cast<std::size_t>(std::popcount(x_[b] & other.z_[b]));
    parity ^= static_cast<std::size_t>(std::popcount(z_[b] & other.x_[b]));
  }
  return (parity & 1u) != 0;
}

std::string PauliString::to_dense() const {
  std::string s;
  s.reserve(n_);
  for (std::size_t k = n_; k-- > 0;) s.push_back(op_char(op(k)));
  return s;
}

std::string PauliString::to_compact() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = n_; k-- > 0;) {
    Op o = op(k);
    if (o == Op::I) continue;
    if (!first) os << ' ';
    os << op_char(o) << k;
    first = false;
  }
  if (first) os << 'I';
  return os.str();
}

PauliString PauliString::parse(std::string_view text, std::optional<std::size_t> n_qubits) {
  bool dense = !text.empty();
  for (char c : text) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      dense = false;
      break;
    }
  }
  if (dense) {
    if (n_qubits && *n_qubits != text.size())
      throw std::invalid_argument("dense Pauli string length does not match n_qubits");
    PauliString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i)
      out.set_op(text.size() - 1 - i, op_from_char(text[i]));
    return out;
  }

  // Compact form: whitespace-separated <letter><index> tokens, or "I".
  struct Tok {
    Op op;
    std::size_t qubit;
  };
  std::vector<Tok> toks;
  std::size_t max_index = 0;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw std::invalid_argument("bad compact Pauli token: " + tok);
    Op o = op_from_char(tok[0]);
    std::size_t pos = 0;
    std::size_t q = std::stoul(tok.substr(1), &pos);
    if (pos + 1 != tok.size()) throw std::invalid_argument("bad compact Pauli token: " + tok);
    if (o == Op::I) continue;
    toks.push_back({o, q});
    max_index = std::max(max_index, q);
  }
  std::size_t n = n_qubits ? *n_qubits : (toks.empty() ? 1 : max_index + 1);
  PauliString out(n);
  for (const auto& t : toks) {
    if (t.qubit >= n) throw std::invalid_argument("compact Pauli index exceeds n_qubits");
    if (out.op(t.qubit) != Op::I)
      throw std::invalid_argument("duplicate qubit in compact Pauli string");
    out.set_op(t.qubit, t.op);
  }
  return out;
}

bool PauliString::operator==(const PauliString& other) const {
  return phase_ == other.phase_ && same_bits(other);
}

bool PauliString::same_bits(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliString::key_less(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (std::size_t b_idx = a.z_.size(); b_idx-- > 0;) {
    if (a.z_[b_idx] != b.z_[b_idx]) return a.z_[b_idx] < b.z_[b_idx];
  }
  for (std::size_t b_idx = a.x_.size(); b_idx-- > 0;) {
    if (a.x_[b_idx] != b.x_[b_idx]) return a.x_[b_idx] < b.x_[b_idx];
  }
  return false;
}

}  // namespace f2q::pauli
