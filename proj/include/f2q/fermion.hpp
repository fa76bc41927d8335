// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f2q::fermion {

constexpr double kCoeffTol = 1e-12;

struct LadderOp {
  unsigned mode = 0;
  bool dagger = false;

  bool operator==(const LadderOp&) const = default;
};

/// One product of creation/annihilation operators with a complex weight.
struct LadderTerm {
  std::complex<double> coefficient;
  std::vector<LadderOp> ops;  // applied left to right as written
};

struct FermionicHamiltonian {
  unsigned n_modes = 0;
  std::vector<LadderTerm> terms;
};

/// Normal-form Majorana monomial: strictly increasing indices in 0..2N-1.
struct MajoranaMonomial {
  std::complex<double> coefficient;
  std::vector<unsigned> indices;
};

/// Deduplicated sum of Majorana monomials. Terms are sorted by index list;
/// the empty index list (identity) may appear as the first term.
struct MajoranaHamiltonian {
  unsigned n_modes = 0;
  std::vector<MajoranaMonomial> terms;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the line-oriented .fop format:
///   # comment
///   modes <N>
///   (<re>,<im>) : <op> <op> ...     op := <index>^ | <index>
FermionicHamiltonian parse_fermionic(std::string_view text);

/// Parses the .mop format; ops are m<index> with index in 0..2N-1.
MajoranaHamiltonian parse_majorana(std::string_view text);

std::string to_text(const FermionicHamiltonian& h);
std::string to_text(const MajoranaHamiltonian& h);

/// Substitutes a_j = (M_2j + i M_2j+1)/2 and its adjoint, expands, normal
/// orders with M_i M_j = -M_j M_i and M_i^2 = I, combines like terms and
/// drops coefficients below tol.
MajoranaHamiltonian to_majorana(const FermionicHamiltonian& h, double tol = kCoeffTol);

/// Normal-orders a single index product. Returns the sign (+1/-1) picked up
/// by anticommutation swaps; `indices` comes back strictly increasing with
/// squared operators cancelled.
int normal_order(std::vector<unsigned>& indices);

/// 2D Fermi-Hubbard lattice with spin: mode = 2*site + spin, sites row-major.
/// Hopping t on nearest-neighbor bonds (h.c. included), on-site interaction U.
/// Periodic boundary wraps a dimension only when its size exceeds 2.
FermionicHamiltonian gen_fermi_hubbard(unsigned rows, unsigned cols, double t, double u,
                                       bool periodic = false);

bool check_hermitian(const FermionicHamiltonian& h, double tol = 1e-9);
bool check_hermitian(const MajoranaHamiltonian& h, double tol = 1e-9);

}  // namespace f2q::fermion
