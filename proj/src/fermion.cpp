// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace f2q::fermion {

namespace {

bool index_list_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_complex(const std::complex<double>& c) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << c.real() << ',' << c.imag() << ')';
  return os.str();
}

// Splits "(<re>,<im>)" off the front of the line; returns rest after ':'.
std::complex<double> parse_coefficient(const std::string& line, int lineno, std::string& rest) {
  auto open = line.find('(');
  auto comma = line.find(',', open);
  auto close = line.find(')', comma);
  auto colon = line.find(':', close);
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
      colon == std::string::npos)
    throw ParseError(lineno, "expected '(<re>,<im>) : <ops>'");
  auto parse_num = [&](const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw ParseError(lineno, "non-numeric coefficient: " + s);
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw ParseError(lineno, "non-numeric coefficient: " + s);
    return v;
  };
  double re = parse_num(line.substr(open + 1, comma - open - 1));
  double im = parse_num(line.substr(comma + 1, close - comma - 1));
  rest = line.substr(colon + 1);
  return {re, im};
}

struct Lines {
  unsigned n_modes = 0;
  std::vector<std::pair<int, std::string>> body;  // (lineno, term text after coefficient)
  std::vector<std::complex<double>> coeffs;
};

Lines parse_common(std::string_view text) {
  Lines out;
  std::istringstream is{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_modes = false;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty()) continue;
    if (!have_modes) {
      std::istringstream ls(trimmed);
      std::string kw;
      long n = -1;
      ls >> kw >> n;
      if (kw != "modes" || n < 1) throw ParseError(lineno, "expected 'modes <N>' header");
      out.n_modes = static_cast<unsigned>(n);
      have_modes = true;
      continue;
    }
    std::string rest;
    out.coeffs.push_back(parse_coefficient(trimmed, lineno, rest));
    out.body.emplace_back(lineno, rest);
  }
  if (!have_modes) throw ParseError(lineno, "missing 'modes <N>' header");
  return out;
}

}  // namespace

FermionicHamiltonian parse_fermionic(std::string_view text) {
  Lines lines = parse_common(text);
  FermionicHamiltonian h;
  h.n_modes = lines.n_modes;
  for (std::size_t i = 0; i < lines.body.size(); ++i) {
    auto [lineno, body] = lines.body[i];
    LadderTerm term;
    term.coefficient = lines.coeffs[i];
    std::istringstream ts(body);
    std::string tok;
    while (ts >> tok) {
      bool dagger = false;
      if (!tok.empty() && tok.back() == '^') {
        dagger = true;
        tok.pop_back();
      }
      std::size_t pos = 0;
      unsigned long idx;
      try {
        idx = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError(lineno, "malformed operator token: " + tok);
      }
      if (pos != tok.size()) throw ParseError(lineno, "malformed operator token: " + tok);
      if (idx >= h.n_modes) throw ParseError(lineno, "mode index out of range: " + tok);
      term.ops.push_back({static_cast<unsigned>(idx), dagger});
    }
    h.terms.push_back(std::move(term));
  }
  return h;
}

MajoranaHamiltonian parse_majorana(std::string_view text) {
  Lines lines = parse_common(text);
  std::map<std::vector<unsigned>, std::complex<double>, decltype(&index_list_less)> acc(
      &index_list_less);
  for (std::size_t i = 0; i < lines.body.size(); ++i) {
    auto [lineno, body] = lines.body[i];
    std::vector<unsigned> indices;
    std::istringstream ts(body);
    std::string tok;
    while (ts >> tok) {
      if (tok.size() < 2 || tok[0] != 'm')
        throw ParseError(lineno, "malformed Majorana token: " + tok);
      std::size_t pos = 0;
      unsigned long idx;
      try {
        idx = std::stoul(tok.substr(1), &pos);
      } catch (const std::exception&) {
        throw ParseError(lineno, "malformed Majorana token: " + tok);
      }
      if (pos + 1 != tok.size()) throw ParseError(lineno, "malformed Majorana token: " + tok);
      if (idx >= 2ul * lines.n_modes)
        throw ParseError(lineno, "Majorana index out of range: " + tok);
      indices.push_back(static_cast<unsigned>(idx));
    }
    int sign = normal_order(indices);
    acc[indices] += lines.coeffs[i] * static_cast<double>(sign);
  }
  MajoranaHamiltonian h;
  h.n_modes = lines.n_modes;
  for (auto& [idx, c] : acc) {
    if (std::abs(c) < kCoeffTol) continue;
    h.terms.push_back({c, idx});
  }
  return h;
}

std::string to_text(const FermionicHamiltonian& h) {
  std::ostringstream os;
  os << "modes " << h.n_modes << '\n';
  for (const auto& t : h.terms) {
    os << format_complex(t.coefficient) << " :";
    for (const auto& op : t.ops) {
      os << ' ' << op.mode;
      if (op.dagger) os << '^';
    }
    os << '\n';
  }
  return os.str();
}

std::string to_text(const MajoranaHamiltonian& h) {
  std::ostringstream os;
  os << "modes " << h.n_modes << '\n';
  for (const auto& t : h.terms) {
    os << format_complex(t.coefficient) << " :";
    for (unsigned i : t.indices) os << " m" << i;
    os << '\n';
  }
  return os.str();
}

int normal_order(std::vector<unsigned>& indices) {
  // Insertion sort counting swaps; adjacent equal pairs then cancel (M^2 = I).
  int sign = 1;
  for (std::size_t i = 1; i < indices.size(); ++i) {
    for (std::size_t j = i; j > 0 && indices[j] < indices[j - 1]; --j) {
      std::swap(indices[j], indices[j - 1]);
      sign = -sign;
    }
  }
  std::vector<unsigned> out;
  out.reserve(indices.size());
  std::size_t i = 0;
  while (i < indices.size()) {
    if (i + 1 < indices.size() && indices[i] == indices[i + 1]) {
      i += 2;
    } else {
      out.push_back(indices[i]);
      ++i;
    }
  }
  indices = std::move(out);
  return sign;
}

MajoranaHamiltonian to_majorana(const FermionicHamiltonian& h, double tol) {
  std::map<std::vector<unsigned>, std::complex<double>, decltype(&index_list_less)> acc(
      &index_list_less);
  const std::complex<double> i_unit(0.0, 1.0);
  for (const auto& term : h.terms) {
    // Expand the product of (M_2j -/+ i M_2j+1)/2 factors.
    std::vector<std::pair<std::vector<unsigned>, std::complex<double>>> poly;
    poly.emplace_back(std::vector<unsigned>{}, term.coefficient);
    for (const auto& op : term.ops) {
      std::vector<std::pair<std::vector<unsigned>, std::complex<double>>> next;
      next.reserve(poly.size() * 2);
      std::complex<double> odd_factor = op.dagger ? -i_unit : i_unit;
      for (const auto& [mono, c] : poly) {
        auto even = mono;
        even.push_back(2 * op.mode);
        next.emplace_back(std::move(even), c * 0.5);
        auto odd = mono;
        odd.push_back(2 * op.mode + 1);
        next.emplace_back(std::move(odd), c * 0.5 * odd_factor);
      }
      poly = std::move(next);
    }
    for (auto& [mono, c] : poly) {
      int sign = normal_order(mono);
      acc[mono] += c * static_cast<double>(sign);
    }
  }
  MajoranaHamiltonian out;
  out.n_modes = h.n_modes;
  for (auto& [idx, c] : acc) {
    if (std::abs(c) < tol) continue;
    out.terms.push_back({c, idx});
  }
  return out;
}

FermionicHamiltonian gen_fermi_hubbard(unsigned rows, unsigned cols, double t, double u,
                                       bool periodic) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("zero-size Fermi-Hubbard lattice");
  FermionicHamiltonian h;
  h.n_modes = 2 * rows * cols;
  auto mode = [&](unsigned r, unsigned c, unsigned spin) { return 2 * (r * cols + c) + spin; };
  auto add_hop = [&](unsigned a, unsigned b) {
    if (std::abs(t) < kCoeffTol) return;
    for (unsigned spin = 0; spin < 2; ++spin) {
      unsigned ma = 2 * (a / 2) + spin;  // a,b arrive as site*2
      unsigned mb = 2 * (b / 2) + spin;
      h.terms.push_back({t, {{ma, true}, {mb, false}}});
      h.terms.push_back({t, {{mb, true}, {ma, false}}});
    }
  };
  for (unsigned r = 0; r < rows; ++r) {
    for (unsigned c = 0; c < cols; ++c) {
      if (c + 1 < cols) add_hop(mode(r, c, 0), mode(r, c + 1, 0));
      if (r + 1 < rows) add_hop(mode(r, c, 0), mode(r + 1, c, 0));
    }
  }
  if (periodic) {
    // Wrap only when the dimension is long enough to not duplicate open bonds.
    if (cols > 2)
      for (unsigned r = 0; r < rows; ++r) add_hop(mode(r, cols - 1, 0), mode(r, 0, 0));
    if (rows > 2)
      for (unsigned c = 0; c < cols; ++c) add_hop(mode(rows - 1, c, 0), mode(0, c, 0));
  }
  if (std::abs(u) >= kCoeffTol) {
    for (unsigned site = 0; site < rows * cols; ++site) {
      unsigned up = 2 * site, dn = 2 * site + 1;
      h.terms.push_back({u, {{up, true}, {up, false}, {dn, true}, {dn, false}}});
    }
  }
  return h;
}

bool check_hermitian(const MajoranaHamiltonian& h, double tol) {
  // (M_i1...M_ik)^dagger = (-1)^(k(k-1)/2) M_i1...M_ik for increasing indices,
  // so H = H^dagger iff conj(c) * that sign equals c for every monomial.
  for (const auto& term : h.terms) {
    std::size_t k = term.indices.size();
    double sign = (k * (k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    if (std::abs(std::conj(term.coefficient) * sign - term.coefficient) > tol) return false;
  }
  return true;
}

bool check_hermitian(const FermionicHamiltonian& h, double tol) {
  return check_hermitian(to_majorana(h), tol);
}

}  // namespace f2q::fermion
