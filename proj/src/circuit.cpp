// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace f2q::circuit {

std::vector<Gate> trotter_term(const pauli::PauliString& s, double theta) {
  if (s.is_identity()) throw std::invalid_argument("trotter_term: identity string");
  const unsigned n = static_cast<unsigned>(s.n_qubits());
  std::vector<unsigned> involved;  // descending
  unsigned y_count = 0;
  for (unsigned k = n; k-- > 0;) {
    if (s.op(k) != pauli::Op::I) involved.push_back(k);
    if (s.op(k) == pauli::Op::Y) ++y_count;
  }
  const unsigned target = involved.back();
  constexpr double kHalfPi = std::numbers::pi / 2;

  std::vector<Gate> gates;
  for (unsigned q : involved) {
    if (s.op(q) == pauli::Op::X) gates.push_back({Gate::Kind::H, q});
    if (s.op(q) == pauli::Op::Y) gates.push_back({Gate::Kind::RX, q, 0, -kHalfPi});
  }
  for (unsigned q : involved)
    if (q != target) gates.push_back({Gate::Kind::CNOT, q, target});
  // The RX(-pi/2) frame maps Y to -Z, so flip the rotation sign per Y to keep
  // the snippet equal to exp(-i*theta*S).
  double sign = (y_count % 2 == 0) ? 1.0 : -1.0;
  gates.push_back({Gate::Kind::RZ, target, 0, 2 * theta * sign});
  for (unsigned i = static_cast<unsigned>(involved.size()); i-- > 0;)
    if (involved[i] != target) gates.push_back({Gate::Kind::CNOT, involved[i], target});
  for (unsigned i = static_cast<unsigned>(involved.size()); i-- > 0;) {
    unsigned q = involved[i];
    if (s.op(q) == pauli::Op::Y) gates.push_back({Gate::Kind::RX, q, 0, kHalfPi});
    if (s.op(q) == pauli::Op::X) gates.push_back({Gate::Kind::H, q});
  }
  return gates;
}

Circuit trotterize(const apply::QubitHamiltonian& q, double t, unsigned n_steps) {
  if (n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  if (!apply::is_hermitian(q)) throw std::invalid_argument("trotterize: non-Hermitian Hamiltonian");
  Circuit c;
  c.n_qubits = q.n_qubits;
  for (unsigned step = 0; step < n_steps; ++step) {
    for (const auto& term : q.terms) {
      if (term.string.is_identity()) continue;  // global phase
      auto snippet = trotter_term(term.string, term.coefficient.real() * t / n_steps);
      c.gates.insert(c.gates.end(), snippet.begin(), snippet.end());
    }
  }
  return c;
}

CircuitMetrics metrics(const Circuit& c) {
  CircuitMetrics m;
  std::vector<std::uint64_t> busy_until(c.n_qubits, 0);
  for (const auto& g : c.gates) {
    if (g.kind == Gate::Kind::CNOT) {
      ++m.cnot_count;
      std::uint64_t slot = std::max(busy_until[g.q0], busy_until[g.q1]) + 1;
      busy_until[g.q0] = busy_until[g.q1] = slot;
    } else {
      ++m.single_qubit_count;
      busy_until[g.q0] += 1;
    }
  }
  for (std::uint64_t t : busy_until) m.depth = std::max(m.depth, t);
  return m;
}

nlohmann::json CircuitMetrics::to_json() const {
  return {{"cnot_count", cnot_count},
          {"single_qubit_count", single_qubit_count},
          {"depth", depth}};
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os.precision(17);
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n_qubits << "];\n";
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::H: os << "h q[" << g.q0 << "];\n"; break;
      case Gate::Kind::RX: os << "rx(" << g.angle << ") q[" << g.q0 << "];\n"; break;
      case Gate::Kind::RZ: os << "rz(" << g.angle << ") q[" << g.q0 << "];\n"; break;
      case Gate::Kind::CNOT: os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n"; break;
    }
  }
  return os.str();
}

namespace {

unsigned parse_qubit_ref(const std::string& tok, unsigned n_qubits) {
  auto open = tok.find("q["), close = tok.find(']');
  if (open != 0 || close == std::string::npos) throw std::invalid_argument("bad qubit ref: " + tok);
  unsigned long idx = std::stoul(tok.substr(2, close - 2));
  if (idx >= n_qubits) throw std::invalid_argument("qubit index out of range: " + tok);
  return static_cast<unsigned>(idx);
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Circuit c;
  std::istringstream is{std::string(text)};
  std::string line;
  bool have_qreg = false;
  while (std::getline(is, line)) {
    line.erase(0, line.find_first_not_of(" \t\r"));
    if (line.empty() || line.starts_with("//") || line.starts_with("OPENQASM") ||
        line.starts_with("include"))
      continue;
    if (!line.ends_with(";")) throw std::invalid_argument("missing ';': " + line);
    line.pop_back();
    if (line.starts_with("qreg")) {
      auto open = line.find('['), close = line.find(']');
      if (open == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("bad qreg: " + line);
      c.n_qubits = static_cast<unsigned>(std::stoul(line.substr(open + 1, close - open - 1)));
      have_qreg = true;
      continue;
    }
    if (!have_qreg) throw std::invalid_argument("gate before qreg: " + line);
    if (line.starts_with("h ")) {
      c.gates.push_back({Gate::Kind::H, parse_qubit_ref(line.substr(2), c.n_qubits)});
    } else if (line.starts_with("rx(") || line.starts_with("rz(")) {
      auto close = line.find(')');
      if (close == std::string::npos) throw std::invalid_argument("bad rotation: " + line);
      double angle = std::stod(line.substr(3, close - 3));
      std::string rest = line.substr(close + 1);
      rest.erase(0, rest.find_first_not_of(" \t"));
      Gate::Kind kind = line[1] == 'x' ? Gate::Kind::RX : Gate::Kind::RZ;
      c.gates.push_back({kind, parse_qubit_ref(rest, c.n_qubits), 0, angle});
    } else if (line.starts_with("cx ")) {
      auto comma = line.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("bad cx: " + line);
      std::string a = line.substr(3, comma - 3), b = line.substr(comma + 1);
      a.erase(std::remove(a.begin(), a.end(), ' '), a.end());
      b.erase(std::remove(b.begin(), b.end(), ' '), b.end());
      c.gates.push_back(
          {Gate::Kind::CNOT, parse_qubit_ref(a, c.n_qubits), parse_qubit_ref(b, c.n_qubits)});
    } else {
      throw std::invalid_argument("unsupported statement: " + line);
    }
  }
  if (!have_qreg) throw std::invalid_argument("missing qreg declaration");
  return c;
}

}  // namespace f2q::circuit
