// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/apply.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace f2q::apply {

namespace {

const std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

struct KeyLess {
  bool operator()(const pauli::PauliString& a, const pauli::PauliString& b) const {
    return pauli::PauliString::key_less(a, b);
  }
};

}  // namespace

nlohmann::json QubitHamiltonian::to_json() const {
  nlohmann::json j;
  j["n_qubits"] = n_qubits;
  auto arr = nlohmann::json::array();
  for (const auto& t : terms) {
    arr.push_back({{"string", t.string.to_dense()},
                   {"re", t.coefficient.real()},
                   {"im", t.coefficient.imag()}});
  }
  j["terms"] = std::move(arr);
  return j;
}

QubitHamiltonian QubitHamiltonian::from_json(const nlohmann::json& j) {
  QubitHamiltonian q;
  q.n_qubits = j.at("n_qubits").get<unsigned>();
  for (const auto& t : j.at("terms")) {
    Term term{pauli::PauliString::parse(t.at("string").get<std::string>()),
              {t.at("re").get<double>(), t.at("im").get<double>()}};
    if (term.string.n_qubits() != q.n_qubits)
      throw std::invalid_argument("qubit Hamiltonian JSON: string length mismatch");
    q.terms.push_back(std::move(term));
  }
  return q;
}

QubitHamiltonian map_hamiltonian(const fermion::MajoranaHamiltonian& h, const Mapping& m,
                                 double tol) {
  if (h.n_modes != m.n_modes) throw std::invalid_argument("mode count mismatch");
  std::map<pauli::PauliString, std::complex<double>, KeyLess> acc;
  for (const auto& term : h.terms) {
    pauli::PauliString s = pauli::PauliString::identity(m.n_modes);
    for (unsigned i : term.indices) {
      if (i >= m.strings.size()) throw std::invalid_argument("Majorana index out of range");
      s = s * m.strings[i];
    }
    std::complex<double> c = term.coefficient * kPhases[s.phase_exp() & 3u];
    s.set_phase_exp(0);
    acc[s] += c;
  }
  QubitHamiltonian q;
  q.n_qubits = m.n_modes;
  for (auto& [s, c] : acc) {
    if (std::abs(c) < tol) continue;
    q.terms.push_back({s, c});
  }
  return q;
}

WeightReport weight_report(const QubitHamiltonian& q) {
  WeightReport r;
  r.term_count = q.terms.size();
  r.per_qubit_weight.assign(q.n_qubits, 0);
  for (const auto& t : q.terms) {
    std::uint64_t w = t.string.weight();
    r.total_pauli_weight += w;
    r.max_term_weight = std::max(r.max_term_weight, w);
    for (unsigned k = 0; k < q.n_qubits; ++k)
      if (t.string.op(k) != pauli::Op::I) ++r.per_qubit_weight[k];
  }
  return r;
}

nlohmann::json WeightReport::to_json() const {
  return {{"total_pauli_weight", total_pauli_weight},
          {"term_count", term_count},
          {"max_term_weight", max_term_weight},
          {"per_qubit_weight", per_qubit_weight}};
}

bool vacuum_pair_predicate(const Mapping& m) {
  if (m.strings.size() != 2ull * m.n_modes) return false;
  for (unsigned j = 0; j < m.n_modes; ++j) {
    const auto& even = m.strings[2 * j];
    const auto& odd = m.strings[2 * j + 1];
    unsigned xy_count = 0;
    for (unsigned k = 0; k < m.n_modes; ++k) {
      pauli::Op a = even.op(k), b = odd.op(k);
      if (a == pauli::Op::X && b == pauli::Op::Y) {
        ++xy_count;
      } else if (pauli::action_on_zero(a) != pauli::action_on_zero(b)) {
        return false;
      }
    }
    if (xy_count != 1) return false;
  }
  return true;
}

bool is_hermitian(const QubitHamiltonian& q, double tol) {
  for (const auto& t : q.terms)
    if (std::abs(t.coefficient.imag()) > tol) return false;
  return true;
}

}  // namespace f2q::apply
