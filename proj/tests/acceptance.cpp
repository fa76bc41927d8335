// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses fixed seeds so the run
// is deterministic.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "f2q/apply.hpp"
#include "f2q/circuit.hpp"
#include "f2q/fermion.hpp"
#include "f2q/hatt.hpp"
#include "f2q/mapping.hpp"
#include "f2q/verify.hpp"
#include "support.hpp"

using namespace f2q;
namespace testing = f2q::testing;

namespace {

int g_failures = 0;

void report(int index, const char* title, bool ok, const std::string& detail = "") {
  std::printf("criterion %d [%s]: %s%s%s\n", index, title, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++g_failures;
}

std::complex<double> coefficient_of(const apply::QubitHamiltonian& q, const std::string& dense) {
  auto want = pauli::PauliString::parse(dense);
  for (const auto& t : q.terms)
    if (t.string.same_bits(want)) return t.coefficient;
  return 0.0;
}

// ---------------------------------------------------------------------------
// 1. Worked-example goldens.
// ---------------------------------------------------------------------------
void criterion1() {
  bool ok = true;
  std::string detail;

  auto jw = baselines::jordan_wigner(2);
  const char* want[4] = {"IX", "IY", "XZ", "YZ"};
  for (int i = 0; i < 4; ++i) ok &= jw.strings[i].to_dense() == want[i];
  if (!ok) detail = "JW N=2 strings differ";

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int rep = 0; ok && rep < 3; ++rep) {
    double c0 = dist(rng), c1 = dist(rng), c2 = dist(rng);
    auto q = apply::map_hamiltonian(
        fermion::to_majorana(testing::two_mode_number_hamiltonian(c0, c1, c2)), jw);
    ok &= std::abs(coefficient_of(q, "II") - (2 * c0 + 2 * c1 - c2) / 4.0) < 1e-12;
    ok &= std::abs(coefficient_of(q, "IZ") - (c2 - 2 * c0) / 4.0) < 1e-12;
    ok &= std::abs(coefficient_of(q, "ZI") - (c2 - 2 * c1) / 4.0) < 1e-12;
    ok &= std::abs(coefficient_of(q, "ZZ") + c2 / 4.0) < 1e-12;
    if (!ok) detail = "two-mode coefficient mismatch";
  }

  auto pair_h = testing::motivating_pair_hamiltonian();
  auto btt_leaf = baselines::balanced_ternary_tree(3, baselines::BttAssignment::LeafOrder);
  auto w_btt = apply::weight_report(apply::map_hamiltonian(pair_h, btt_leaf)).total_pauli_weight;
  auto w_hatt =
      apply::weight_report(apply::map_hamiltonian(pair_h, hatt::build(pair_h))).total_pauli_weight;
  if (w_btt != 6 || w_hatt > 3) {
    ok = false;
    detail = "pair example weights: btt=" + std::to_string(w_btt) +
             " hatt=" + std::to_string(w_hatt);
  }

  std::vector<hatt::StepInfo> steps;
  hatt::Options opts;
  opts.observer = [&](const hatt::StepInfo& info) { steps.push_back(info); };
  hatt::build(fermion::to_majorana(testing::walkthrough_hamiltonian()), opts);
  bool trace_ok = steps.size() == 3 && steps[0].weight == 1 && steps[1].weight == 2;
  bool node7_discarded = false;
  if (steps.size() >= 2)
    for (auto [x, z] : steps[1].discarded) node7_discarded |= (x == 7);
  if (!(trace_ok && node7_discarded)) {
    ok = false;
    detail = "three-mode trace differs";
  }

  report(1, "worked-example goldens", ok, detail);
}

// ---------------------------------------------------------------------------
// 2. Validity properties for all five constructors.
// ---------------------------------------------------------------------------
bool valid_algebra(const Mapping& m) {
  if (m.strings.size() != 2ull * m.n_modes) return false;
  return verify::check_majorana_algebra(m, false);
}

void criterion2() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(17);
  for (unsigned n = 1; ok && n <= 16; ++n) {
    for (int rep = 0; ok && rep < 25; ++rep) {
      auto h = testing::random_hermitian_majorana(n, 2 * n + 1, rng);
      Mapping maps[5] = {baselines::jordan_wigner(n), baselines::bravyi_kitaev(n),
                         baselines::balanced_ternary_tree(n), hatt::build(h),
                         hatt::build_unopt(h)};
      for (const auto& m : maps) {
        if (!valid_algebra(m)) {
          ok = false;
          detail = "algebra violated: " + method_name(m.method) + " N=" + std::to_string(n);
          break;
        }
        if (m.vacuum_preserving && !apply::vacuum_pair_predicate(m)) {
          ok = false;
          detail = "vacuum claim false: " + method_name(m.method) + " N=" + std::to_string(n);
          break;
        }
        if (n <= 5) {
          if (!verify::check_majorana_algebra(m, true) ||
              verify::check_vacuum(m) != apply::vacuum_pair_predicate(m)) {
            ok = false;
            detail = "dense check disagrees: " + method_name(m.method) +
                     " N=" + std::to_string(n);
            break;
          }
        }
      }
    }
  }
  report(2, "constructor validity, N=1..16 x 25", ok, detail);
}

// ---------------------------------------------------------------------------
// 3. Spectrum equivalence across mappings.
// ---------------------------------------------------------------------------
void criterion3() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(19);
  for (int rep = 0; ok && rep < 20; ++rep) {
    unsigned n = 2 + rep % 3;
    auto h = testing::random_hermitian_majorana(n, 3 * n, rng);
    std::vector<double> ref;
    for (const auto& m : {baselines::jordan_wigner(n), baselines::bravyi_kitaev(n),
                          baselines::balanced_ternary_tree(n), hatt::build(h)}) {
      auto ev = verify::spectrum(apply::map_hamiltonian(h, m));
      if (ref.empty()) {
        ref = std::move(ev);
        continue;
      }
      for (std::size_t i = 0; i < ref.size(); ++i) {
        if (std::abs(ref[i] - ev[i]) > 1e-9) {
          ok = false;
          detail = "spectra diverge under " + method_name(m.method) + " at N=" +
                   std::to_string(n);
          break;
        }
      }
      if (!ok) break;
    }
  }
  report(3, "spectrum equivalence JW/BK/BTT/adaptive", ok, detail);
}

// ---------------------------------------------------------------------------
// 4 + 7(b) + 8. Fermi-Hubbard benchmark suite.
// ---------------------------------------------------------------------------
struct HubbardCase {
  unsigned rows, cols;
  fermion::MajoranaHamiltonian h;
  apply::QubitHamiltonian q_jw, q_btt, q_hatt;
};

std::vector<HubbardCase> hubbard_suite() {
  std::vector<HubbardCase> out;
  for (auto [r, c] : std::initializer_list<std::pair<unsigned, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 5}, {3, 4}}) {
    HubbardCase cs;
    cs.rows = r;
    cs.cols = c;
    cs.h = fermion::to_majorana(fermion::gen_fermi_hubbard(r, c, 1.0, 4.0));
    unsigned n = cs.h.n_modes;
    cs.q_jw = apply::map_hamiltonian(cs.h, baselines::jordan_wigner(n));
    cs.q_btt = apply::map_hamiltonian(cs.h, baselines::balanced_ternary_tree(n));
    cs.q_hatt = apply::map_hamiltonian(cs.h, hatt::build(cs.h));
    out.push_back(std::move(cs));
  }
  return out;
}

void criterion4(const std::vector<HubbardCase>& suite) {
  int wins = 0;
  double reduction_sum = 0;
  std::string detail;
  for (const auto& cs : suite) {
    auto w_jw = apply::weight_report(cs.q_jw).total_pauli_weight;
    auto w_btt = apply::weight_report(cs.q_btt).total_pauli_weight;
    auto w_hatt = apply::weight_report(cs.q_hatt).total_pauli_weight;
    if (w_hatt <= w_btt) ++wins;
    reduction_sum += 1.0 - double(w_hatt) / double(w_jw);
    detail += std::to_string(cs.rows) + "x" + std::to_string(cs.cols) + ":jw=" +
              std::to_string(w_jw) + ",btt=" + std::to_string(w_btt) + ",hatt=" +
              std::to_string(w_hatt) + " ";
  }
  double mean_reduction = reduction_sum / double(suite.size());
  bool ok = wins >= 5 && mean_reduction >= 0.05;
  detail += "wins=" + std::to_string(wins) + "/6, mean reduction vs jw=" +
            std::to_string(100.0 * mean_reduction) + "%";
  report(4, "adaptivity on Fermi-Hubbard lattices", ok, detail);
}

// ---------------------------------------------------------------------------
// 5. Descendant maps vs explicit traversal.
// ---------------------------------------------------------------------------
void criterion5() {
  bool ok = true;
  std::string detail;
  std::mt19937 rng(23);
  for (int rep = 0; ok && rep < 100; ++rep) {
    unsigned n = 1 + rep % 12;
    auto h = testing::random_hermitian_majorana(n, 3 * n, rng);
    hatt::Options slow;
    slow.explicit_traversal = true;
    auto a = hatt::build(h);
    auto b = hatt::build(h, slow);
    if (a.source_tree->to_sexpr() != b.source_tree->to_sexpr() || a.strings != b.strings) {
      ok = false;
      detail = "trees diverge at N=" + std::to_string(n) + " rep " + std::to_string(rep);
    }
  }
  report(5, "descendant maps == explicit traversal, 100 cases", ok, detail);
}

// ---------------------------------------------------------------------------
// 6. Complexity scaling.
// ---------------------------------------------------------------------------
fermion::MajoranaHamiltonian all_singletons(unsigned n) {
  fermion::MajoranaHamiltonian h;
  h.n_modes = n;
  for (unsigned i = 0; i < 2 * n; ++i) h.terms.push_back({{1.0, 0.0}, {i}});
  return h;
}

template <typename F>
double time_seconds(F&& f) {
  using clock = std::chrono::steady_clock;
  double total = 0;
  int runs = 0;
  do {
    auto t0 = clock::now();
    f();
    total += std::chrono::duration<double>(clock::now() - t0).count();
    ++runs;
  } while (total < 0.05);
  return total / runs;
}

double loglog_slope(const std::vector<unsigned>& ns, const std::vector<double>& ts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  auto k = double(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    double x = std::log(double(ns[i])), y = std::log(ts[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

void criterion6() {
  std::vector<unsigned> ns = {16, 24, 32, 48, 64, 96, 128};
  std::vector<double> t_fast, t_slow;
  for (unsigned n : ns) {
    auto h = all_singletons(n);
    t_fast.push_back(time_seconds([&] { hatt::build(h); }));
    t_slow.push_back(time_seconds([&] { hatt::build_unopt(h); }));
  }
  double s_fast = loglog_slope(ns, t_fast);
  double s_slow = loglog_slope(ns, t_slow);
  bool ok = s_fast >= 2.3 && s_fast <= 3.5 && s_slow > s_fast;
  char buf[128];
  std::snprintf(buf, sizeof buf, "optimized slope=%.2f, unoptimized slope=%.2f", s_fast, s_slow);
  report(6, "runtime scaling on N=16..128", ok, buf);
}

// ---------------------------------------------------------------------------
// 7. Circuit layer.
// ---------------------------------------------------------------------------
void criterion7(const std::vector<HubbardCase>& suite) {
  bool ok = true;
  std::string detail;

  std::mt19937 rng(29);
  std::uniform_int_distribution<int> op(0, 3);
  std::uniform_real_distribution<double> angle(-2.0, 2.0);
  for (int rep = 0; ok && rep < 50; ++rep) {
    unsigned n = 1 + rep % 5;
    pauli::PauliString s(n);
    do {
      for (unsigned k = 0; k < n; ++k) s.set_op(k, static_cast<pauli::Op>(op(rng)));
    } while (s.is_identity());
    double theta = angle(rng);
    circuit::Circuit c;
    c.n_qubits = n;
    c.gates = circuit::trotter_term(s, theta);
    auto u = testing::dense_circuit(c);
    auto sm = verify::string_to_matrix(s);
    Eigen::MatrixXcd want = std::cos(theta) * Eigen::MatrixXcd::Identity(sm.rows(), sm.cols()) -
                            std::complex<double>(0, std::sin(theta)) * sm;
    if ((u - want).cwiseAbs().maxCoeff() > 1e-9) {
      ok = false;
      detail = "snippet != exponential for " + s.to_dense();
    }
  }

  for (const auto& cs : suite) {
    for (const auto* q : {&cs.q_jw, &cs.q_btt, &cs.q_hatt}) {
      std::uint64_t expected = 0;
      for (const auto& t : q->terms)
        if (t.string.weight() >= 1) expected += 2 * (t.string.weight() - 1);
      auto got = circuit::metrics(circuit::trotterize(*q, 0.1, 1)).cnot_count;
      if (got != expected) {
        ok = false;
        detail = "cnot identity broken on " + std::to_string(cs.rows) + "x" +
                 std::to_string(cs.cols);
      }
    }
  }
  report(7, "rotation snippets and cnot-count identity", ok, detail);
}

// ---------------------------------------------------------------------------
// 8. Greedy step-optimality on the benchmark suite.
// ---------------------------------------------------------------------------
void criterion8(const std::vector<HubbardCase>& suite) {
  bool ok = true;
  std::string detail;
  for (const auto& cs : suite) {
    hatt::Options opts;
    opts.observer = [&](const hatt::StepInfo& info) {
      if (info.state.weight_on_qubit({info.ox, info.oy, info.oz}) != info.weight) {
        ok = false;
        detail = "reported weight != recount";
        return;
      }
      std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
      for (const auto& cand : info.candidates)
        best = std::min(best, info.state.weight_on_qubit({cand[0], cand[1], cand[2]}));
      if (info.weight != best) {
        ok = false;
        detail = "step " + std::to_string(info.step) + " on " + std::to_string(cs.rows) + "x" +
                 std::to_string(cs.cols) + " chose " + std::to_string(info.weight) +
                 " but scan minimum is " + std::to_string(best);
      }
    };
    hatt::build(cs.h, opts);
    if (!ok) break;
  }
  report(8, "greedy step attains the scan minimum", ok, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  auto suite = hubbard_suite();
  criterion4(suite);
  criterion5();
  criterion6();
  criterion7(suite);
  criterion8(suite);
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
