// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: generate model Hamiltonians, compile them to qubit
// form under a chosen mapping, emit Trotter circuits, verify mappings, and
// benchmark construction scaling.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "f2q/apply.hpp"
#include "f2q/circuit.hpp"
#include "f2q/fermion.hpp"
#include "f2q/hatt.hpp"
#include "f2q/mapping.hpp"
#include "f2q/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;
constexpr int kExitInternal = 4;

struct GlobalFlags {
  double tol = f2q::fermion::kCoeffTol;
  std::string trace_path;
  unsigned threads = 1;
  unsigned seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << text;
}

f2q::fermion::MajoranaHamiltonian load_hamiltonian(const std::string& path, double tol) {
  std::string text = read_file(path);
  if (path.ends_with(".mop")) return f2q::fermion::parse_majorana(text);
  return f2q::fermion::to_majorana(f2q::fermion::parse_fermionic(text), tol);
}

f2q::Mapping build_mapping(const f2q::fermion::MajoranaHamiltonian& h, const std::string& method,
                           bool btt_leaf_order, const GlobalFlags& g, std::ostream* trace) {
  using f2q::Method;
  switch (f2q::method_from_name(method)) {
    case Method::JW: return f2q::baselines::jordan_wigner(h.n_modes);
    case Method::BK: return f2q::baselines::bravyi_kitaev(h.n_modes);
    case Method::BTT:
      return f2q::baselines::balanced_ternary_tree(
          h.n_modes, btt_leaf_order ? f2q::baselines::BttAssignment::LeafOrder
                                    : f2q::baselines::BttAssignment::Vacuum);
    case Method::HATT_UNOPT:
    case Method::HATT: {
      f2q::hatt::Options opts;
      opts.threads = g.threads;
      if (trace) {
        opts.observer = [trace](const f2q::hatt::StepInfo& info) {
          json line;
          line["step"] = info.step;
          line["selection"] = {info.ox, info.oy, info.oz};
          line["weight"] = info.weight;
          auto discarded = json::array();
          for (auto [a, c] : info.discarded) discarded.push_back({a, c});
          line["discarded"] = std::move(discarded);
          *trace << line.dump() << '\n';
        };
      }
      return f2q::method_from_name(method) == Method::HATT ? f2q::hatt::build(h, opts)
                                                           : f2q::hatt::build_unopt(h, opts);
    }
  }
  throw std::logic_error("unreachable");
}

int cmd_gen(unsigned rows, unsigned cols, double t, double u, bool periodic,
            const std::string& out) {
  auto h = f2q::fermion::gen_fermi_hubbard(rows, cols, t, u, periodic);
  write_file(out, f2q::fermion::to_text(h));
  std::cout << "wrote " << out << " (" << h.n_modes << " modes, " << h.terms.size()
            << " terms)\n";
  return kExitOk;
}

int cmd_compile(const std::string& input, const std::string& method, bool btt_leaf_order,
                const std::string& out_dir, bool dump_tree, const GlobalFlags& g) {
  auto h = load_hamiltonian(input, g.tol);
  std::ofstream trace_out;
  if (!g.trace_path.empty()) {
    trace_out.open(g.trace_path);
    if (!trace_out) throw std::invalid_argument("cannot write " + g.trace_path);
  }
  auto mapping = build_mapping(h, method, btt_leaf_order, g, trace_out.is_open() ? &trace_out : nullptr);
  auto q = f2q::apply::map_hamiltonian(h, mapping, g.tol);
  auto report = f2q::apply::weight_report(q);

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "mapping.json", mapping.to_json().dump(2) + "\n");
  write_file(fs::path(out_dir) / "qubit_hamiltonian.json", q.to_json().dump(2) + "\n");
  write_file(fs::path(out_dir) / "weight_report.json", report.to_json().dump(2) + "\n");
  if (dump_tree && mapping.source_tree)
    write_file(fs::path(out_dir) / "tree.sexpr", mapping.source_tree->to_sexpr() + "\n");
  std::cout << "total_pauli_weight " << report.total_pauli_weight << " over "
            << report.term_count << " terms\n";
  return kExitOk;
}

int cmd_circuit(const std::string& input, const std::string& method, bool btt_leaf_order,
                double time, unsigned steps, const std::string& out_dir, const GlobalFlags& g) {
  auto h = load_hamiltonian(input, g.tol);
  auto mapping = build_mapping(h, method, btt_leaf_order, g, nullptr);
  auto q = f2q::apply::map_hamiltonian(h, mapping, g.tol);
  auto circ = f2q::circuit::trotterize(q, time, steps);
  auto m = f2q::circuit::metrics(circ);
  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "circuit.qasm", f2q::circuit::emit_qasm(circ));
  write_file(fs::path(out_dir) / "metrics.json", m.to_json().dump(2) + "\n");
  std::cout << "cnot_count " << m.cnot_count << " single_qubit_count " << m.single_qubit_count
            << " depth " << m.depth << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& mapping_path, const std::string& input, const GlobalFlags& g) {
  auto mapping = f2q::Mapping::from_json(json::parse(read_file(mapping_path)));
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    all_ok = all_ok && ok;
  };
  report("symplectic anticommutation", f2q::verify::check_majorana_algebra(mapping, false));
  if (mapping.n_modes <= 6) {
    report("dense anticommutation", f2q::verify::check_majorana_algebra(mapping, true));
    if (mapping.vacuum_preserving) {
      report("vacuum preservation (dense)", f2q::verify::check_vacuum(mapping));
      report("vacuum preservation (pairs)", f2q::apply::vacuum_pair_predicate(mapping));
    }
  }
  if (!input.empty()) {
    auto h = load_hamiltonian(input, g.tol);
    auto q = f2q::apply::map_hamiltonian(h, mapping, g.tol);
    report("mapped Hamiltonian Hermitian",
           !f2q::fermion::check_hermitian(h) || f2q::apply::is_hermitian(q));
    if (mapping.n_modes <= 10 && f2q::fermion::check_hermitian(h)) {
      auto ev = f2q::verify::spectrum(q);
      std::cout << "lowest eigenvalue " << (ev.empty() ? 0.0 : ev.front()) << "\n";
    }
  }
  return all_ok ? kExitOk : kExitVerify;
}

int cmd_bench_scaling(unsigned max_modes, const std::string& out, const GlobalFlags& g) {
  if (max_modes < 8) throw std::invalid_argument("--max-modes must be >= 8");
  const unsigned grid[] = {16, 24, 32, 48, 64, 96, 128};
  std::ostringstream csv;
  csv << "n_modes,method,seconds\n";
  struct Sample {
    double log_n, log_t;
  };
  std::vector<Sample> opt_samples, unopt_samples;
  for (unsigned n : grid) {
    if (n > max_modes) break;
    f2q::fermion::MajoranaHamiltonian h;
    h.n_modes = n;
    for (unsigned i = 0; i < 2 * n; ++i) h.terms.push_back({{1.0, 0.0}, {i}});
    for (const char* method : {"hatt", "hatt-unopt"}) {
      // Repeat tiny builds so each measurement is comfortably above timer
      // resolution.
      double elapsed = 0;
      unsigned reps = 0;
      auto start = std::chrono::steady_clock::now();
      do {
        f2q::hatt::Options opts;
        opts.threads = g.threads;
        auto m = std::string(method) == "hatt" ? f2q::hatt::build(h, opts)
                                               : f2q::hatt::build_unopt(h, opts);
        ++reps;
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      } while (elapsed < 0.05 && reps < 1000);
      double seconds = elapsed / reps;
      csv << n << ',' << method << ',' << seconds << '\n';
      (std::string(method) == "hatt" ? opt_samples : unopt_samples)
          .push_back({std::log(static_cast<double>(n)), std::log(seconds)});
      std::cerr << "n=" << n << " " << method << " " << seconds << "s (x" << reps << ")\n";
    }
  }
  auto slope = [](const std::vector<Sample>& s) {
    double mx = 0, my = 0;
    for (const auto& p : s) mx += p.log_n, my += p.log_t;
    mx /= s.size(), my /= s.size();
    double num = 0, den = 0;
    for (const auto& p : s) num += (p.log_n - mx) * (p.log_t - my), den += (p.log_n - mx) * (p.log_n - mx);
    return num / den;
  };
  if (opt_samples.size() >= 2) {
    std::cout << "slope hatt " << slope(opt_samples) << "\n";
    std::cout << "slope hatt-unopt " << slope(unopt_samples) << "\n";
  }
  write_file(out, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion-to-qubit mapping compiler"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--tol", g.tol, "coefficient pruning tolerance");
  app.add_option("--trace", g.trace_path, "write per-step construction trace (JSONL)");
  app.add_option("--threads", g.threads, "candidate-scan worker threads (0 = auto)");
  app.add_option("--seed", g.seed, "seed for randomized benchmarks");

  app.fallthrough();

  auto* gen = app.add_subcommand("gen", "generate a model Hamiltonian (.fop)")->fallthrough();
  auto* hub = gen->add_subcommand("fermi-hubbard", "2D Fermi-Hubbard lattice")->fallthrough();
  unsigned rows = 2, cols = 2;
  double t = 1.0, u = 4.0;
  bool periodic = false;
  std::string gen_out = "hubbard.fop";
  hub->add_option("--rows", rows)->required();
  hub->add_option("--cols", cols)->required();
  hub->add_option("--t", t, "hopping amplitude");
  hub->add_option("--u", u, "on-site interaction");
  hub->add_flag("--periodic", periodic);
  hub->add_option("--out", gen_out);
  gen->require_subcommand(1);

  std::string input, method = "hatt", out_dir = "out";
  bool btt_leaf_order = false, dump_tree = false;
  auto add_mapping_opts = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, ".fop or .mop file")->required();
    cmd->add_option("--mapping", method)
        ->check(CLI::IsMember({"jw", "bk", "btt", "hatt-unopt", "hatt"}));
    cmd->add_flag("--btt-leaf-order", btt_leaf_order,
                  "btt only: assign strings by leaf order instead of vacuum pairing");
  };

  auto* compile = app.add_subcommand("compile", "map a Hamiltonian to qubit form")->fallthrough();
  add_mapping_opts(compile);
  compile->add_option("--out-dir", out_dir);
  compile->add_flag("--dump-tree", dump_tree, "also write the mapping tree as an s-expression");

  auto* circuit = app.add_subcommand("circuit", "emit a Trotter-step circuit")->fallthrough();
  add_mapping_opts(circuit);
  double evo_time = 1.0;
  unsigned steps = 1;
  circuit->add_option("--time", evo_time, "evolution time");
  circuit->add_option("--steps", steps, "Trotter steps");
  circuit->add_option("--out-dir", out_dir);

  auto* verify = app.add_subcommand("verify", "check a mapping JSON")->fallthrough();
  std::string mapping_path, verify_input;
  verify->add_option("--mapping-json", mapping_path)->required();
  verify->add_option("--input", verify_input, "optional Hamiltonian to map and inspect");

  auto* bench = app.add_subcommand("bench-scaling", "time the greedy constructions")->fallthrough();
  unsigned max_modes = 128;
  std::string bench_out = "scaling.csv";
  bench->add_option("--max-modes", max_modes);
  bench->add_option("--out", bench_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(rows, cols, t, u, periodic, gen_out);
    if (compile->parsed()) return cmd_compile(input, method, btt_leaf_order, out_dir, dump_tree, g);
    if (circuit->parsed())
      return cmd_circuit(input, method, btt_leaf_order, evo_time, steps, out_dir, g);
    if (verify->parsed()) return cmd_verify(mapping_path, verify_input, g);
    if (bench->parsed()) return cmd_bench_scaling(max_modes, bench_out, g);
  } catch (const f2q::fermion::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
