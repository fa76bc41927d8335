// Copyright (c) f2q contributors.
// SPDX-License-Identifier: Apache-2.0

#include "f2q/hatt.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace f2q::hatt {

ReducedHamiltonian ReducedHamiltonian::from_majorana(const fermion::MajoranaHamiltonian& h) {
  ReducedHamiltonian rh;
  rh.n_modes = h.n_modes;
  rh.terms.reserve(h.terms.size());
  for (const auto& t : h.terms) {
    for (unsigned i : t.indices)
      if (i >= 2 * h.n_modes) throw std::invalid_argument("Majorana index out of range");
    rh.terms.push_back(t.indices);
  }
  return rh;
}

std::uint64_t ReducedHamiltonian::weight_on_qubit(const std::array<unsigned, 3>& sel) const {
  std::uint64_t w = 0;
  for (const auto& term : terms) {
    unsigned k = 0;
    for (unsigned s : sel) k += std::binary_search(term.begin(), term.end(), s) ? 1u : 0u;
    if (k == 1 || k == 2) ++w;
  }
  return w;
}

std::vector<unsigned> ReducedHamiltonian::reduce(const std::array<unsigned, 3>& sel,
                                                 unsigned new_id) {
  std::vector<unsigned> touched_odd;
  for (unsigned tid = 0; tid < terms.size(); ++tid) {
    auto& term = terms[tid];
    unsigned k = 0;
    for (unsigned s : sel) {
      auto it = std::lower_bound(term.begin(), term.end(), s);
      if (it != term.end() && *it == s) {
        term.erase(it);
        ++k;
      }
    }
    if (k % 2 == 1) {
      // new_id exceeds every id handed out so far, so appending keeps order.
      term.push_back(new_id);
      touched_odd.push_back(tid);
    }
  }
  return touched_odd;
}

namespace {

constexpr std::uint64_t kNoWeight = std::numeric_limits<std::uint64_t>::max();

// Epoch-stamped per-term counters so a candidate evaluation costs
// O(deg(a)+deg(b)+deg(c)) with no clearing between candidates.
struct Scratch {
  std::vector<std::uint64_t> stamp;
  std::vector<std::uint8_t> cnt;
  std::uint64_t epoch = 0;

  explicit Scratch(std::size_t n_terms) : stamp(n_terms, 0), cnt(n_terms, 0) {}
};

struct Candidate {
  std::uint64_t weight = kNoWeight;
  // Scan position used for deterministic tie-breaking (first minimum wins).
  std::uint64_t key = kNoWeight;
  unsigned a = 0, b = 0, c = 0;  // frontier members being merged
};

struct Builder {
  unsigned n;
  ReducedHamiltonian rh;
  tree::TernaryTree tree;
  tree::DescMaps maps;
  std::vector<unsigned> frontier;              // ascending node ids
  std::vector<std::vector<unsigned>> incidence;  // node id -> ids of terms containing it
  std::vector<char> in_frontier;
  Options opts;

  Builder(const fermion::MajoranaHamiltonian& h, Options o)
      : n(h.n_modes),
        rh(ReducedHamiltonian::from_majorana(h)),
        tree(h.n_modes),
        maps(tree::DescMaps::initial(h.n_modes)),
        incidence(3 * h.n_modes + 1),
        in_frontier(3 * h.n_modes + 1, 0),
        opts(std::move(o)) {
    frontier.resize(2 * n + 1);
    for (unsigned leaf = 0; leaf <= 2 * n; ++leaf) {
      frontier[leaf] = leaf;
      in_frontier[leaf] = 1;
    }
    for (unsigned tid = 0; tid < rh.terms.size(); ++tid)
      for (unsigned node : rh.terms[tid]) incidence[node].push_back(tid);
    if (opts.threads == 0) opts.threads = std::max(1u, std::thread::hardware_concurrency());
    if (opts.observer) opts.threads = 1;
  }

  std::uint64_t weight_fast(unsigned a, unsigned b, unsigned c, Scratch& sc) const {
    ++sc.epoch;
    std::uint64_t distinct = 0, triples = 0;
    for (unsigned node : {a, b, c}) {
      for (unsigned tid : incidence[node]) {
        if (sc.stamp[tid] != sc.epoch) {
          sc.stamp[tid] = sc.epoch;
          sc.cnt[tid] = 1;
          ++distinct;
        } else if (++sc.cnt[tid] == 3) {
          ++triples;
        }
      }
    }
    return distinct - triples;
  }

  // Z-descendant leaf of a frontier node, and the frontier node whose
  // Z-descendant is a given leaf (-1 if that leaf is nobody's).
  int desc_down(unsigned node) const {
    if (opts.explicit_traversal) return static_cast<int>(tree.desc_z(node));
    return maps.down[node];
  }
  int desc_up(unsigned leaf) const {
    if (!opts.explicit_traversal) return maps.up[leaf];
    unsigned cur = leaf;
    while (!in_frontier[cur]) {
      int p = tree.parent(cur);
      if (p == -1) return -1;
      cur = static_cast<unsigned>(p);
    }
    return tree.desc_z(cur) == leaf ? static_cast<int>(cur) : -1;
  }

  void merge(unsigned step, const Candidate& best, bool paired, StepInfo* info) {
    unsigned new_id = tree.internal_id_of_qubit(step);
    unsigned cx = best.a, cy = best.b, cz = best.c;
    if (paired) {
      // Put the even leaf of the partner pair on the X branch.
      unsigned x = static_cast<unsigned>(desc_down(best.a));
      if (x % 2 == 1) std::swap(cx, cy);
    }
    if (info) {
      info->step = step;
      info->new_node = new_id;
      info->ox = cx;
      info->oy = cy;
      info->oz = cz;
      info->weight = best.weight;
      info->node_set = frontier;
      info->state = rh;
      opts.observer(*info);
    }
    tree.attach(new_id, cx, cy, cz);
    maps.update(new_id, cx, cy, cz);
    auto touched = rh.reduce({best.a, best.b, best.c}, new_id);
    incidence[new_id] = std::move(touched);
    for (unsigned node : {best.a, best.b, best.c}) {
      in_frontier[node] = 0;
      frontier.erase(std::find(frontier.begin(), frontier.end(), node));
    }
    in_frontier[new_id] = 1;
    frontier.push_back(new_id);  // new_id is the largest id so far
  }

  // ---- paired scan (the O(N^3) construction) ----

  // Y partner of frontier node a, or -1 when a holds the vacuum leaf 2N or
  // the partner coincides with a (never happens for a well-formed frontier).
  int partner_of(unsigned a) const {
    unsigned x = static_cast<unsigned>(desc_down(a));
    if (x == 2 * n) return -1;
    return desc_up(x ^ 1u);
  }

  Candidate scan_paired_range(std::size_t lo, std::size_t hi, Scratch& sc,
                              StepInfo* info) const {
    Candidate best;
    std::size_t m = frontier.size();
    for (std::size_t ia = lo; ia < hi; ++ia) {
      unsigned a = frontier[ia];
      int b = partner_of(a);
      for (std::size_t ic = 0; ic < m; ++ic) {
        if (ic == ia) continue;
        unsigned c = frontier[ic];
        if (b == -1 || static_cast<unsigned>(b) == c) {
          if (info) info->discarded.emplace_back(a, c);
          continue;
        }
        std::uint64_t w = weight_fast(a, static_cast<unsigned>(b), c, sc);
        std::uint64_t key = static_cast<std::uint64_t>(ia) * m + ic;
        if (info && static_cast<unsigned>(b) != a) {
          unsigned x = static_cast<unsigned>(desc_down(a));
          unsigned cx = a, cy = static_cast<unsigned>(b);
          if (x % 2 == 1) std::swap(cx, cy);
          info->candidates.push_back({cx, cy, c});
        }
        if (w < best.weight || (w == best.weight && key < best.key)) {
          best = {w, key, a, static_cast<unsigned>(b), c};
        }
      }
    }
    return best;
  }

  Candidate scan_paired(StepInfo* info) const {
    std::size_t m = frontier.size();
    unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(opts.threads, m));
    if (nthreads <= 1) {
      Scratch sc(rh.terms.size());
      return scan_paired_range(0, m, sc, info);
    }
    std::vector<Candidate> results(nthreads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
      std::size_t lo = m * t / nthreads, hi = m * (t + 1) / nthreads;
      workers.emplace_back([this, lo, hi, t, &results] {
        Scratch sc(rh.terms.size());
        results[t] = scan_paired_range(lo, hi, sc, nullptr);
      });
    }
    for (auto& w : workers) w.join();
    Candidate best;
    for (const auto& r : results)
      if (r.weight < best.weight || (r.weight == best.weight && r.key < best.key)) best = r;
    return best;
  }

  // ---- exhaustive triple scan (baseline construction) ----

  Candidate scan_triples_range(std::size_t lo, std::size_t hi, Scratch& sc,
                               StepInfo* info) const {
    Candidate best;
    std::size_t m = frontier.size();
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        for (std::size_t k = j + 1; k < m; ++k) {
          unsigned a = frontier[i], b = frontier[j], c = frontier[k];
          std::uint64_t w = weight_fast(a, b, c, sc);
          std::uint64_t key = (static_cast<std::uint64_t>(i) * m + j) * m + k;
          if (info) info->candidates.push_back({a, b, c});
          if (w < best.weight || (w == best.weight && key < best.key)) {
            best = {w, key, a, b, c};
          }
        }
      }
    }
    return best;
  }

  Candidate scan_triples(StepInfo* info) const {
    std::size_t m = frontier.size();
    unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(opts.threads, m));
    if (nthreads <= 1 || m < 3) {
      Scratch sc(rh.terms.size());
      return scan_triples_range(0, m, sc, info);
    }
    std::vector<Candidate> results(nthreads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < nthreads; ++t) {
      std::size_t lo = m * t / nthreads, hi = m * (t + 1) / nthreads;
      workers.emplace_back([this, lo, hi, t, &results] {
        Scratch sc(rh.terms.size());
        results[t] = scan_triples_range(lo, hi, sc, nullptr);
      });
    }
    for (auto& w : workers) w.join();
    Candidate best;
    for (const auto& r : results)
      if (r.weight < best.weight || (r.weight == best.weight && r.key < best.key)) best = r;
    return best;
  }

  Mapping run(bool paired) {
    for (unsigned step = 0; step < n; ++step) {
      StepInfo info;
      StepInfo* ip = opts.observer ? &info : nullptr;
      Candidate best = paired ? scan_paired(ip) : scan_triples(ip);
      if (best.weight == kNoWeight)
        throw std::logic_error("no feasible merge candidate");  // cannot happen
      merge(step, best, paired, ip);
    }
    if (paired && tree.desc_z(tree.root()) != 2 * n)
      throw std::logic_error("vacuum leaf is not the rightmost descendant");
    Mapping m;
    m.n_modes = n;
    m.method = paired ? Method::HATT : Method::HATT_UNOPT;
    m.vacuum_preserving = paired;
    m.strings = tree.extract_strings();
    m.strings.pop_back();  // leaf 2N does not correspond to a Majorana
    m.source_tree = std::move(tree);
    return m;
  }
};

}  // namespace

Mapping build(const fermion::MajoranaHamiltonian& h, const Options& opts) {
  if (h.n_modes == 0) throw std::invalid_argument("n_modes must be >= 1");
  return Builder(h, opts).run(/*paired=*/true);
}

Mapping build_unopt(const fermion::MajoranaHamiltonian& h, const Options& opts) {
  if (h.n_modes == 0) throw std::invalid_argument("n_modes must be >= 1");
  return Builder(h, opts).run(/*paired=*/false);
}

}  // namespace f2q::hatt
