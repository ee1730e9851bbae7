#pragma once

// Graded Betti numbers of square-free monomial ideals through the Hochster
// sum: beta_{i,j}(I) adds dim H~_{j-i-2} of the Stanley-Reisner complex
// restricted to w, over all vertex subsets w of size j. Subsets are pruned
// to those in which every vertex lies in some fully-contained generator
// support (anything else restricts to a cone or a full simplex, which is
// acyclic). Also: column totals, the splitting-sum check, the wheel closed
// form, and the text table renderer.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "monomial.hpp"

namespace cyclesplit {

struct BettiTable {
  // (homological degree i, internal degree j) -> multiplicity; zeros absent.
  std::map<std::pair<int, int>, long long> entries;

  long long get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int i, int j, long long v) {
    if (v == 0) return;
    auto& e = entries[{i, j}];
    e += v;
    if (e == 0) entries.erase({i, j});
  }
  bool operator==(const BettiTable&) const = default;
};

inline std::vector<long long> total_betti(const BettiTable& t) {
  int max_i = -1;
  for (const auto& [ij, v] : t.entries) max_i = std::max(max_i, ij.first);
  std::vector<long long> tot(max_i + 1, 0);
  for (const auto& [ij, v] : t.entries) tot[ij.first] += v;
  return tot;
}

struct BettiOptions {
  int vertex_cap = 14;   // refuse when the ideal's support exceeds this
  unsigned threads = 0;  // 0 = hardware concurrency
};

namespace detail {

// Hochster sum over the subset range [lo, hi) of the compressed support.
// cover[m] = union of generator supports contained in m; a subset w
// contributes only when cover[w] == w.
inline BettiTable hochster_range(const std::vector<uint64_t>& cover, uint64_t lo, uint64_t hi) {
  BettiTable local;
  std::vector<std::vector<uint64_t>> buckets;
  for (uint64_t w = lo; w < hi; ++w) {
    if (w == 0 || cover[w] != w) continue;
    const int j = std::popcount(w);
    buckets.assign(j + 1, {});
    uint64_t s = w;
    while (true) {
      if (cover[s] == 0) buckets[std::popcount(s)].push_back(s);
      if (s == 0) break;
      s = (s - 1) & w;
    }
    while (!buckets.empty() && buckets.back().empty()) buckets.pop_back();
    for (auto& b : buckets) std::sort(b.begin(), b.end());
    auto h = homology_of_buckets(buckets);
    for (size_t x = 0; x < h.size(); ++x)
      if (h[x] > 0) local.add(j - static_cast<int>(x) - 1, j, h[x]);
  }
  return local;
}

}  // namespace detail

inline BettiTable graded_betti_ideal(const MonomialIdeal& ideal, const BettiOptions& opt = {}) {
  BettiTable table;
  if (ideal.is_zero()) return table;
  uint64_t support = 0;
  for (Monomial g : ideal.gens) support |= g.vars;
  const std::vector<int> vars = mask_to_vector(support);
  const int n = static_cast<int>(vars.size());
  if (n > opt.vertex_cap)
    throw cap_exceeded("betti computation over " + std::to_string(n) +
                       " variables exceeds the cap of " + std::to_string(opt.vertex_cap) +
                       " (raise it explicitly for larger inputs)");

  // compress variables to bit positions 0..n-1
  std::vector<int> slot(64, -1);
  for (int t = 0; t < n; ++t) slot[vars[t]] = t;
  const uint64_t big = uint64_t{1} << n;
  std::vector<uint64_t> cover(big, 0);
  for (Monomial g : ideal.gens) {
    uint64_t c = 0;
    for (int v : mask_to_vector(g.vars)) c |= uint64_t{1} << slot[v];
    cover[c] = c;
  }
  for (int b = 0; b < n; ++b)
    for (uint64_t m = 0; m < big; ++m)
      if ((m >> b) & 1) cover[m] |= cover[m ^ (uint64_t{1} << b)];

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || big < 2048) {
    table = detail::hochster_range(cover, 0, big);
  } else {
    std::vector<std::future<BettiTable>> parts;
    const uint64_t chunk = (big + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      uint64_t lo = t * chunk, hi = std::min(big, lo + chunk);
      if (lo >= hi) break;
      parts.push_back(std::async(std::launch::async,
                                 [&cover, lo, hi] { return detail::hochster_range(cover, lo, hi); }));
    }
    for (auto& p : parts) {
      BettiTable part = p.get();
      for (const auto& [ij, v] : part.entries) table.add(ij.first, ij.second, v);
    }
  }
  return table;
}

inline BettiTable graded_betti(const Graph& g, const BettiOptions& opt = {}) {
  return graded_betti_ideal(edge_ideal(g), opt);
}

// ---------------------------------------------------------------------------
// Splitting-sum check: beta_i(I) ?= beta_i(J) + beta_i(K) + beta_{i-1}(J cap K)
// with beta_{-1} := 0, where I is generated by the union of the generators.
// The column (total) comparison is the asserted form; the graded per-(i,j)
// comparison is reported alongside as information.

struct EkColumn {
  int i;
  long long lhs, rhs;
  bool equal;
};

struct EkCell {
  int i, j;
  long long lhs, rhs;
  bool equal;
};

struct EkReport {
  std::vector<EkColumn> columns;
  bool overall = false;
  std::vector<EkCell> graded;
  bool graded_overall = false;
  BettiTable full, cycle_part, complement_part, intersection;
};

inline EkReport ek_check_ideals(const MonomialIdeal& j_part, const MonomialIdeal& k_part,
                                const BettiOptions& opt = {}) {
  EkReport rep;
  std::vector<Monomial> all;
  all.insert(all.end(), j_part.gens.begin(), j_part.gens.end());
  all.insert(all.end(), k_part.gens.begin(), k_part.gens.end());
  MonomialIdeal full = minimalize(std::move(all));
  MonomialIdeal inter = intersect(j_part, k_part);

  rep.full = graded_betti_ideal(full, opt);
  rep.cycle_part = graded_betti_ideal(j_part, opt);
  rep.complement_part = graded_betti_ideal(k_part, opt);
  rep.intersection = graded_betti_ideal(inter, opt);

  auto tot_i = total_betti(rep.full);
  auto tot_j = total_betti(rep.cycle_part);
  auto tot_k = total_betti(rep.complement_part);
  auto tot_jk = total_betti(rep.intersection);
  auto at = [](const std::vector<long long>& v, int i) {
    return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : 0;
  };
  int cols = std::max({static_cast<int>(tot_i.size()), static_cast<int>(tot_j.size()),
                       static_cast<int>(tot_k.size()), static_cast<int>(tot_jk.size()) + 1});
  rep.overall = true;
  for (int i = 0; i < cols; ++i) {
    long long lhs = at(tot_i, i);
    long long rhs = at(tot_j, i) + at(tot_k, i) + at(tot_jk, i - 1);
    rep.columns.push_back({i, lhs, rhs, lhs == rhs});
    rep.overall = rep.overall && lhs == rhs;
  }

  std::map<std::pair<int, int>, bool> cells;
  for (const auto& [ij, v] : rep.full.entries) cells[ij] = true;
  for (const auto& [ij, v] : rep.cycle_part.entries) cells[ij] = true;
  for (const auto& [ij, v] : rep.complement_part.entries) cells[ij] = true;
  for (const auto& [ij, v] : rep.intersection.entries) cells[{ij.first + 1, ij.second}] = true;
  rep.graded_overall = true;
  for (const auto& [ij, unused] : cells) {
    auto [i, j] = ij;
    long long lhs = rep.full.get(i, j);
    long long rhs = rep.cycle_part.get(i, j) + rep.complement_part.get(i, j) +
                    rep.intersection.get(i - 1, j);
    rep.graded.push_back({i, j, lhs, rhs, lhs == rhs});
    rep.graded_overall = rep.graded_overall && lhs == rhs;
  }
  return rep;
}

inline EkReport ek_check(const Graph& g, const CyclePartition& cp, const BettiOptions& opt = {}) {
  MonomialIdeal j_part = ideal_from_edges(cp.cycle_edges);
  std::vector<Edge> rest = cp.cross_edges;
  rest.insert(rest.end(), cp.outside_edges.begin(), cp.outside_edges.end());
  MonomialIdeal k_part = ideal_from_edges(rest);
  return ek_check_ideals(j_part, k_part, opt);
}

// ---------------------------------------------------------------------------
// Wheel closed form. For the wheel on 2k+1 vertices (rim cycle of length 2k
// plus a hub joined to every rim vertex):
//
//   beta_{i,j}(W) = beta_{i,j}(C_2k) + beta_{i,j}(S_k)
//                 + beta_{i-1,j-1}(C_2k) + [j = i+2] * sum_{a=k}^{2k-1} C(a,i)
//
// The third term is the intersection contribution of the half-spoked wheel
// (its J cap K equals the rim ideal times the hub variable, which shifts the
// internal degree by one); the bracketed term accounts for the remaining
// spokes. Ingredient tables come from the Hochster engine.

inline long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long out = 1;
  for (int t = 1; t <= r; ++t) out = out * (n - r + t) / t;
  return out;
}

inline BettiTable wheel_formula_betti(int k, const BettiOptions& opt = {}) {
  if (k < 2) throw input_error("wheel formula requires k >= 2");
  BettiTable c2k = graded_betti(cycle_graph(2 * k), opt);
  BettiTable sk = graded_betti(star_graph(k), opt);
  BettiTable out = c2k;
  for (const auto& [ij, v] : sk.entries) out.add(ij.first, ij.second, v);
  for (const auto& [ij, v] : c2k.entries) out.add(ij.first + 1, ij.second + 1, v);
  for (int i = 0; i <= 2 * k - 1; ++i) {
    long long s = 0;
    for (int a = k; a <= 2 * k - 1; ++a) s += binomial(a, i);
    out.add(i, i + 2, s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text rendering. Entry beta_{i,j} lands at column i+1, row j-i-1; zero
// cells inside the hull print as "-", and a totals row closes the table.

inline std::string render_betti_table(const BettiTable& t) {
  int ncols = 0, nrows = 0;
  for (const auto& [ij, v] : t.entries) {
    ncols = std::max(ncols, ij.first + 1);
    nrows = std::max(nrows, ij.second - ij.first - 1);
  }
  auto totals = total_betti(t);
  auto cell_text = [&](int r, int c) {
    long long v = t.get(c - 1, r + c);
    return v == 0 ? std::string("-") : std::to_string(v);
  };

  std::vector<std::string> labels;
  for (int r = 1; r <= nrows; ++r) labels.push_back(std::to_string(r) + ":");
  labels.push_back("total:");
  size_t lw = 0;
  for (const auto& s : labels) lw = std::max(lw, s.size());

  std::vector<size_t> cw(ncols);
  for (int c = 1; c <= ncols; ++c) {
    cw[c - 1] = std::to_string(c).size();
    for (int r = 1; r <= nrows; ++r) cw[c - 1] = std::max(cw[c - 1], cell_text(r, c).size());
    cw[c - 1] = std::max(cw[c - 1], std::to_string(totals[c - 1]).size());
  }

  auto pad_left = [](const std::string& s, size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };
  auto pad_right = [](const std::string& s, size_t w) {
    return s + std::string(w - s.size(), ' ');
  };

  std::string out;
  auto emit_row = [&](const std::string& label, auto cell_of) {
    std::string line = pad_right(label, lw);
    for (int c = 1; c <= ncols; ++c) line += "  " + pad_left(cell_of(c), cw[c - 1]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit_row("", [](int c) { return std::to_string(c); });
  for (int r = 1; r <= nrows; ++r)
    emit_row(labels[r - 1], [&](int c) { return cell_text(r, c); });
  emit_row("total:", [&](int c) { return std::to_string(totals[c - 1]); });
  return out;
}

}  // namespace cyclesplit
