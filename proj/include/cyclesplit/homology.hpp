#pragma once

// Reduced simplicial homology dimensions over the rationals, computed with
// exact integer arithmetic only. Ranks come from gcd-normalized integer
// echelon elimination by default, with fraction-free (determinant-identity)
// elimination as an independent cross-check method. Both run in checked
// 64-bit arithmetic and transparently redo the computation in arbitrary
// precision if an intermediate value would overflow.

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "graph.hpp"

namespace cyclesplit {

using IntMatrix = std::vector<std::vector<long long>>;

namespace detail {

using bigint = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<bigint>>;

struct int_overflow {};

inline long long ck_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r) || r == LLONG_MIN) throw int_overflow{};
  return r;
}
inline long long ck_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r) || r == LLONG_MIN) throw int_overflow{};
  return r;
}
inline long long ck_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r) || r == LLONG_MIN) throw int_overflow{};
  return r;
}
inline long long ck_div(long long a, long long b) { return a / b; }

inline bigint ck_add(const bigint& a, const bigint& b) { return a + b; }
inline bigint ck_sub(const bigint& a, const bigint& b) { return a - b; }
inline bigint ck_mul(const bigint& a, const bigint& b) { return a * b; }
inline bigint ck_div(const bigint& a, const bigint& b) { return a / b; }

inline long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
inline bigint gcd_of(const bigint& a, const bigint& b) { return boost::multiprecision::gcd(a, b); }

inline bool abs_less(long long a, long long b) { return std::llabs(a) < std::llabs(b); }
inline bool abs_less(const bigint& a, const bigint& b) {
  return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
}

// Divide a row (from `from` on) by the gcd of its entries to keep growth down.
template <class T>
void normalize_row(std::vector<T>& row, size_t from) {
  T g(0);
  for (size_t c = from; c < row.size(); ++c)
    if (row[c] != 0) g = gcd_of(g, row[c]);
  if (g != 0 && g != 1 && g != -1)
    for (size_t c = from; c < row.size(); ++c) row[c] = ck_div(row[c], g);
}

// Forward elimination over the integers; each step cross-multiplies by
// gcd-reduced cofactors, so entries stay integral. The pivot with the
// smallest magnitude is chosen to limit growth.
template <class T>
size_t echelon_rank_impl(std::vector<std::vector<T>>& m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (m[r][col] != 0 && (piv == rows || abs_less(m[r][col], m[piv][col]))) piv = r;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    normalize_row(m[rank], col);
    const T p = m[rank][col];
    for (size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const T g = gcd_of(p, m[r][col]);
      const T a = ck_div(p, g), b = ck_div(m[r][col], g);
      for (size_t c = col; c < cols; ++c)
        m[r][c] = ck_sub(ck_mul(a, m[r][c]), ck_mul(b, m[rank][c]));
      normalize_row(m[r], col + 1);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free elimination: every intermediate entry is a minor of the
// input, and division by the previous pivot is exact.
template <class T>
size_t bareiss_rank_impl(std::vector<std::vector<T>>& m) {
  const size_t rows = m.size();
  if (rows == 0) return 0;
  const size_t cols = m[0].size();
  size_t rank = 0;
  T prev(1);
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rows;
    for (size_t r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const T p = m[rank][col];
    for (size_t r = rank + 1; r < rows; ++r) {
      for (size_t c = col + 1; c < cols; ++c)
        m[r][c] = ck_div(ck_sub(ck_mul(p, m[r][c]), ck_mul(m[r][col], m[rank][c])), prev);
      m[r][col] = T(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

inline BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.size());
  for (size_t r = 0; r < m.size(); ++r) out[r].assign(m[r].begin(), m[r].end());
  return out;
}

}  // namespace detail

inline size_t rank_integer_echelon(const IntMatrix& in) {
  IntMatrix m = in;
  try {
    return detail::echelon_rank_impl(m);
  } catch (const detail::int_overflow&) {
    auto big = detail::to_big(in);
    return detail::echelon_rank_impl(big);
  }
}

inline size_t rank_fraction_free(const IntMatrix& in) {
  IntMatrix m = in;
  try {
    return detail::bareiss_rank_impl(m);
  } catch (const detail::int_overflow&) {
    auto big = detail::to_big(in);
    return detail::bareiss_rank_impl(big);
  }
}

// ---------------------------------------------------------------------------
// Simplicial complexes. facets is an antichain of vertex masks; {} is the
// void complex, {0} the complex whose only face is the empty face.

struct SimplicialComplex {
  std::vector<std::string> vertex_names;
  std::vector<uint64_t> facets;

  bool is_void() const { return facets.empty(); }
};

namespace detail {

inline std::vector<uint64_t> maximal_antichain(std::vector<uint64_t> sets) {
  std::sort(sets.begin(), sets.end(),
            [](uint64_t a, uint64_t b) { return std::popcount(a) > std::popcount(b); });
  std::vector<uint64_t> out;
  for (uint64_t s : sets) {
    bool covered = false;
    for (uint64_t t : out)
      if ((s & ~t) == 0) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All faces grouped by vertex count; by_size[s] is sorted ascending.
inline std::vector<std::vector<uint64_t>> faces_from_facets(const std::vector<uint64_t>& facets,
                                                            size_t face_cap) {
  std::unordered_set<uint64_t> seen;
  for (uint64_t f : facets) {
    uint64_t s = f;
    while (true) {
      seen.insert(s);
      if (seen.size() > face_cap)
        throw cap_exceeded("complex has more than " + std::to_string(face_cap) + " faces");
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  int max_size = 0;
  for (uint64_t f : seen) max_size = std::max(max_size, std::popcount(f));
  std::vector<std::vector<uint64_t>> by_size(max_size + 1);
  for (uint64_t f : seen) by_size[std::popcount(f)].push_back(f);
  for (auto& b : by_size) std::sort(b.begin(), b.end());
  return by_size;
}

inline IntMatrix boundary_matrix(const std::vector<uint64_t>& rows,
                                 const std::vector<uint64_t>& cols) {
  IntMatrix m(rows.size(), std::vector<long long>(cols.size(), 0));
  for (size_t j = 0; j < cols.size(); ++j) {
    uint64_t f = cols[j];
    int t = 0;
    uint64_t rest = f;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      uint64_t sub = f ^ (uint64_t{1} << v);
      auto it = std::lower_bound(rows.begin(), rows.end(), sub);
      m[it - rows.begin()][j] = (t % 2 == 0) ? 1 : -1;
      ++t;
    }
  }
  return m;
}

inline size_t boundary_rank(const std::vector<uint64_t>& rows, const std::vector<uint64_t>& cols) {
  IntMatrix m = boundary_matrix(rows, cols);
  try {
    return echelon_rank_impl(m);
  } catch (const int_overflow&) {
    auto big = to_big(boundary_matrix(rows, cols));
    return echelon_rank_impl(big);
  }
}

// Reduced homology dimensions from bucketed faces; out[s] = dim H~_{s-1}.
// Empty result for the void complex.
inline std::vector<long long> homology_of_buckets(const std::vector<std::vector<uint64_t>>& by_size) {
  if (by_size.empty() || by_size[0].empty()) return {};
  const int top = static_cast<int>(by_size.size()) - 1;
  std::vector<size_t> r(top + 2, 0);
  for (int s = 1; s <= top; ++s)
    if (!by_size[s].empty()) r[s] = boundary_rank(by_size[s - 1], by_size[s]);
  std::vector<long long> out(top + 1);
  for (int s = 0; s <= top; ++s)
    out[s] = static_cast<long long>(by_size[s].size()) - static_cast<long long>(r[s]) -
             static_cast<long long>(r[s + 1]);
  return out;
}

}  // namespace detail

// Maximal independent sets of g, via Bron-Kerbosch with pivoting on the
// complement graph.
inline SimplicialComplex independence_complex(const Graph& g) {
  const int n = g.vertex_count();
  SimplicialComplex c;
  c.vertex_names = g.vertex_names();
  std::vector<uint64_t> nonadj(n);
  const uint64_t full = g.full_mask();
  for (int v = 0; v < n; ++v)
    nonadj[v] = full & ~g.adjacency(v) & ~(uint64_t{1} << v);

  struct Bk {
    const std::vector<uint64_t>& nonadj;
    std::vector<uint64_t>& out;
    void run(uint64_t r, uint64_t p, uint64_t x) {
      if (p == 0 && x == 0) {
        out.push_back(r);
        if (out.size() > (size_t{1} << 20))
          throw cap_exceeded("independence complex has more than 2^20 facets");
        return;
      }
      uint64_t px = p | x;
      int pivot = -1, best = -1;
      uint64_t scan = px;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int cnt = std::popcount(p & nonadj[v]);
        if (cnt > best) {
          best = cnt;
          pivot = v;
        }
      }
      uint64_t cand = p & ~nonadj[pivot];
      while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        uint64_t bit = uint64_t{1} << v;
        run(r | bit, p & nonadj[v], x & nonadj[v]);
        p &= ~bit;
        x |= bit;
      }
    }
  };

  Bk{nonadj, c.facets}.run(0, full, 0);
  std::sort(c.facets.begin(), c.facets.end());
  return c;
}

// Independence complex of the induced subgraph g[w].
inline SimplicialComplex induced_subcomplex(const Graph& g, const std::vector<std::string>& w) {
  uint64_t mask = 0;
  for (const auto& name : w) mask |= uint64_t{1} << g.require_vertex(name);
  std::vector<int> keep = mask_to_vector(mask);
  std::vector<std::string> names;
  for (int v : keep) names.push_back(g.name(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : g.edges())
    if ((mask >> a) & (mask >> b) & 1) edges.emplace_back(g.name(a), g.name(b));
  return independence_complex(Graph::from_edges(edges, names));
}

// Dimensions of reduced rational homology; out[s] = dim H~_{s-1}, so the
// leading entry is H~_{-1} (1 exactly when the complex is {empty face}).
// The void complex returns an empty list.
inline std::vector<long long> reduced_homology_dims(const SimplicialComplex& c,
                                                    size_t face_cap = size_t{1} << 20) {
  if (c.is_void()) return {};
  auto antichain = detail::maximal_antichain(c.facets);
  return detail::homology_of_buckets(detail::faces_from_facets(antichain, face_cap));
}

}  // namespace cyclesplit
