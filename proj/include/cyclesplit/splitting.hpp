#pragma once

// Splitting machinery for edge ideals decomposed along an induced chordless
// cycle: I(G) = J + K with J the cycle ideal and K the rest. Provides the
// A/B/C description of the intersection's generators, the direct
// construction of the splitting function under the degree condition, the
// two verification predicates (lcm condition and strict divisibility over
// all generator subsets), exhaustive search for a splitting function, and a
// certificate assembling the lot.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "monomial.hpp"

namespace cyclesplit {

namespace detail {
inline Monomial edge_monomial(Edge e) {
  return {(uint64_t{1} << e.first) | (uint64_t{1} << e.second)};
}
inline bool has_generator(const MonomialIdeal& ideal, Monomial m) {
  for (Monomial g : ideal.gens)
    if (g == m) return true;
  return false;
}
inline void sort_unique(std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end(), monomial_less);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}
}  // namespace detail

// Generators of J cap K sorted into the three shapes they can take when the
// cycle is chordless:
//   a_set: degree 3, a cycle edge times an outside vertex attached to one of
//          its endpoints;
//   b_set: degree 4, a cycle edge times a cross edge elsewhere on the cycle,
//          kept only when no a_set element divides it;
//   c_set: degree 4, a cycle edge times an outside edge, same filter.
struct AbcDecomposition {
  std::vector<Monomial> a_set, b_set, c_set;

  std::vector<Monomial> flattened() const {
    std::vector<Monomial> all = a_set;
    all.insert(all.end(), b_set.begin(), b_set.end());
    all.insert(all.end(), c_set.begin(), c_set.end());
    std::sort(all.begin(), all.end(), monomial_less);
    return all;
  }
};

inline AbcDecomposition abc_decomposition(const Graph& g, const CyclePartition& cp) {
  AbcDecomposition out;
  for (Edge eu : cp.cycle_edges)
    for (Edge ex : cp.cross_edges) {
      Monomial m = lcm(detail::edge_monomial(eu), detail::edge_monomial(ex));
      if (m.degree() == 3) out.a_set.push_back(m);
    }
  detail::sort_unique(out.a_set);

  auto multiple_of_a = [&](Monomial m) {
    for (Monomial a : out.a_set)
      if (divides(a, m)) return true;
    return false;
  };
  for (Edge eu : cp.cycle_edges)
    for (Edge ex : cp.cross_edges) {
      Monomial m = lcm(detail::edge_monomial(eu), detail::edge_monomial(ex));
      if (m.degree() == 4 && !multiple_of_a(m)) out.b_set.push_back(m);
    }
  detail::sort_unique(out.b_set);
  for (Edge eu : cp.cycle_edges)
    for (Edge ew : cp.outside_edges) {
      Monomial m = lcm(detail::edge_monomial(eu), detail::edge_monomial(ew));
      if (!multiple_of_a(m)) out.c_set.push_back(m);
    }
  detail::sort_unique(out.c_set);
  return out;
}

// ---------------------------------------------------------------------------

struct SplitAssignment {
  Monomial gen, phi, psi;  // gen = lcm(phi, psi); phi from J, psi from K
};

struct SplittingFunction {
  MonomialIdeal j_part, k_part;
  std::vector<SplitAssignment> assignments;  // sorted by gen, total over G(J cap K)
};

inline bool verify_lcm_condition(const SplittingFunction& sf) {
  for (const auto& a : sf.assignments) {
    if (lcm(a.phi, a.psi) != a.gen) return false;
    if (!detail::has_generator(sf.j_part, a.phi)) return false;
    if (!detail::has_generator(sf.k_part, a.psi)) return false;
  }
  return true;
}

// Direct construction per the case analysis: requires that no two adjacent
// cycle vertices both have degree > 2, which makes every choice forced.
inline SplittingFunction build_splitting_function(const Graph& g, const CyclePartition& cp) {
  if (auto w = splitting_condition_witness(g, cp))
    throw input_error("splitting hypothesis violated: adjacent cycle vertices '" +
                      g.name(w->first) + "' and '" + g.name(w->second) +
                      "' both have degree > 2");
  SplittingFunction sf;
  sf.j_part = ideal_from_edges(cp.cycle_edges);
  std::vector<Edge> rest = cp.cross_edges;
  rest.insert(rest.end(), cp.outside_edges.begin(), cp.outside_edges.end());
  sf.k_part = ideal_from_edges(rest);
  if (sf.k_part.is_zero())
    throw input_error("complement ideal is zero; the cycle leaves nothing to split off");

  AbcDecomposition abc = abc_decomposition(g, cp);
  for (Monomial w : abc.a_set) {
    // w = (cycle edge) * (outside vertex); psi is whichever of the two cross
    // edge candidates exists — both existing would violate the hypothesis.
    Monomial phi{w.vars & cp.cycle_mask};
    uint64_t wp = w.vars & cp.outside_mask;
    uint64_t hi = phi.vars & (phi.vars - 1);  // phi has exactly two bits
    uint64_t lo = phi.vars ^ hi;
    Monomial cand1{hi | wp}, cand2{lo | wp};
    bool e1 = detail::has_generator(sf.k_part, cand1);
    bool e2 = detail::has_generator(sf.k_part, cand2);
    if (e1 && e2)
      throw std::logic_error("ambiguous assignment for " +
                             monomial_to_string(w, g.vertex_names()) +
                             " despite the degree condition");
    sf.assignments.push_back({w, phi, e1 ? cand1 : cand2});
  }
  auto assign_first_pair = [&](const std::vector<Monomial>& targets,
                               const std::vector<Edge>& partners) {
    for (Monomial w : targets) {
      bool done = false;
      for (Edge eu : cp.cycle_edges) {
        if (done) break;
        Monomial phi = detail::edge_monomial(eu);
        if (!divides(phi, w)) continue;
        for (Edge p : partners) {
          Monomial psi = detail::edge_monomial(p);
          if (lcm(phi, psi) == w) {
            sf.assignments.push_back({w, phi, psi});
            done = true;
            break;
          }
        }
      }
    }
  };
  assign_first_pair(abc.b_set, cp.cross_edges);
  assign_first_pair(abc.c_set, cp.outside_edges);
  std::sort(sf.assignments.begin(), sf.assignments.end(),
            [](const SplitAssignment& a, const SplitAssignment& b) {
              return monomial_less(a.gen, b.gen);
            });
  return sf;
}

// ---------------------------------------------------------------------------
// Strict divisibility over every nonempty subset S of the assignments:
// lcm of the phi images and lcm of the psi images must each strictly divide
// lcm(S). Subsets are walked depth-first in lexicographic order on generator
// indices, so a reported witness is the lexicographically least violator.

struct StrictDivisibilityResult {
  bool passed = true;
  std::vector<Monomial> witness;  // violating subset, empty when passed
  Monomial witness_lcm, phi_lcm, psi_lcm;
};

inline StrictDivisibilityResult verify_strict_divisibility(const SplittingFunction& sf,
                                                           int max_generators = 20) {
  const int m = static_cast<int>(sf.assignments.size());
  if (m > max_generators)
    throw cap_exceeded("strict-divisibility check over " + std::to_string(m) +
                       " generators needs 2^" + std::to_string(m) +
                       " subsets (cap: " + std::to_string(max_generators) + " generators)");
  StrictDivisibilityResult res;
  std::vector<int> chosen;

  struct Walk {
    const std::vector<SplitAssignment>& as;
    StrictDivisibilityResult& res;
    std::vector<int>& chosen;
    bool run(int next, Monomial ls, Monomial lphi, Monomial lpsi) {
      for (int t = next; t < static_cast<int>(as.size()); ++t) {
        Monomial s = lcm(ls, as[t].gen);
        Monomial p = lcm(lphi, as[t].phi);
        Monomial q = lcm(lpsi, as[t].psi);
        chosen.push_back(t);
        if (!strictly_divides(p, s) || !strictly_divides(q, s)) {
          res.passed = false;
          for (int idx : chosen) res.witness.push_back(as[idx].gen);
          res.witness_lcm = s;
          res.phi_lcm = p;
          res.psi_lcm = q;
          return true;
        }
        if (run(t + 1, s, p, q)) return true;
        chosen.pop_back();
      }
      return false;
    }
  };

  Walk{sf.assignments, res, chosen}.run(0, Monomial{}, Monomial{}, Monomial{});
  return res;
}

// Candidate pairs (f, g) in G(J) x G(K) with lcm(f, g) = w, in canonical
// order — the raw material for both the exhaustive search and the forced-
// assignment analysis.
inline std::vector<std::vector<SplitAssignment>> splitting_candidates(const MonomialIdeal& j_part,
                                                                      const MonomialIdeal& k_part,
                                                                      const MonomialIdeal& inter) {
  std::vector<std::vector<SplitAssignment>> out(inter.gens.size());
  for (size_t t = 0; t < inter.gens.size(); ++t)
    for (Monomial f : j_part.gens)
      for (Monomial g : k_part.gens)
        if (lcm(f, g) == inter.gens[t]) out[t].push_back({inter.gens[t], f, g});
  return out;
}

// Backtracking over the candidate lists; a partial choice is abandoned as
// soon as some subset of the already-assigned generators violates strict
// divisibility, so the subset tables are built incrementally (index bitmask
// over assigned positions). Returns the first function, in candidate order,
// satisfying both conditions; nullopt when the space is exhausted.
inline std::optional<SplittingFunction> search_splitting_function(const MonomialIdeal& j_part,
                                                                  const MonomialIdeal& k_part,
                                                                  int max_generators = 12) {
  MonomialIdeal inter = intersect(j_part, k_part);
  const int m = inter.size();
  if (m > max_generators)
    throw cap_exceeded("splitting-function search over " + std::to_string(m) +
                       " generators exceeds the cap of " + std::to_string(max_generators));
  SplittingFunction sf;
  sf.j_part = j_part;
  sf.k_part = k_part;
  if (m == 0) return sf;

  auto cands = splitting_candidates(j_part, k_part, inter);
  for (const auto& list : cands)
    if (list.empty()) return std::nullopt;  // condition (a) already unsatisfiable

  const size_t full = size_t{1} << m;
  std::vector<uint64_t> ls(full, 0), lp(full, 0), lq(full, 0);
  std::vector<int> pick(m, 0);

  int t = 0;
  while (true) {
    if (pick[t] == static_cast<int>(cands[t].size())) {
      // exhausted candidates at this level: backtrack
      if (t == 0) return std::nullopt;
      pick[t] = 0;
      ++pick[--t];
      continue;
    }
    const SplitAssignment& a = cands[t][pick[t]];
    bool ok = true;
    const size_t bit = size_t{1} << t;
    for (size_t sub = 0; sub < bit && ok; ++sub) {
      size_t s = sub | bit;
      uint64_t lsv = ls[sub] | a.gen.vars;
      uint64_t lpv = lp[sub] | a.phi.vars;
      uint64_t lqv = lq[sub] | a.psi.vars;
      if (lpv == lsv || lqv == lsv) {
        ok = false;
        break;
      }
      ls[s] = lsv;
      lp[s] = lpv;
      lq[s] = lqv;
    }
    if (!ok) {
      ++pick[t];
      continue;
    }
    if (t + 1 == m) {
      for (int r = 0; r < m; ++r) sf.assignments.push_back(cands[r][pick[r]]);
      return sf;
    }
    ++t;
  }
}

// ---------------------------------------------------------------------------

enum class SplitVerdict {
  certified_splitting,
  hypothesis_fails_but_splitting_found,
  no_splitting_function,
  not_checked,
};

inline const char* to_string(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::certified_splitting: return "certified-splitting";
    case SplitVerdict::hypothesis_fails_but_splitting_found:
      return "hypothesis-fails-but-splitting-found";
    case SplitVerdict::no_splitting_function: return "no-splitting-function";
    case SplitVerdict::not_checked: return "not-checked";
  }
  return "not-checked";
}

struct CertifyOptions {
  bool search_fallback = true;      // try the exhaustive search when the hypothesis fails
  int verify_max_generators = 20;   // cap for the 2^m subset check
  int search_max_generators = 12;   // cap for the backtracking search
};

struct SplitCertificate {
  SplitVerdict verdict = SplitVerdict::not_checked;
  bool hypothesis_holds = false;
  bool nonzero_parts = false;
  bool condition_a = false;
  bool condition_b = false;
  std::optional<Edge> hypothesis_witness;  // adjacent cycle pair, both degree > 2
  std::optional<SplittingFunction> function;
  StrictDivisibilityResult strictness;
  MonomialIdeal j_part, k_part, intersection;
};

inline SplitCertificate certify(const Graph& g, const CyclePartition& cp,
                                const CertifyOptions& opt = {}) {
  SplitCertificate cert;
  cert.j_part = ideal_from_edges(cp.cycle_edges);
  std::vector<Edge> rest = cp.cross_edges;
  rest.insert(rest.end(), cp.outside_edges.begin(), cp.outside_edges.end());
  cert.k_part = ideal_from_edges(rest);
  cert.intersection = intersect(cert.j_part, cert.k_part);
  cert.nonzero_parts = !cert.j_part.is_zero() && !cert.k_part.is_zero();
  cert.hypothesis_witness = splitting_condition_witness(g, cp);
  cert.hypothesis_holds = !cert.hypothesis_witness.has_value();
  if (!cert.nonzero_parts) return cert;  // Definition needs two nonzero parts

  if (cert.hypothesis_holds) {
    cert.function = build_splitting_function(g, cp);
    cert.condition_a = verify_lcm_condition(*cert.function);
    cert.strictness = verify_strict_divisibility(*cert.function, opt.verify_max_generators);
    cert.condition_b = cert.strictness.passed;
    cert.verdict = (cert.condition_a && cert.condition_b) ? SplitVerdict::certified_splitting
                                                          : SplitVerdict::no_splitting_function;
    return cert;
  }
  if (!opt.search_fallback || cert.intersection.size() > opt.search_max_generators)
    return cert;  // not-checked

  auto found = search_splitting_function(cert.j_part, cert.k_part, opt.search_max_generators);
  if (found) {
    cert.function = std::move(found);
    cert.condition_a = verify_lcm_condition(*cert.function);
    cert.strictness = verify_strict_divisibility(*cert.function, opt.verify_max_generators);
    cert.condition_b = cert.strictness.passed;
    cert.verdict = SplitVerdict::hypothesis_fails_but_splitting_found;
    return cert;
  }
  // Nothing exists. For the report, run the forced analysis: take the first
  // candidate everywhere (pointwise condition (a)) and record where strict
  // divisibility breaks.
  auto cands = splitting_candidates(cert.j_part, cert.k_part, cert.intersection);
  bool pointwise_a = true;
  for (const auto& list : cands) pointwise_a = pointwise_a && !list.empty();
  cert.condition_a = pointwise_a;
  cert.condition_b = false;
  if (pointwise_a) {
    SplittingFunction forced;
    forced.j_part = cert.j_part;
    forced.k_part = cert.k_part;
    for (const auto& list : cands) forced.assignments.push_back(list.front());
    cert.strictness = verify_strict_divisibility(forced, opt.verify_max_generators);
  }
  cert.verdict = SplitVerdict::no_splitting_function;
  return cert;
}

}  // namespace cyclesplit
