// Acceptance harness: one line per criterion, "pass" or "FAIL (why)".
// Returns nonzero if anything fails. The sweep criteria print instance
// counts so a vacuous run is visible.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <cyclesplit/cyclesplit.hpp>

using namespace cyclesplit;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << num << ". " << name << ": " << (ok ? "pass" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load(const std::string& name) {
  return parse_graph(slurp(std::string(CYCLESPLIT_DATA_DIR) + "/" + name));
}

std::vector<long long> totals(const BettiTable& t) { return total_betti(t); }

// ---------------------------------------------------------------------------
// Criteria 1 & 2: golden tables for the two bundled flap graphs.

void criterion_1() {
  Graph g = load("example1.edges");
  auto cp = induced_chordless_cycles(g).at(0);
  EkReport rep = ek_check(g, cp);
  bool ok = totals(rep.full) == std::vector<long long>{6, 8, 3} &&
            totals(rep.cycle_part) == std::vector<long long>{4, 4, 1} &&
            totals(rep.complement_part) == std::vector<long long>{2, 1} &&
            totals(rep.intersection) == std::vector<long long>{3, 2} && rep.overall;
  report(1, "square-with-one-flap golden tables and additive sum", ok);
}

void criterion_2() {
  Graph g = load("example2.edges");
  auto cp = induced_chordless_cycles(g).at(0);
  EkReport rep = ek_check(g, cp);
  BettiTable expect_full;
  expect_full.add(0, 2, 8);
  expect_full.add(1, 3, 12);
  expect_full.add(1, 4, 2);
  expect_full.add(2, 4, 5);
  expect_full.add(2, 5, 4);
  expect_full.add(3, 6, 2);
  bool ok = rep.full == expect_full &&
            totals(rep.cycle_part) == std::vector<long long>{4, 4, 1} &&
            totals(rep.complement_part) == std::vector<long long>{4, 6, 4, 1} &&
            totals(rep.intersection) == std::vector<long long>{6, 6, 1};
  ok = ok && rep.columns.size() == 4 && rep.columns[0].equal && !rep.columns[1].equal &&
       !rep.columns[2].equal && rep.columns[3].equal && !rep.overall;
  report(2, "square-with-two-flaps golden tables and failure pattern", ok);
}

// ---------------------------------------------------------------------------
// Criterion 3: non-existence for the two-flap graph, with the lcm witness.

void criterion_3() {
  Graph g = load("example2.edges");
  auto cp = induced_chordless_cycles(g).at(0);
  MonomialIdeal j = ideal_from_edges(cp.cycle_edges);
  MonomialIdeal k = ideal_from_edges(cp.cross_edges);
  MonomialIdeal inter = intersect(j, k);

  bool six_gens = inter.size() == 6;
  Monomial sixth{};
  for (const char* v : {"u3", "u4", "w2"}) sixth.vars |= uint64_t{1} << g.require_vertex(v);
  bool has_sixth = std::count(inter.gens.begin(), inter.gens.end(), sixth) == 1;

  bool none = !search_splitting_function(j, k).has_value();

  // Every complete assignment must fail at S = all generators with
  // lcm(psi(S)) = lcm(S) = the whole vertex support.
  Monomial full{};
  for (Monomial m : inter.gens) full = lcm(full, m);
  Monomial support{};
  for (int v = 0; v < g.vertex_count(); ++v) support.vars |= uint64_t{1} << v;
  auto cands = splitting_candidates(j, k, inter);
  long long combos = 1;
  for (const auto& list : cands) combos *= static_cast<long long>(list.size());
  bool all_fail_at_top = combos > 0;
  std::vector<size_t> pick(cands.size(), 0);
  for (long long c = 0; c < combos; ++c) {
    long long rem = c;
    Monomial psi{};
    for (size_t t = 0; t < cands.size(); ++t) {
      pick[t] = rem % cands[t].size();
      rem /= cands[t].size();
      psi = lcm(psi, cands[t][pick[t]].psi);
    }
    all_fail_at_top = all_fail_at_top && psi == full;
  }

  bool ok = six_gens && has_sixth && none && full == support && all_fail_at_top;
  report(3, "two-flap non-existence with the exhausted-psi witness", ok);
  if (ok)
    std::cout << "   note: G(J∩K) has 6 minimal generators, not 5; the easily dropped one is "
              << monomial_to_string(sixth, g.vertex_names()) << "\n";
}

// ---------------------------------------------------------------------------
// Criteria 4 & 5: instance sweep. Exhaustive over connected graphs on 4..7
// vertices, plus 100 seeded random graphs on 8-9 vertices. For every
// (graph, chordless cycle) instance with a nonzero complement ideal:
//   - the flattened shape decomposition must equal G(J cap K)   (criterion 5)
// and whenever no two adjacent cycle vertices both have degree > 2:
//   - construction + conditions (a), (b) + the additive sum     (criterion 4)

struct SweepStats {
  long long graphs = 0, instances = 0, condition_instances = 0;
  std::string first_failure;  // empty = clean

  void fail(const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  }
};

void sweep_graph(const Graph& g, const std::string& tag, SweepStats& st) {
  ++st.graphs;
  for (const auto& cp : induced_chordless_cycles(g)) {
    MonomialIdeal j = ideal_from_edges(cp.cycle_edges);
    std::vector<Edge> rest = cp.cross_edges;
    rest.insert(rest.end(), cp.outside_edges.begin(), cp.outside_edges.end());
    MonomialIdeal k = ideal_from_edges(rest);
    if (k.is_zero()) continue;
    ++st.instances;

    MonomialIdeal inter = intersect(j, k);
    if (abc_decomposition(g, cp).flattened() != inter.gens) {
      st.fail("shape decomposition mismatch on " + tag);
      return;
    }
    if (!splitting_condition(g, cp)) continue;
    ++st.condition_instances;

    try {
      SplittingFunction sf = build_splitting_function(g, cp);
      if (sf.assignments.size() != inter.gens.size()) {
        st.fail("partial assignment on " + tag);
        return;
      }
      if (!verify_lcm_condition(sf)) {
        st.fail("condition (a) failed on " + tag);
        return;
      }
      if (!verify_strict_divisibility(sf, 24).passed) {
        st.fail("condition (b) failed on " + tag);
        return;
      }
      if (!ek_check(g, cp).overall) {
        st.fail("additive sum failed on " + tag);
        return;
      }
    } catch (const std::exception& e) {
      st.fail(std::string("exception on ") + tag + ": " + e.what());
      return;
    }
  }
}

void criteria_4_and_5() {
  auto t0 = std::chrono::steady_clock::now();
  SweepStats st;
  std::vector<std::string> names;
  for (int v = 0; v < 9; ++v) names.push_back("v" + std::to_string(v));

  for (int n = 4; n <= 7 && st.first_failure.empty(); ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const std::vector<std::string> verts(names.begin(), names.begin() + n);
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<uint32_t> adj(n);

    for (uint32_t mask = 0; mask < (uint32_t{1} << pairs.size()); ++mask) {
      if (std::popcount(mask) < n - 1) continue;  // too few edges to connect
      std::fill(adj.begin(), adj.end(), 0);
      for (size_t t = 0; t < pairs.size(); ++t)
        if ((mask >> t) & 1) {
          adj[pairs[t].first] |= uint32_t{1} << pairs[t].second;
          adj[pairs[t].second] |= uint32_t{1} << pairs[t].first;
        }
      uint32_t seen = 1, frontier = 1;
      while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
          if ((frontier >> v) & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != (uint32_t{1} << n) - 1) continue;

      edges.clear();
      for (size_t t = 0; t < pairs.size(); ++t)
        if ((mask >> t) & 1) edges.emplace_back(verts[pairs[t].first], verts[pairs[t].second]);
      sweep_graph(Graph::from_edges(edges, verts), "n=" + std::to_string(n) + " mask=" +
                  std::to_string(mask), st);
      if (!st.first_failure.empty()) break;
    }
  }

  std::mt19937 rng(977);
  for (int trial = 0; trial < 100 && st.first_failure.empty(); ++trial) {
    int n = 8 + trial % 2;
    int pr = 15 + 5 * (trial % 7);  // edge probability percent
    std::vector<std::pair<std::string, std::string>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (static_cast<int>(rng() % 100) < pr) edges.emplace_back(names[a], names[b]);
    Graph g = Graph::from_edges(edges, {names.begin(), names.begin() + n});
    sweep_graph(g, "random trial " + std::to_string(trial), st);
  }

  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - t0).count();
  std::string counts = std::to_string(st.graphs) + " graphs, " + std::to_string(st.instances) +
                       " instances, " + std::to_string(st.condition_instances) +
                       " with the degree condition, " + std::to_string(secs) + "s";
  report(4, "direct-construction soundness sweep", st.first_failure.empty(),
         st.first_failure.empty() ? counts : st.first_failure);
  report(5, "intersection-shape equivalence on the sweep", st.first_failure.empty(),
         st.first_failure.empty() ? "" : st.first_failure);
}

// ---------------------------------------------------------------------------
// Criterion 6: wheel closed form and the half-spoked shift identity.

void criterion_6() {
  bool ok = true;
  std::string detail;
  for (int k : {2, 3}) {
    if (wheel_formula_betti(k) != graded_betti(wheel_graph(2 * k))) {
      ok = false;
      detail = "closed form differs at k=" + std::to_string(k);
      break;
    }
    Graph g = half_spoked_wheel(k);
    auto cycles = induced_chordless_cycles(g);
    CyclePartition rim = cycles.back();
    if (rim.k() != 2 * k) {
      ok = false;
      detail = "rim not found at k=" + std::to_string(k);
      break;
    }
    EkReport rep = ek_check(g, rim);
    BettiTable shifted;
    for (const auto& [ij, v] : rep.cycle_part.entries) shifted.add(ij.first, ij.second + 1, v);
    if (rep.intersection != shifted) {
      ok = false;
      detail = "intersection shift differs at k=" + std::to_string(k);
      break;
    }
  }
  report(6, "wheel closed form and half-spoked shift identity", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 7: homology engine properties on 500 random complexes.

void criterion_7() {
  std::mt19937 rng(52600);
  bool ok = true;
  std::string detail;

  for (int trial = 0; trial < 500 && ok; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);  // 3..10 vertices
    int count = 1 + static_cast<int>(rng() % 5);
    bool cone = trial % 10 == 9;
    std::vector<uint64_t> facets;
    for (int t = 0; t < count; ++t) {
      uint64_t f = rng() & ((uint64_t{1} << n) - 1);
      if (cone) f |= uint64_t{1} << (n - 1);
      if (f) facets.push_back(f);
    }
    if (facets.empty()) continue;
    SimplicialComplex c;
    for (int v = 0; v < n; ++v) c.vertex_names.push_back("p" + std::to_string(v));
    c.facets = facets;
    auto dims = reduced_homology_dims(c);

    // Independent recomputation: brute-force faces, explicit boundary
    // matrices, both rank methods.
    std::vector<std::vector<uint64_t>> by_size(1);
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
      bool face = false;
      for (uint64_t f : facets) face = face || (m & ~f) == 0;
      if (!face) continue;
      size_t s = static_cast<size_t>(std::popcount(m));
      if (by_size.size() <= s) by_size.resize(s + 1);
      by_size[s].push_back(m);
    }
    const int top = static_cast<int>(by_size.size()) - 1;
    std::vector<size_t> r(top + 2, 0);
    for (int s = 1; s <= top; ++s) {
      IntMatrix m(by_size[s - 1].size(), std::vector<long long>(by_size[s].size(), 0));
      for (size_t col = 0; col < by_size[s].size(); ++col) {
        uint64_t f = by_size[s][col];
        int t = 0;
        for (uint64_t rest = f; rest; rest &= rest - 1, ++t) {
          uint64_t sub = f ^ (rest & ~(rest - 1));
          size_t row = std::lower_bound(by_size[s - 1].begin(), by_size[s - 1].end(), sub) -
                       by_size[s - 1].begin();
          m[row][col] = (t % 2 == 0) ? 1 : -1;
        }
      }
      size_t r1 = rank_integer_echelon(m);
      size_t r2 = rank_fraction_free(m);
      if (r1 != r2) {
        ok = false;
        detail = "rank methods disagree on trial " + std::to_string(trial);
      }
      r[s] = r1;
    }
    std::vector<long long> dims2(top + 1);
    long long euler_faces = 0, euler_hom = 0;
    for (int s = 0; s <= top; ++s) {
      dims2[s] = static_cast<long long>(by_size[s].size()) - static_cast<long long>(r[s]) -
                 static_cast<long long>(r[s + 1]);
      euler_faces += (s % 2 ? -1 : 1) * static_cast<long long>(by_size[s].size());
      euler_hom += (s % 2 ? -1 : 1) * dims2[s];
    }
    if (ok && dims != dims2) {
      ok = false;
      detail = "engine disagrees with direct recomputation on trial " + std::to_string(trial);
    }
    if (ok && euler_faces != euler_hom) {
      ok = false;
      detail = "Euler identity failed on trial " + std::to_string(trial);
    }
    if (ok && cone) {
      for (long long d : dims)
        if (d != 0) {
          ok = false;
          detail = "cone not acyclic on trial " + std::to_string(trial);
        }
    }
  }

  if (ok) {
    auto dims = reduced_homology_dims(independence_complex(cycle_graph(4)));
    if (dims != std::vector<long long>{0, 1, 0}) {
      ok = false;
      detail = "square independence complex homology";
    } else if (graded_betti(cycle_graph(4)).get(2, 4) != 1) {
      ok = false;
      detail = "beta(2,4) of the square";
    }
  }
  report(7, "homology engine properties (Euler, dual ranks, cones)", ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 8: byte-identical CLI reruns on every bundled input, with
// internal parallelism forced on.

std::string run_cli(const std::string& args, int* status) {
  std::string cmd = std::string(CYCLESPLIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

void criterion_8() {
  const char* files[] = {"example1.edges",          "example2.edges",
                         "c4.edges",                "c4_pendant.edges",
                         "half_spoked_wheel_k2.edges", "half_spoked_wheel_k3.edges",
                         "example1.json"};
  bool ok = true;
  std::string detail;
  for (const char* f : files) {
    std::string path = std::string(CYCLESPLIT_DATA_DIR) + "/" + f;
    for (const char* fmt : {"text", "json"}) {
      std::string args = "analyze --threads 4 --format " + std::string(fmt) + " " + path;
      int s1 = 0, s2 = 0;
      std::string a = run_cli(args, &s1);
      std::string b = run_cli(args, &s2);
      if (s1 != 0 || s2 != 0) {
        ok = false;
        detail = std::string(f) + " exited " + std::to_string(s1) + "/" + std::to_string(s2);
        break;
      }
      if (a.empty() || a != b) {
        ok = false;
        detail = std::string(f) + " " + fmt + " output differs between runs";
        break;
      }
    }
    if (!ok) break;
  }
  report(8, "byte-identical reruns across bundled inputs", ok, detail);
}

}  // namespace

int main() {
  using Step = void (*)();
  struct Entry {
    int num;
    const char* name;
    Step step;
  };
  const Entry steps[] = {
      {1, "square-with-one-flap golden tables and additive sum", criterion_1},
      {2, "square-with-two-flaps golden tables and failure pattern", criterion_2},
      {3, "two-flap non-existence with the exhausted-psi witness", criterion_3},
      {4, "sweep", criteria_4_and_5},  // also reports 5
      {6, "wheel closed form and half-spoked shift identity", criterion_6},
      {7, "homology engine properties (Euler, dual ranks, cones)", criterion_7},
      {8, "byte-identical reruns across bundled inputs", criterion_8},
  };
  for (const auto& e : steps) {
    try {
      e.step();
    } catch (const std::exception& ex) {
      report(e.num, e.name, false, std::string("exception: ") + ex.what());
    }
  }
  std::cout << (failures ? "ACCEPTANCE FAILED\n" : "ACCEPTANCE OK\n");
  return failures ? 1 : 0;
}
