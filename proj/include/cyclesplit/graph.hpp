#pragma once

// Simple graphs on up to 64 named vertices, stored as adjacency bitmasks,
// plus induced-chordless-cycle enumeration and the cycle/complement edge
// partition used by the splitting machinery.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace cyclesplit {

using Edge = std::pair<int, int>;  // endpoints ordered first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::vector<int> mask_to_vector(uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;

  // Builds a graph from named edges. `vertices` may pre-declare the vertex
  // set (order preserved); when non-empty, edge endpoints must come from it.
  // Loops are rejected; duplicate edges are dropped with a warning.
  static Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edge_names,
                          const std::vector<std::string>& vertices = {},
                          std::vector<std::string>* warnings = nullptr) {
    Graph g;
    const bool declared = !vertices.empty();
    for (const auto& v : vertices) g.intern(v, true);
    std::set<Edge> seen;
    for (const auto& [a_name, b_name] : edge_names) {
      int a = declared ? g.require_declared(a_name) : g.intern(a_name, false);
      int b = declared ? g.require_declared(b_name) : g.intern(b_name, false);
      if (a == b) throw input_error("loop edge at vertex '" + a_name + "'");
      Edge e = make_edge(a, b);
      if (!seen.insert(e).second) {
        if (warnings)
          warnings->push_back("duplicate edge " + a_name + "-" + b_name + " ignored");
        continue;
      }
      g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.adj_.assign(g.names_.size(), 0);
    for (auto [a, b] : g.edges_) {
      g.adj_[a] |= uint64_t{1} << b;
      g.adj_[b] |= uint64_t{1} << a;
    }
    return g;
  }

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name(int v) const { return names_[v]; }

  std::optional<int> find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
  }

  int require_vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw input_error("unknown vertex '" + std::string(name) + "'");
    return *v;
  }

  uint64_t adjacency(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int degree(std::string_view name) const { return degree(require_vertex(name)); }

  bool has_edge(int a, int b) const {
    return a != b && ((adj_[a] >> b) & 1) != 0;
  }

  uint64_t full_mask() const {
    int n = vertex_count();
    return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  }

  std::vector<std::string> mask_names(uint64_t m) const {
    std::vector<std::string> out;
    for (int v : mask_to_vector(m)) out.push_back(names_[v]);
    return out;
  }

 private:
  static void check_name(const std::string& s) {
    if (s.empty()) throw input_error("empty vertex name");
    for (char c : s)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == ',' || c == '<' ||
          c == '>' || c == '#')
        throw input_error("invalid character in vertex name '" + s + "'");
  }

  int intern(const std::string& name, bool declaring) {
    auto it = index_.find(name);
    if (it != index_.end()) {
      if (declaring) throw input_error("vertex '" + name + "' declared twice");
      return it->second;
    }
    check_name(name);
    if (static_cast<int>(names_.size()) >= max_vertices)
      throw input_error("graph exceeds 64 vertices");
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }

  int require_declared(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
      throw input_error("edge endpoint '" + name + "' not in declared vertex list");
    return it->second;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<uint64_t> adj_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Parsing. Two formats: a plain edge list (one "a b" pair per line, `#`
// comments) and a JSON object {"vertices": [...], "edges": [["a","b"], ...]}
// where "vertices" is optional. parse_graph sniffs the format.

inline Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  std::vector<std::pair<std::string, std::string>> edges;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tok;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tok.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw input_error("line " + std::to_string(lineno) + ": expected two vertex names, got " +
                        std::to_string(tok.size()));
    edges.emplace_back(tok[0], tok[1]);
  }
  return Graph::from_edges(edges, {}, warnings);
}

inline Graph parse_graph_json(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid JSON graph: ") + e.what());
  }
  if (!doc.is_object()) throw input_error("JSON graph must be an object");
  std::vector<std::string> vertices;
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array()) throw input_error("\"vertices\" must be an array of names");
    for (const auto& v : doc["vertices"]) {
      if (!v.is_string()) throw input_error("\"vertices\" must be an array of names");
      vertices.push_back(v.get<std::string>());
    }
  }
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw input_error("JSON graph needs an \"edges\" array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw input_error("each edge must be a two-element array of vertex names");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph::from_edges(edges, vertices, warnings);
}

inline Graph parse_graph(std::string_view text, std::vector<std::string>* warnings = nullptr) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_graph_json(text, warnings);
    break;
  }
  return parse_edge_list(text, warnings);
}

// ---------------------------------------------------------------------------
// Cycle partitions. For an induced chordless cycle C the graph's edges split
// into the k cycle edges, the cross edges (exactly one endpoint on C), and
// the outside edges (no endpoint on C).

struct CyclePartition {
  std::vector<int> cycle;  // canonical traversal order, length k >= 4
  std::vector<int> pos;    // pos[v] = index of v in `cycle`, or -1
  uint64_t cycle_mask = 0;
  uint64_t outside_mask = 0;
  std::vector<Edge> cycle_edges;
  std::vector<Edge> outside_edges;
  std::vector<Edge> cross_edges;

  int k() const { return static_cast<int>(cycle.size()); }
  bool on_cycle(int v) const { return pos[v] >= 0; }
};

// Least name sequence over all rotations and the two directions, so equal
// cycles always present identically.
inline std::vector<int> canonical_cycle_order(const Graph& g, const std::vector<int>& cyc) {
  const int k = static_cast<int>(cyc.size());
  std::vector<int> best;
  auto consider = [&](const std::vector<int>& cand) {
    if (best.empty()) {
      best = cand;
      return;
    }
    for (int i = 0; i < k; ++i) {
      int c = g.name(cand[i]).compare(g.name(best[i]));
      if (c < 0) {
        best = cand;
        return;
      }
      if (c > 0) return;
    }
  };
  std::vector<int> cand(k);
  for (int s = 0; s < k; ++s) {
    for (int i = 0; i < k; ++i) cand[i] = cyc[(s + i) % k];
    consider(cand);
    for (int i = 0; i < k; ++i) cand[i] = cyc[(s - i + k) % k];
    consider(cand);
  }
  return best;
}

inline CyclePartition make_cycle_partition(const Graph& g, const std::vector<int>& cycle_in) {
  const int k = static_cast<int>(cycle_in.size());
  const int n = g.vertex_count();
  if (k < 4) throw input_error("cycle must have length at least 4");
  uint64_t mask = 0;
  for (int v : cycle_in) {
    if (v < 0 || v >= n) throw input_error("cycle vertex id out of range");
    uint64_t bit = uint64_t{1} << v;
    if (mask & bit) throw input_error("repeated cycle vertex '" + g.name(v) + "'");
    mask |= bit;
  }
  for (int i = 0; i < k; ++i) {
    int a = cycle_in[i], b = cycle_in[(i + 1) % k];
    if (!g.has_edge(a, b))
      throw input_error("consecutive cycle vertices '" + g.name(a) + "' and '" + g.name(b) +
                        "' are not adjacent");
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(cycle_in[i], cycle_in[j]))
        throw input_error("cycle has a chord " + g.name(cycle_in[i]) + "-" +
                          g.name(cycle_in[j]));
    }

  CyclePartition cp;
  cp.cycle = canonical_cycle_order(g, cycle_in);
  cp.pos.assign(n, -1);
  for (int i = 0; i < k; ++i) cp.pos[cp.cycle[i]] = i;
  cp.cycle_mask = mask;
  cp.outside_mask = g.full_mask() & ~mask;
  for (auto [a, b] : g.edges()) {
    bool on_a = cp.on_cycle(a), on_b = cp.on_cycle(b);
    if (on_a && on_b)
      cp.cycle_edges.push_back({a, b});
    else if (!on_a && !on_b)
      cp.outside_edges.push_back({a, b});
    else
      cp.cross_edges.push_back({a, b});
  }
  return cp;
}

inline CyclePartition make_cycle_partition(const Graph& g,
                                           const std::vector<std::string>& cycle_names) {
  std::vector<int> ids;
  ids.reserve(cycle_names.size());
  for (const auto& s : cycle_names) ids.push_back(g.require_vertex(s));
  return make_cycle_partition(g, ids);
}

// Enumerates induced chordless cycles of length >= min_k as vertex
// sequences, each in canonical order, sorted by length then name sequence.
//
// DFS over induced paths anchored at the least cycle vertex s: every later
// vertex must exceed s, interior chords are pruned as the path grows, and a
// neighbor of s either closes the cycle (recorded once, in the direction
// with the smaller second vertex) or is discarded since keeping it would
// leave a chord to s.
inline std::vector<std::vector<int>> chordless_cycle_sequences(const Graph& g, int min_k = 4) {
  if (min_k < 3) throw input_error("minimum cycle length must be at least 3");
  const int n = g.vertex_count();
  std::vector<std::vector<int>> found;
  std::vector<int> path;

  struct Dfs {
    const Graph& g;
    int s, min_k;
    std::vector<std::vector<int>>& found;
    std::vector<int>& path;

    void run(uint64_t mask) {
      int last = path.back();
      uint64_t low = (s == 63) ? ~uint64_t{0} : (uint64_t{2} << s) - 1;
      uint64_t cand = g.adjacency(last) & ~mask & ~low;
      while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        uint64_t wbit = uint64_t{1} << w;
        if (path.size() == 1) {
          path.push_back(w);
          run(mask | wbit);
          path.pop_back();
          continue;
        }
        uint64_t interior = mask & ~(uint64_t{1} << s) & ~(uint64_t{1} << last);
        if (g.adjacency(w) & interior) continue;
        if ((g.adjacency(w) >> s) & 1) {
          if (static_cast<int>(path.size()) + 1 >= min_k && path[1] < w) {
            path.push_back(w);
            found.push_back(path);
            path.pop_back();
          }
        } else {
          path.push_back(w);
          run(mask | wbit);
          path.pop_back();
        }
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    Dfs{g, s, min_k, found, path}.run(uint64_t{1} << s);
  }
  for (auto& c : found) c = canonical_cycle_order(g, c);
  std::sort(found.begin(), found.end(), [&](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
      int c = g.name(a[i]).compare(g.name(b[i]));
      if (c != 0) return c < 0;
    }
    return false;
  });
  return found;
}

inline std::vector<CyclePartition> induced_chordless_cycles(const Graph& g, int min_k = 4) {
  if (min_k < 4)
    throw input_error("cycle partitions need length >= 4; use chordless_cycle_sequences for shorter cycles");
  std::vector<CyclePartition> out;
  for (const auto& seq : chordless_cycle_sequences(g, min_k))
    out.push_back(make_cycle_partition(g, seq));
  return out;
}

// First pair of adjacent cycle vertices that both have degree > 2 in g, if
// any. Absence of such a pair is the sufficient condition under which the
// direct splitting-function construction is guaranteed to work.
inline std::optional<Edge> splitting_condition_witness(const Graph& g, const CyclePartition& cp) {
  const int k = cp.k();
  for (int i = 0; i < k; ++i) {
    int a = cp.cycle[i], b = cp.cycle[(i + 1) % k];
    if (g.degree(a) > 2 && g.degree(b) > 2) return make_edge(a, b);
  }
  return std::nullopt;
}

inline bool splitting_condition(const Graph& g, const CyclePartition& cp) {
  return !splitting_condition_witness(g, cp).has_value();
}

// Same vertex set, cycle edges removed (cross and outside edges kept).
inline Graph cycle_complement(const Graph& g, const CyclePartition& cp) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& list : {cp.cross_edges, cp.outside_edges})
    for (auto [a, b] : list) edges.emplace_back(g.name(a), g.name(b));
  return Graph::from_edges(edges, g.vertex_names());
}

// Off-cycle vertices with at least one neighbor on the cycle.
inline uint64_t cycle_neighborhood(const Graph& g, const CyclePartition& cp) {
  uint64_t out = 0;
  for (int v : cp.cycle) out |= g.adjacency(v);
  return out & ~cp.cycle_mask;
}

// ---------------------------------------------------------------------------
// Stock graphs.

namespace detail {
inline std::string u_name(int i) { return "u" + std::to_string(i); }
}  // namespace detail

// Cycle u1-u2-...-uk-u1.
inline Graph cycle_graph(int k) {
  if (k < 3) throw input_error("cycle graph needs at least 3 vertices");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= k; ++i)
    edges.emplace_back(detail::u_name(i), detail::u_name(i % k + 1));
  return Graph::from_edges(edges);
}

// Star: hub w joined to u1..uk.
inline Graph star_graph(int leaves) {
  if (leaves < 1) throw input_error("star graph needs at least 1 leaf");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back("w", detail::u_name(i));
  return Graph::from_edges(edges);
}

// Wheel: rim u1..u_rim plus hub w joined to every rim vertex.
inline Graph wheel_graph(int rim) {
  if (rim < 3) throw input_error("wheel needs rim length at least 3");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= rim; ++i) {
    edges.emplace_back(detail::u_name(i), detail::u_name(i % rim + 1));
    edges.emplace_back("w", detail::u_name(i));
  }
  return Graph::from_edges(edges);
}

// Rim u1..u_{2k} with hub w joined to the even rim vertices only.
inline Graph half_spoked_wheel(int k) {
  if (k < 2) throw input_error("half-spoked wheel needs k >= 2");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= 2 * k; ++i)
    edges.emplace_back(detail::u_name(i), detail::u_name(i % (2 * k) + 1));
  for (int i = 2; i <= 2 * k; i += 2) edges.emplace_back("w", detail::u_name(i));
  return Graph::from_edges(edges);
}

}  // namespace cyclesplit
