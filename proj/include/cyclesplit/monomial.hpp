#pragma once

// Square-free monomials as variable bitmasks and square-free monomial ideals
// as minimal generator antichains in a fixed canonical order.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace cyclesplit {

struct Monomial {
  uint64_t vars = 0;

  int degree() const { return std::popcount(vars); }
  bool contains(int v) const { return ((vars >> v) & 1) != 0; }
  bool is_one() const { return vars == 0; }
  friend bool operator==(Monomial, Monomial) = default;
};

inline Monomial lcm(Monomial a, Monomial b) { return {a.vars | b.vars}; }
inline bool divides(Monomial a, Monomial b) { return (a.vars & ~b.vars) == 0; }
inline bool strictly_divides(Monomial a, Monomial b) { return divides(a, b) && a.vars != b.vars; }

// Degree first, then lexicographic on the sorted variable support: the first
// variable where the supports differ decides, and the monomial containing it
// comes first.
inline bool monomial_less(Monomial a, Monomial b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.vars == b.vars) return false;
  uint64_t diff = a.vars ^ b.vars;
  return (a.vars & (diff & ~(diff - 1))) != 0;
}

struct MonomialIdeal {
  std::vector<Monomial> gens;  // minimal generators, canonically ordered

  bool is_zero() const { return gens.empty(); }
  int size() const { return static_cast<int>(gens.size()); }
};

// Discards non-minimal monomials and duplicates, sorts canonically.
inline MonomialIdeal minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), monomial_less);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  MonomialIdeal out;
  for (size_t i = 0; i < ms.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < i && !redundant; ++j)
      if (divides(ms[j], ms[i])) redundant = true;  // sorted by degree, so divisors precede
    if (!redundant) out.gens.push_back(ms[i]);
  }
  return out;
}

inline bool member(const MonomialIdeal& ideal, Monomial m) {
  for (Monomial g : ideal.gens)
    if (divides(g, m)) return true;
  return false;
}

inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> ms;
  ms.reserve(g.edges().size());
  for (auto [a, b] : g.edges())
    ms.push_back({(uint64_t{1} << a) | (uint64_t{1} << b)});
  return minimalize(std::move(ms));
}

inline MonomialIdeal ideal_from_edges(const std::vector<Edge>& edges) {
  std::vector<Monomial> ms;
  ms.reserve(edges.size());
  for (auto [a, b] : edges) ms.push_back({(uint64_t{1} << a) | (uint64_t{1} << b)});
  return minimalize(std::move(ms));
}

// Intersection of two square-free monomial ideals: minimalized pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> ms;
  ms.reserve(a.gens.size() * b.gens.size());
  for (Monomial x : a.gens)
    for (Monomial y : b.gens) ms.push_back(lcm(x, y));
  return minimalize(std::move(ms));
}

// ---------------------------------------------------------------------------
// Text forms. A monomial is variables joined by '*' (u1*u2*w1); an ideal is
// a comma-separated generator list in angle brackets (<u1*u2, u2*u3>), where
// <> and <0> both denote the zero ideal.

// Maps variable names to bit positions for inputs not tied to a graph.
struct VarPool {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;

  explicit VarPool(std::vector<std::string> initial = {}) {
    for (auto& s : initial) intern(s);
  }
  int intern(const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    if (names.size() >= 64) throw input_error("more than 64 variables");
    int id = static_cast<int>(names.size());
    names.push_back(name);
    index.emplace(name, id);
    return id;
  }
};

inline std::string monomial_to_string(Monomial m, const std::vector<std::string>& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (int v : mask_to_vector(m.vars)) {
    if (!out.empty()) out += '*';
    out += names[v];
  }
  return out;
}

inline std::string ideal_to_string(const MonomialIdeal& ideal,
                                   const std::vector<std::string>& names) {
  if (ideal.is_zero()) return "<0>";
  std::string out = "<";
  for (size_t i = 0; i < ideal.gens.size(); ++i) {
    if (i) out += ", ";
    out += monomial_to_string(ideal.gens[i], names);
  }
  return out + ">";
}

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}
}  // namespace detail

inline Monomial parse_monomial(std::string_view text, VarPool& pool) {
  text = detail::trim(text);
  if (text.empty()) throw input_error("empty monomial");
  if (text == "1") return {};
  Monomial m;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t star = text.find('*', pos);
    std::string_view var =
        detail::trim(text.substr(pos, star == std::string_view::npos ? text.size() - pos : star - pos));
    if (var.empty()) throw input_error("malformed monomial '" + std::string(text) + "'");
    int v = pool.intern(std::string(var));
    uint64_t bit = uint64_t{1} << v;
    if (m.vars & bit)
      throw input_error("monomial '" + std::string(text) + "' is not square-free");
    m.vars |= bit;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return m;
}

inline MonomialIdeal parse_ideal(std::string_view text, VarPool& pool) {
  std::string_view body = detail::trim(text);
  if (body.size() < 2 || body.front() != '<' || body.back() != '>')
    throw input_error("ideal must be written as <m1, m2, ...>");
  body = detail::trim(body.substr(1, body.size() - 2));
  if (body.empty() || body == "0") return {};
  std::vector<Monomial> ms;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string_view part =
        body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
    Monomial m = parse_monomial(part, pool);
    if (m.is_one()) throw input_error("ideal generator cannot be 1");
    ms.push_back(m);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return minimalize(std::move(ms));
}

}  // namespace cyclesplit
