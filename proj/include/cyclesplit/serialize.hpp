#pragma once

// JSON forms for every report type. Ordered maps keep field order fixed so
// output is byte-stable run to run.

#include <string>
#include <vector>

#include <json.hpp>

#include "betti.hpp"
#include "graph.hpp"
#include "homology.hpp"
#include "monomial.hpp"
#include "splitting.hpp"

namespace cyclesplit {

using ojson = nlohmann::ordered_json;

inline ojson graph_json(const Graph& g) {
  ojson out;
  out["vertices"] = g.vertex_names();
  ojson edges = ojson::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.name(a), g.name(b)});
  out["edges"] = std::move(edges);
  return out;
}

inline ojson ideal_json(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  ojson out = ojson::array();
  for (Monomial m : ideal.gens) {
    ojson vars = ojson::array();
    for (int v : mask_to_vector(m.vars)) vars.push_back(names[v]);
    out.push_back(std::move(vars));
  }
  return out;
}

inline ojson complex_json(const SimplicialComplex& c) {
  ojson out;
  out["vertices"] = c.vertex_names;
  ojson facets = ojson::array();
  for (uint64_t f : c.facets) {
    ojson face = ojson::array();
    for (int v : mask_to_vector(f)) face.push_back(c.vertex_names[v]);
    facets.push_back(std::move(face));
  }
  out["facets"] = std::move(facets);
  return out;
}

inline ojson cycle_json(const Graph& g, const CyclePartition& cp) {
  ojson out;
  ojson cyc = ojson::array();
  for (int v : cp.cycle) cyc.push_back(g.name(v));
  out["cycle"] = std::move(cyc);
  out["k"] = cp.k();
  auto edges_json = [&](const std::vector<Edge>& es) {
    ojson arr = ojson::array();
    for (auto [a, b] : es) arr.push_back({g.name(a), g.name(b)});
    return arr;
  };
  out["cycle_edges"] = edges_json(cp.cycle_edges);
  out["cross_edges"] = edges_json(cp.cross_edges);
  out["outside_edges"] = edges_json(cp.outside_edges);
  return out;
}

inline ojson betti_json(const BettiTable& t) {
  ojson out;
  ojson entries = ojson::array();
  for (const auto& [ij, v] : t.entries) {
    ojson e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["beta"] = v;
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  out["totals"] = total_betti(t);
  return out;
}

inline ojson ek_json(const EkReport& rep) {
  ojson out;
  ojson cols = ojson::array();
  for (const auto& c : rep.columns) {
    ojson e;
    e["i"] = c.i;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["equal"] = c.equal;
    cols.push_back(std::move(e));
  }
  out["columns"] = std::move(cols);
  out["overall"] = rep.overall;
  ojson cells = ojson::array();
  for (const auto& c : rep.graded) {
    ojson e;
    e["i"] = c.i;
    e["j"] = c.j;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["equal"] = c.equal;
    cells.push_back(std::move(e));
  }
  out["graded"] = std::move(cells);
  out["graded_overall"] = rep.graded_overall;
  return out;
}

inline ojson splitting_function_json(const SplittingFunction& sf,
                                     const std::vector<std::string>& names) {
  ojson out = ojson::array();
  for (const auto& a : sf.assignments) {
    ojson e;
    e["w"] = monomial_to_string(a.gen, names);
    e["phi"] = monomial_to_string(a.phi, names);
    e["psi"] = monomial_to_string(a.psi, names);
    out.push_back(std::move(e));
  }
  return out;
}

inline ojson certificate_json(const SplitCertificate& cert, const Graph& g) {
  const auto& names = g.vertex_names();
  ojson out;
  out["verdict"] = to_string(cert.verdict);
  out["hypothesis_holds"] = cert.hypothesis_holds;
  out["nonzero_parts"] = cert.nonzero_parts;
  out["condition_a"] = cert.condition_a;
  out["condition_b"] = cert.condition_b;
  if (cert.hypothesis_witness) {
    out["hypothesis_witness"] = {g.name(cert.hypothesis_witness->first),
                                 g.name(cert.hypothesis_witness->second)};
  } else {
    out["hypothesis_witness"] = nullptr;
  }
  out["cycle_ideal"] = ideal_to_string(cert.j_part, names);
  out["complement_ideal"] = ideal_to_string(cert.k_part, names);
  out["intersection"] = ideal_to_string(cert.intersection, names);
  if (cert.function)
    out["splitting_function"] = splitting_function_json(*cert.function, names);
  else
    out["splitting_function"] = nullptr;
  if (!cert.strictness.passed && !cert.strictness.witness.empty()) {
    ojson w;
    ojson subset = ojson::array();
    for (Monomial m : cert.strictness.witness) subset.push_back(monomial_to_string(m, names));
    w["subset"] = std::move(subset);
    w["lcm"] = monomial_to_string(cert.strictness.witness_lcm, names);
    w["phi_lcm"] = monomial_to_string(cert.strictness.phi_lcm, names);
    w["psi_lcm"] = monomial_to_string(cert.strictness.psi_lcm, names);
    out["strictness_witness"] = std::move(w);
  } else {
    out["strictness_witness"] = nullptr;
  }
  return out;
}

}  // namespace cyclesplit
