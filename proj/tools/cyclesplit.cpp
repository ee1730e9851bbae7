// Command-line front end: cycle enumeration, splitting certificates, Betti
// tables, the additive sum check, the wheel closed form, and a combined
// analysis report. Exit codes: 0 ok, 2 bad input, 3 cap refused, 1 internal.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cyclesplit/cyclesplit.hpp>

namespace {

using namespace cyclesplit;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

Graph load_graph(const std::string& path) {
  std::vector<std::string> warnings;
  Graph g = parse_graph(read_input(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return g;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw input_error("empty vertex name in cycle list");
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::string cycle_text(const Graph& g, const std::vector<int>& cyc) {
  std::string out = "(";
  for (size_t t = 0; t < cyc.size(); ++t) {
    if (t) out += ",";
    out += g.name(cyc[t]);
  }
  return out + ")";
}

// Explicit --cycle wins; otherwise the graph must have exactly one chordless
// cycle, so nothing is ever chosen silently.
CyclePartition select_cycle(const Graph& g, const std::string& cycle_flag) {
  if (!cycle_flag.empty()) return make_cycle_partition(g, split_csv(cycle_flag));
  auto cycles = induced_chordless_cycles(g);
  if (cycles.empty())
    throw input_error("no induced chordless cycle of length >= 4 in the graph");
  if (cycles.size() > 1) {
    std::string msg = "graph has " + std::to_string(cycles.size()) +
                      " chordless cycles; pick one with --cycle:";
    for (const auto& cp : cycles) msg += "\n  " + cycle_text(g, cp.cycle);
    throw input_error(msg);
  }
  return cycles[0];
}

void emit_json(const ojson& doc) { std::cout << doc.dump(2) << "\n"; }

int subset_cap_to_generators(long long max_subsets) {
  if (max_subsets < 2) throw input_error("--max-subsets must be at least 2");
  int gens = 0;
  while ((1LL << (gens + 1)) <= max_subsets && gens < 62) ++gens;
  return gens;
}

// ---------------------------------------------------------------------------

void cmd_cycles(const std::string& input, int min_k, const std::string& format) {
  Graph g = load_graph(input);
  auto cycles = chordless_cycle_sequences(g, min_k);
  if (format == "json") {
    ojson out = ojson::array();
    for (const auto& cyc : cycles) {
      ojson one = ojson::array();
      for (int v : cyc) one.push_back(g.name(v));
      out.push_back(std::move(one));
    }
    emit_json(out);
    return;
  }
  for (const auto& cyc : cycles) std::cout << cycle_text(g, cyc) << "\n";
}

void print_certificate_text(const Graph& g, const CyclePartition& cp,
                            const SplitCertificate& cert, bool searched) {
  const auto& names = g.vertex_names();
  std::cout << "cycle: " << cycle_text(g, cp.cycle) << "\n";
  std::cout << "J = " << ideal_to_string(cert.j_part, names) << "\n";
  std::cout << "K = " << ideal_to_string(cert.k_part, names) << "\n";
  std::cout << "J∩K = " << ideal_to_string(cert.intersection, names) << "\n";
  if (cert.hypothesis_witness) {
    std::cout << "hypothesis: fails (adjacent cycle vertices '"
              << g.name(cert.hypothesis_witness->first) << "' and '"
              << g.name(cert.hypothesis_witness->second) << "' both have degree > 2)\n";
  } else {
    std::cout << "hypothesis: holds\n";
  }
  std::cout << "verdict: " << to_string(cert.verdict) << "\n";
  if (cert.function) {
    std::cout << "splitting function:\n";
    for (const auto& a : cert.function->assignments)
      std::cout << "  " << monomial_to_string(a.gen, names) << " -> ("
                << monomial_to_string(a.phi, names) << ", "
                << monomial_to_string(a.psi, names) << ")\n";
  }
  if (!cert.strictness.passed && !cert.strictness.witness.empty()) {
    std::cout << "strictness failure witness:\n  S = {";
    for (size_t t = 0; t < cert.strictness.witness.size(); ++t) {
      if (t) std::cout << ", ";
      std::cout << monomial_to_string(cert.strictness.witness[t], names);
    }
    std::cout << "}\n  lcm(S) = " << monomial_to_string(cert.strictness.witness_lcm, names)
              << "\n  lcm(phi(S)) = " << monomial_to_string(cert.strictness.phi_lcm, names)
              << "\n  lcm(psi(S)) = " << monomial_to_string(cert.strictness.psi_lcm, names)
              << "\n";
  }
  if (cert.verdict == SplitVerdict::not_checked && !cert.hypothesis_holds && !searched)
    std::cout << "note: hypothesis fails; rerun with --search to attempt the exhaustive search\n";
}

void cmd_split(const std::string& input, const std::string& cycle_flag, bool search,
               long long max_subsets, const std::string& format) {
  Graph g = load_graph(input);
  CyclePartition cp = select_cycle(g, cycle_flag);
  CertifyOptions opt;
  opt.search_fallback = search;
  opt.verify_max_generators = subset_cap_to_generators(max_subsets);
  SplitCertificate cert = certify(g, cp, opt);
  if (format == "json") {
    ojson out;
    out["cycle"] = cycle_json(g, cp);
    out["certificate"] = certificate_json(cert, g);
    emit_json(out);
    return;
  }
  print_certificate_text(g, cp, cert, search);
}

void cmd_betti(const std::string& input, const std::string& ideal_text,
               const std::string& format, int cap, unsigned threads) {
  BettiOptions opt;
  opt.vertex_cap = cap;
  opt.threads = threads;
  BettiTable table;
  if (!ideal_text.empty()) {
    if (!input.empty())
      throw input_error("give either an input file or --ideal, not both");
    VarPool pool;
    table = graded_betti_ideal(parse_ideal("<" + ideal_text + ">", pool), opt);
  } else {
    if (input.empty()) throw input_error("need an input file or --ideal");
    table = graded_betti(load_graph(input), opt);
  }
  if (format == "json")
    emit_json(betti_json(table));
  else
    std::cout << render_betti_table(table);
}

void print_ek_text(const EkReport& rep) {
  auto tot_j = total_betti(rep.cycle_part);
  auto tot_k = total_betti(rep.complement_part);
  auto tot_jk = total_betti(rep.intersection);
  auto at = [](const std::vector<long long>& v, int i) {
    return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : 0;
  };
  for (const auto& c : rep.columns)
    std::cout << "i=" << c.i << ": " << c.lhs << " = " << at(tot_j, c.i) << " + "
              << at(tot_k, c.i) << " + " << at(tot_jk, c.i - 1)
              << (c.equal ? " ✓" : " ✗") << "\n";
  std::cout << "overall: formula " << (rep.overall ? "holds" : "fails") << "\n";
}

void cmd_check_ek(const std::string& input, const std::string& cycle_flag,
                  const std::string& format, int cap, unsigned threads) {
  Graph g = load_graph(input);
  CyclePartition cp = select_cycle(g, cycle_flag);
  BettiOptions opt;
  opt.vertex_cap = cap;
  opt.threads = threads;
  EkReport rep = ek_check(g, cp, opt);
  if (format == "json") {
    ojson out;
    out["cycle"] = cycle_json(g, cp);
    out["check"] = ek_json(rep);
    ojson tables;
    tables["full"] = betti_json(rep.full);
    tables["cycle_ideal"] = betti_json(rep.cycle_part);
    tables["complement_ideal"] = betti_json(rep.complement_part);
    tables["intersection"] = betti_json(rep.intersection);
    out["tables"] = std::move(tables);
    emit_json(out);
    return;
  }
  std::cout << "cycle: " << cycle_text(g, cp.cycle) << "\n";
  print_ek_text(rep);
}

void cmd_wheel(int k, bool verify, const std::string& format, unsigned threads) {
  if (k < 2) throw input_error("--k must be at least 2");
  BettiOptions opt;
  opt.threads = threads;
  BettiTable formula = wheel_formula_betti(k, opt);
  bool match = true;
  std::vector<std::string> diffs;
  if (verify) {
    BettiTable direct = graded_betti(wheel_graph(2 * k), opt);
    std::map<std::pair<int, int>, long long> keys = formula.entries;
    for (const auto& [ij, v] : direct.entries) keys.emplace(ij, 0);
    for (const auto& [ij, unused] : keys) {
      long long a = formula.get(ij.first, ij.second);
      long long b = direct.get(ij.first, ij.second);
      if (a != b) {
        match = false;
        diffs.push_back("beta(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                        "): formula " + std::to_string(a) + ", direct " + std::to_string(b));
      }
    }
  }
  if (format == "json") {
    ojson out;
    out["k"] = k;
    out["vertices"] = 2 * k + 1;
    out["betti"] = betti_json(formula);
    if (verify) {
      ojson v;
      v["match"] = match;
      v["diffs"] = diffs;
      out["verify"] = std::move(v);
    } else {
      out["verify"] = nullptr;
    }
    emit_json(out);
  } else {
    std::cout << render_betti_table(formula);
    if (verify) {
      std::cout << "verify: " << (match ? "match" : "MISMATCH") << "\n";
      for (const auto& d : diffs) std::cout << "  " << d << "\n";
    }
  }
  if (verify && !match) throw std::runtime_error("wheel formula disagrees with direct computation");
}

void cmd_analyze(const std::string& input, const std::string& format, int cap,
                 unsigned threads) {
  Graph g = load_graph(input);
  BettiOptions bopt;
  bopt.vertex_cap = cap;
  bopt.threads = threads;
  CertifyOptions copt;  // search always on: the report should be as complete as possible
  auto cycles = induced_chordless_cycles(g);

  if (format == "json") {
    ojson out;
    out["tool_version"] = version_string;
    out["graph"] = graph_json(g);
    ojson caps;
    caps["betti_vertex_cap"] = bopt.vertex_cap;
    caps["verify_max_generators"] = copt.verify_max_generators;
    caps["search_max_generators"] = copt.search_max_generators;
    out["caps"] = std::move(caps);
    out["betti"] = betti_json(graded_betti(g, bopt));
    ojson reports = ojson::array();
    for (const auto& cp : cycles) {
      ojson one;
      one["cycle"] = cycle_json(g, cp);
      one["certificate"] = certificate_json(certify(g, cp, copt), g);
      EkReport rep = ek_check(g, cp, bopt);
      one["check"] = ek_json(rep);
      ojson tables;
      tables["full"] = betti_json(rep.full);
      tables["cycle_ideal"] = betti_json(rep.cycle_part);
      tables["complement_ideal"] = betti_json(rep.complement_part);
      tables["intersection"] = betti_json(rep.intersection);
      one["tables"] = std::move(tables);
      reports.push_back(std::move(one));
    }
    out["cycles"] = std::move(reports);
    emit_json(out);
    return;
  }

  std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  std::cout << "chordless cycles (length >= 4): " << cycles.size() << "\n";
  for (const auto& cp : cycles) {
    std::cout << "\n";
    SplitCertificate cert = certify(g, cp, copt);
    print_certificate_text(g, cp, cert, true);
    EkReport rep = ek_check(g, cp, bopt);
    print_ek_text(rep);
    std::cout << "betti I:\n" << render_betti_table(rep.full);
    std::cout << "betti J:\n" << render_betti_table(rep.cycle_part);
    std::cout << "betti K:\n" << render_betti_table(rep.complement_part);
    std::cout << "betti J∩K:\n" << render_betti_table(rep.intersection);
  }
  if (cycles.empty()) std::cout << "betti:\n" << render_betti_table(graded_betti(g, bopt));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splitting cycles and Betti tables of graph edge ideals"};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  std::string input, cycle_flag, format = "text", ideal_text;
  int min_k = 4, cap = 14, k = 0;
  long long max_subsets = 1LL << 20;
  unsigned threads = 0;
  bool search = false, verify = false;

  auto* cycles_cmd = app.add_subcommand("cycles", "list induced chordless cycles");
  cycles_cmd->add_option("input", input, "graph file (edge list or JSON), - for stdin")
      ->required();
  cycles_cmd->add_option("--min-k", min_k, "minimum cycle length (>= 3)");
  cycles_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  cycles_cmd->callback([&] { cmd_cycles(input, min_k, format); });

  auto* split_cmd = app.add_subcommand("split", "certify a cycle as splitting or not");
  split_cmd->add_option("input", input)->required();
  split_cmd->add_option("--cycle", cycle_flag, "comma-separated cycle vertices");
  split_cmd->add_flag("--search", search, "exhaustive search when the degree condition fails");
  split_cmd->add_option("--max-subsets", max_subsets,
                        "cap on subsets enumerated by the strictness check");
  split_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  split_cmd->callback([&] { cmd_split(input, cycle_flag, search, max_subsets, format); });

  auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of an edge ideal");
  betti_cmd->add_option("input", input);
  betti_cmd->add_option("--ideal", ideal_text, "monomial list, e.g. \"u1*u2, u2*u3\"");
  betti_cmd->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  betti_cmd->add_option("--cap", cap, "variable-count cap");
  betti_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  betti_cmd->callback([&] { cmd_betti(input, ideal_text, format, cap, threads); });

  auto* ek_cmd = app.add_subcommand("check-ek", "additive Betti sum check along a cycle");
  ek_cmd->add_option("input", input)->required();
  ek_cmd->add_option("--cycle", cycle_flag);
  ek_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  ek_cmd->add_option("--cap", cap);
  ek_cmd->add_option("--threads", threads);
  ek_cmd->callback([&] { cmd_check_ek(input, cycle_flag, format, cap, threads); });

  auto* wheel_cmd = app.add_subcommand("wheel", "closed-form Betti table of an odd wheel");
  wheel_cmd->add_option("--k", k, "wheel W(2k+1), k >= 2")->required();
  wheel_cmd->add_flag("--verify", verify, "cross-check against the direct computation");
  wheel_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  wheel_cmd->add_option("--threads", threads);
  wheel_cmd->callback([&] { cmd_wheel(k, verify, format, threads); });

  auto* analyze_cmd = app.add_subcommand("analyze", "full per-cycle report");
  analyze_cmd->add_option("input", input)->required();
  analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--cap", cap);
  analyze_cmd->add_option("--threads", threads);
  analyze_cmd->callback([&] { cmd_analyze(input, format, cap, threads); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
