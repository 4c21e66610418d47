// dihedrant: build, inspect, and exhaustively classify Cayley graphs on
// cyclic and dihedral groups.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dihedrant/autsearch.hpp"
#include "dihedrant/cayley.hpp"
#include "dihedrant/census.hpp"
#include "dihedrant/families.hpp"
#include "dihedrant/graph_io.hpp"
#include "dihedrant/perm_group.hpp"
#include "dihedrant/symmetry.hpp"

namespace {

using namespace dihedrant;

Graph load_graph(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return read_graph_auto(in);
}

void emit_graph(const Graph& g, const std::string& out_path, bool g6)
{
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file)
      throw std::runtime_error("cannot write " + out_path);
    out = &file;
  }
  if (g6)
    write_graph6(*out, g);
  else
    write_edgelist(*out, g);
}

Graph build_family(const std::string& family, const std::vector<std::string>& params)
{
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::runtime_error("family '" + family + "' expects " + std::to_string(k) +
                               " parameter(s)");
  };
  auto arg = [&](std::size_t i) { return std::stoi(params[i]); };

  if (family == "complete") { need(1); return complete(arg(0)); }
  if (family == "cycle") { need(1); return cycle(arg(0)); }
  if (family == "bipartite") { need(2); return complete_bipartite(arg(0), arg(1)); }
  if (family == "cocktail") { need(1); return complete_bipartite_minus_matching(arg(0)); }
  if (family == "multipartite") { need(2); return complete_multipartite(arg(0), arg(1)); }
  if (family == "paley") { need(1); return paley(arg(0)); }
  if (family == "h11") { need(0); return hadamard11(Hadamard11Kind::Incidence); }
  if (family == "h11bar") { need(0); return hadamard11(Hadamard11Kind::NonIncidence); }
  if (family == "cube") { need(1); return hypercube(arg(0)); }
  if (family == "gp") { need(2); return generalized_petersen(arg(0), arg(1)); }
  if (family == "cayley") {
    if (params.size() != 3)
      throw std::runtime_error("usage: build cayley <D|Z> <n> <connection-set>");
    GroupSpec group = params[0] == "D"   ? GroupSpec::dihedral(std::stoi(params[1]))
                      : params[0] == "Z" ? GroupSpec::cyclic(std::stoi(params[1]))
                                         : throw std::runtime_error("group must be D or Z");
    ConnectionSet s = parse_connection_tokens(group, params[2]);
    auto v = validate_connection_set(s);
    if (!v.ok) {
      std::string msg = "invalid connection set";
      for (const auto& r : v.reasons)
        msg += "; " + r;
      throw std::runtime_error(msg);
    }
    return cayley_graph(s);
  }
  throw std::runtime_error("unknown family '" + family + "'");
}

std::vector<Perm> parse_perm_list(const std::string& text, int degree)
{
  std::vector<Perm> gens;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    for (char& c : part) {
      if (c == ',')
        c = ' ';
    }
    std::istringstream row(part);
    std::vector<int> images;
    int v;
    while (row >> v)
      images.push_back(v);
    if (images.empty())
      continue;
    if ((int)images.size() != degree)
      throw std::runtime_error("permutation has " + std::to_string(images.size()) +
                               " images, expected " + std::to_string(degree));
    gens.push_back(Perm(std::move(images)));
  }
  if (gens.empty())
    throw std::runtime_error("no permutations given");
  return gens;
}

void print_profile(const SymmetryProfile& p, std::optional<int> girth_value)
{
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "group order:                 " << p.group_order.str() << '\n'
            << "vertex transitive:           " << yn(p.vertex_transitive) << '\n'
            << "edge transitive:             " << yn(p.edge_transitive) << '\n'
            << "arc transitive:              " << yn(p.arc_transitive) << '\n'
            << "2-arc transitive:            " << yn(p.two_arc_transitive) << '\n'
            << "2-distance transitive:       " << yn(p.two_distance_transitive()) << '\n'
            << "distance transitive:         " << yn(p.distance_transitive) << '\n'
            << "2-geodesic transitive:       " << yn(p.two_geodesic_transitive) << '\n'
            << "locally 2-distance trans.:   " << yn(p.locally_two_distance_transitive) << '\n';
  std::cout << "s-distance transitive:      ";
  for (std::size_t s = 0; s < p.s_distance_transitive.size(); ++s)
    std::cout << ' ' << (s + 1) << ':' << yn(p.s_distance_transitive[s]);
  std::cout << '\n';
  std::cout << "girth:                       "
            << (girth_value ? std::to_string(*girth_value) : "inf") << '\n'
            << "diameter:                    " << p.diameter << '\n';
}

int run_verify(const std::string& which, const CensusOptions& options,
               const std::string& out_path, const std::string& format)
{
  CensusReport report;
  if (which == "theorem11")
    report = verify_theorem_1_1(options);
  else if (which == "circulants")
    report = verify_circulants(options);
  else if (which == "lemma41")
    report = verify_lemma_4_1(options);
  else
    throw std::runtime_error("unknown verification '" + which + "'");

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out)
      throw std::runtime_error("cannot write " + out_path);
    write_records(out, report);
  }
  if (format == "records")
    write_records(std::cout, report);
  else
    write_table(std::cout, report);

  if (report.summary.skipped > 0 && !options.allow_skips) {
    std::cerr << "SKIPPED records present; rerun with --allow-skips to tolerate them\n";
    return 1;
  }
  return report.summary.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cayley graph symmetry toolkit for cyclic and dihedral groups"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a named graph and write it");
  std::string family;
  std::vector<std::string> params;
  std::string out_path;
  bool g6 = false;
  build->add_option("family", family,
                    "complete|cycle|bipartite|cocktail|multipartite|paley|h11|h11bar|cube|gp|cayley")
    ->required();
  build->add_option("params", params, "family parameters");
  build->add_option("--out", out_path, "output path (default stdout)");
  build->add_flag("--g6", g6, "write graph6 instead of edgelist");

  // check
  auto* check = app.add_subcommand("check", "symmetry report for a graph file");
  std::string check_path;
  std::uint64_t budget = 10000000;
  check->add_option("graph", check_path, "graph file (edgelist or graph6)")->required();
  check->add_option("--budget", budget, "automorphism search node budget");

  // aut
  auto* aut_cmd = app.add_subcommand("aut", "automorphism generators and order");
  std::string aut_path;
  aut_cmd->add_option("graph", aut_path, "graph file (edgelist or graph6)")->required();
  aut_cmd->add_option("--budget", budget, "automorphism search node budget");

  // quotient
  auto* quot = app.add_subcommand("quotient", "quotient by a normal subgroup of Aut");
  std::string quot_path, gens_text, quot_out;
  bool quot_g6 = false;
  quot->add_option("graph", quot_path, "graph file")->required();
  quot->add_option("--gens", gens_text,
                   "subgroup generators: semicolon-separated image lists, e.g. '1 0 3 2'")
    ->required();
  quot->add_option("--out", quot_out, "quotient output path (default stdout)");
  quot->add_flag("--g6", quot_g6, "write graph6 instead of edgelist");
  quot->add_option("--budget", budget, "automorphism search node budget");

  // verify
  auto* verify = app.add_subcommand("verify", "run a census verification");
  std::string which, verify_out, format = "table";
  CensusOptions options;
  verify->add_option("what", which, "theorem11|circulants|lemma41")->required();
  verify->add_option("--min-n", options.n_min, "smallest n (default 2 dihedral / 3 cyclic)");
  verify->add_option("--max-n", options.n_max, "largest n")->required();
  verify->add_option("--jobs", options.jobs, "worker threads");
  verify->add_option("--budget", options.budget, "per-graph search node budget");
  verify->add_flag("--allow-skips", options.allow_skips, "tolerate budget-skipped records");
  verify->add_option("--format", format, "table|records (stdout format)");
  verify->add_option("--out", verify_out, "also write the records report to a file");
  bool iso_dedup = false;
  verify->add_flag("--iso-dedup", iso_dedup, "also count isomorphism classes per n");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      Graph g = build_family(family, params);
      emit_graph(g, out_path, g6);
      std::cerr << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
      return 0;
    }

    if (*check) {
      Graph g = load_graph(check_path);
      AutSearchOptions opt;
      opt.max_nodes = budget;
      auto aut = automorphism_group(g, opt);
      print_profile(compute_profile(g, aut.chain), girth(g));
      return 0;
    }

    if (*aut_cmd) {
      Graph g = load_graph(aut_path);
      AutSearchOptions opt;
      opt.max_nodes = budget;
      auto aut = automorphism_group(g, opt);
      std::cout << "order: " << aut.chain.order().str() << '\n';
      for (const Perm& p : aut.generators)
        std::cout << p.to_cycle_string() << '\n';
      return 0;
    }

    if (*quot) {
      Graph g = load_graph(quot_path);
      auto gens = parse_perm_list(gens_text, g.vertex_count());
      for (const Perm& p : gens) {
        if (!is_automorphism(g, p))
          throw std::runtime_error("generator " + p.to_cycle_string() +
                                   " is not an automorphism");
      }
      AutSearchOptions opt;
      opt.max_nodes = budget;
      auto aut = automorphism_group(g, opt);
      StabilizerChain sub = StabilizerChain::build(g.vertex_count(), gens);
      QuotientResult q = quotient(g, aut.chain, sub);
      std::cerr << "orbits: " << q.orbits.size() << ", cover: " << (q.is_cover ? "yes" : "no")
                << ", |N| = " << sub.order().str() << '\n';
      emit_graph(q.quotient, quot_out, quot_g6);
      return 0;
    }

    if (*verify) {
      if (which == "circulants" && !verify->count("--min-n"))
        options.n_min = 3;
      options.isomorphism_dedup = iso_dedup;
      return run_verify(which, options, verify_out, format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
