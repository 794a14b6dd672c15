#include <cstdint>
#include <iostream>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "efsub/families.hpp"
#include "efsub/formula.hpp"
#include "efsub/game.hpp"
#include "efsub/graph_io.hpp"
#include "efsub/harness.hpp"
#include "efsub/pattern.hpp"

namespace {

using efsub::Graph;

struct FamilyArg {
  const char* name;
  const char* params;  // flag names in FamilySpec order
};

const std::vector<FamilyArg> kFamilies = {
    {"path", "l"},
    {"cycle", "n"},
    {"complete", "n"},
    {"complete-bipartite", "t,s"},
    {"star", "l"},
    {"sparkler", "q,p"},
    {"broken-fan", "n"},
    {"subdivided-star", "s,t"},
    {"sparkler-lower-pair", "q,p,n"},
    {"clique-pendant-path", "k,n"},
    {"clique-pendant-star", "k,n"},
    {"glued-clique-sparkler", "l,p,n"},
};

std::string family_list() {
  std::string out;
  for (const auto& f : kFamilies) {
    if (!out.empty()) out += ", ";
    out += std::string(f.name) + "(" + f.params + ")";
  }
  return out;
}

std::string scenario_list() {
  std::string out;
  for (const auto& id : efsub::scenario_ids()) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

struct GenParams {
  std::map<std::string, int> flags;  // l,n,q,p,s,t,k as given

  int need(const std::string& name) const {
    auto it = flags.find(name);
    if (it == flags.end())
      throw CLI::ValidationError("gen", "family requires --" + name);
    return it->second;
  }
};

efsub::FamilySpec make_spec(const std::string& family, const GenParams& gp) {
  using FS = efsub::FamilySpec;
  if (family == "path") return FS::path(gp.need("l"));
  if (family == "cycle") return FS::cycle(gp.need("n"));
  if (family == "complete") return FS::complete(gp.need("n"));
  if (family == "complete-bipartite")
    return FS::complete_bipartite(gp.need("t"), gp.need("s"));
  if (family == "star") return FS::star(gp.need("l"));
  if (family == "sparkler") return FS::sparkler(gp.need("q"), gp.need("p"));
  if (family == "broken-fan") return FS::broken_fan(gp.need("n"));
  if (family == "subdivided-star") return FS::subdivided_star(gp.need("s"), gp.need("t"));
  if (family == "sparkler-lower-pair")
    return FS::sparkler_lower_pair(gp.need("q"), gp.need("p"), gp.need("n"));
  if (family == "clique-pendant-path")
    return FS::clique_pendant_path(gp.need("k"), gp.need("n"));
  if (family == "clique-pendant-star")
    return FS::clique_pendant_star(gp.need("k"), gp.need("n"));
  if (family == "glued-clique-sparkler")
    return FS::glued_clique_sparkler(gp.need("l"), gp.need("p"), gp.need("n"));
  throw CLI::ValidationError("gen", "unknown family '" + family + "'; known: " + family_list());
}

int check_cap(const Graph& g, int cap, const std::string& path) {
  int effective = std::min(cap, efsub::kSolverVertexCap);
  if (cap > efsub::kSolverVertexCap)
    std::cerr << "warning: --cap " << cap << " exceeds the hard solver cap of "
              << efsub::kSolverVertexCap << "; using " << efsub::kSolverVertexCap << "\n";
  if (g.vertex_count() > effective) {
    std::cerr << "error: cap violation: " << path << " has " << g.vertex_count()
              << " vertices, cap is " << effective << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for pebble-game separability of graph pairs"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a family instance.\nFamilies: " + family_list());
  std::string gen_family, gen_out, gen_fmt = "edgelist", gen_side = "g";
  GenParams gp;
  gen->add_option("--family", gen_family, "Family name")->required();
  for (const char* p : {"l", "n", "q", "p", "s", "t", "k"})
    gen->add_option(std::string("--") + p, [&gp, p](const std::vector<std::string>& vals) {
      gp.flags[p] = std::stoi(vals.at(0));
      return true;
    }, std::string("family parameter ") + p);
  gen->add_option("-o,--output", gen_out, "Output file (stdout when omitted)");
  gen->add_option("--fmt", gen_fmt, "Graph file format")
      ->check(CLI::IsMember({"edgelist", "graph6"}))
      ->capture_default_str();
  gen->add_option("--side", gen_side, "Which half of a generated pair to write")
      ->check(CLI::IsMember({"g", "h"}));

  // solve
  auto* solve = app.add_subcommand("solve", "Solve pebble games on a pair of graph files");
  std::string solve_g, solve_h;
  bool want_depth = false, want_width = false, want_strategy = false;
  std::optional<int> solve_pebbles, solve_rounds;
  int cap = efsub::kSolverVertexCap;
  solve->add_option("first", solve_g, "First graph file")->required();
  solve->add_option("second", solve_h, "Second graph file")->required();
  solve->add_flag("--depth", want_depth, "Report the least k with a Spoiler win in the k-round k-pebble game");
  solve->add_flag("--width", want_width, "Report the least k with a Spoiler win in the unbounded k-pebble game");
  solve->add_option("--pebbles", solve_pebbles, "Solve one game at this pebble count");
  solve->add_option("--rounds", solve_rounds, "Bound the game to this many rounds");
  solve->add_flag("--strategy", want_strategy, "Emit a Spoiler strategy tree (bounded games)");
  solve->add_option("--cap", cap, "Vertex cap for solver inputs")->capture_default_str();

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a formula file on a graph file");
  std::string eval_formula, eval_graph;
  eval->add_option("formula", eval_formula, "Formula file (parenthesized syntax)")->required();
  eval->add_option("graph", eval_graph, "Graph file")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "Pendant-structure and twin-class statistics");
  std::string stats_graph;
  stats->add_option("graph", stats_graph, "Graph file")->required();

  // verify
  auto* verify =
      app.add_subcommand("verify", "Run verification scenarios.\nScenarios: " + scenario_list());
  std::string verify_scenario, verify_manifest;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::map<std::string, long long> overrides;
  verify->add_option("--scenario", verify_scenario, "Run a single scenario id");
  verify->add_option("--manifest", verify_manifest, "JSON manifest of scenarios to run");
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  for (const char* p : {"q", "p", "n", "s", "t", "ell", "samples", "pairs", "max_n", "max_ell",
                        "check_width"})
    verify->add_option(std::string("--") + p,
                       [&overrides, p](const std::vector<std::string>& vals) {
                         overrides[p] = std::stoll(vals.at(0));
                         return true;
                       },
                       std::string("scenario parameter ") + p);

  // global flags like --format may follow the subcommand name
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      efsub::FamilySpec spec = make_spec(gen_family, gp);
      Graph g = spec.kind == efsub::Family::SparklerLowerPair
                    ? (gen_side == "h" ? efsub::generate_pair(spec).h
                                       : efsub::generate_pair(spec).g)
                    : efsub::generate(spec);
      if (gen_out.empty()) {
        if (gen_fmt == "graph6")
          std::cout << efsub::to_graph6(g) << "\n";
        else
          efsub::write_edge_list(std::cout, g);
      } else {
        efsub::save_graph_file(gen_out, g, gen_fmt == "graph6" ? "graph6" : "edgelist");
      }
      return 0;
    }

    if (*solve) {
      Graph g = efsub::load_graph_file(solve_g);
      Graph h = efsub::load_graph_file(solve_h);
      if (int rc = check_cap(g, cap, solve_g)) return rc;
      if (int rc = check_cap(h, cap, solve_h)) return rc;
      nlohmann::json out;
      if (solve_pebbles) {
        efsub::GameOutcome o =
            solve_rounds ? efsub::solve_bounded(g, h, *solve_pebbles, *solve_rounds, want_strategy)
                         : efsub::solve_unbounded(g, h, *solve_pebbles);
        out["spoiler_wins"] = o.spoiler_wins;
        if (o.rounds_needed) out["rounds_needed"] = *o.rounds_needed;
        if (o.strategy) out["strategy"] = nlohmann::json::parse(strategy_to_json(*o.strategy));
        if (format == "json")
          std::cout << out.dump(2) << "\n";
        else
          std::cout << (o.spoiler_wins ? "Spoiler wins" : "Duplicator survives")
                    << (o.rounds_needed ? " (rounds=" + std::to_string(*o.rounds_needed) + ")" : "")
                    << "\n";
        return 0;
      }
      if (!want_depth && !want_width) want_depth = want_width = true;
      if (want_depth) out["depth"] = efsub::depth_D(g, h);
      if (want_width) out["width"] = efsub::width_W(g, h);
      if (format == "json") {
        std::cout << out.dump(2) << "\n";
      } else {
        if (want_depth) std::cout << "D=" << out["depth"].get<int>() << "\n";
        if (want_width) std::cout << "W=" << out["width"].get<int>() << "\n";
      }
      return 0;
    }

    if (*eval) {
      std::ifstream in(eval_formula);
      if (!in) {
        std::cerr << "error: cannot open formula file: " << eval_formula << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      efsub::FormulaPtr f = efsub::parse_formula(buf.str());
      Graph g = efsub::load_graph_file(eval_graph);
      bool value = efsub::evaluate(f, g);
      if (format == "json") {
        nlohmann::json out{{"value", value},
                           {"quantifier_depth", efsub::quantifier_depth(f)},
                           {"variable_width", efsub::variable_width(f)}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (value ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (*stats) {
      Graph g = efsub::load_graph_file(stats_graph);
      efsub::TwinDecomposition td = efsub::twin_decomposition(g);
      nlohmann::json out;
      out["vertices"] = g.vertex_count();
      out["edges"] = g.edge_count();
      out["max_degree"] = g.max_degree();
      out["connected"] = g.is_connected();
      out["sigma"] = td.sigma;
      out["twin_classes"] = td.classes;
      out["largest_class_is_maximal_homogeneous"] = td.largest_class_is_maximal_homogeneous;
      if (g.is_connected() && g.vertex_count() >= 2) {
        efsub::PatternStats ps = efsub::pattern_stats(g);
        out["pendant_path"] = ps.pendant_path;
        out["pendant_star"] = ps.pendant_star;
        if (ps.pendant_sparkler) out["pendant_sparkler"] = *ps.pendant_sparkler;
        out["combined_lower_bound"] = efsub::combined_lower_bound(g).str();
      }
      if (format == "json") {
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& [k, val] : out.items())
          std::cout << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                    << "\n";
      }
      return 0;
    }

    if (*verify) {
      std::vector<efsub::Scenario> scenarios;
      if (!verify_scenario.empty()) {
        efsub::Scenario s = efsub::default_scenario(verify_scenario, seed);
        for (const auto& [k, val] : overrides) s.parameters[k] = val;
        scenarios.push_back(std::move(s));
      } else if (!verify_manifest.empty()) {
        scenarios = efsub::load_manifest(verify_manifest, seed);
      } else {
        scenarios = efsub::default_manifest(seed);
      }
      std::vector<efsub::Verdict> verdicts = efsub::run_all(scenarios, jobs);
      if (format == "json") {
        std::cout << efsub::verdicts_to_json(verdicts) << "\n";
      } else if (format == "csv") {
        std::cout << efsub::verdicts_to_csv(verdicts);
      } else {
        for (const auto& v : verdicts)
          std::cout << (v.pass ? "PASS" : "FAIL") << (v.skipped ? " (vacuous)" : "") << " "
                    << v.label << "\n";
      }
      for (const auto& v : verdicts)
        if (!v.pass) return 1;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
