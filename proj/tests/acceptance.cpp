// End-to-end acceptance run: eleven criteria, one PASS/FAIL line each.
// Exits non-zero if any criterion fails.

#include <cstdint>
#include <cstdio>
#include <string>

#include "efsub/families.hpp"
#include "efsub/formula.hpp"
#include "efsub/game.hpp"
#include "efsub/harness.hpp"
#include "efsub/pattern.hpp"

using namespace efsub;

namespace {

int failures = 0;

void report(const std::string& name, bool ok) {
  std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool scenario_passes(const std::string& id, std::map<std::string, long long> params,
                     std::uint64_t seed) {
  Scenario s = default_scenario(id, seed);
  for (auto& [k, v] : params) s.parameters[k] = v;
  return run_scenario(s).pass;
}

void clique_pairs_exact_values() {
  bool ok = true;
  for (int l = 2; l <= 4; ++l) {
    Graph g = generate(FamilySpec::complete(l));
    Graph h = generate(FamilySpec::complete(l - 1));
    ok = ok && depth_D(g, h) == l && width_W(g, h) == l;
  }
  report("clique pairs: depth and width both equal the clique order", ok);
}

void subdivided_star_depth_width() {
  report("subdivided stars (3,4): 3-round survival, depth 4, width 3, star-sentence dichotomy",
         scenario_passes("star-theorem", {{"s", 3}, {"t", 4}, {"samples", 50}}, 1));
}

void clique_pendant_star_path_bounds() {
  report("clique-plus-pendant-star pair: P_5 containment gap, depth >= 4, width >= 3",
         scenario_passes("path-theorem", {{"ell", 5}, {"n", 5}}, 1));
}

void sparkler_pair_witnesses() {
  bool ok = scenario_passes(
      "sparkler-pair", {{"q", 3}, {"p", 4}, {"n", 3}, {"check_width", 1}}, 1);
  for (auto [q, p, n] : {std::tuple{3, 4, 4}, {4, 5, 3}, {3, 5, 3}})
    ok = ok && scenario_passes("sparkler-pair",
                               {{"q", q}, {"p", p}, {"n", n}, {"check_width", 0}}, 1);
  report("sparkler pairs: containment gap on all four instances, width >= 3 on the smallest",
         ok);
}

void twin_class_width_bound() {
  report("twin classes: width_W(G, G - twin) >= class size over all connected graphs on <= 5 "
         "vertices",
         scenario_passes("twin-lemma", {{"max_n", 5}}, 1));
}

void two_regime_depth_bound() {
  report("two-regime depth bound: 100 seeded non-isomorphic pairs on <= 6 vertices",
         scenario_passes("pvv-property", {{"pairs", 100}, {"max_n", 6}}, 1));
}

void structural_implications() {
  bool ok =
      scenario_passes("structure-properties", {{"q", 3}, {"p", 2}, {"samples", 200}}, 1) &&
      scenario_passes("structure-properties", {{"q", 3}, {"p", 3}, {"samples", 200}}, 1);
  report("structural implications: 200 seeded samples each at (q,p) = (3,2) and (3,3)", ok);
}

void pattern_bound_catalog() {
  report("pattern bound catalog: all connected graphs on <= 6 vertices plus 500 samples at 7-9",
         scenario_passes("theorem2-catalog", {{"max_ell", 6}, {"samples", 500}}, 1));
}

void sentence_vs_search_oracle() {
  std::uint64_t state = derive_stream(1, "acceptance-cross-oracle");
  bool ok = true;
  for (int i = 0; i < 300 && ok; ++i) {
    int nf = 1 + static_cast<int>(next_random(state) % 4);
    int ng = 1 + static_cast<int>(next_random(state) % 7);
    Graph f = random_connected_graph(state, nf);
    Graph g = random_connected_graph(state, ng);
    ok = evaluate(canonical_subgraph_sentence(f), g) == find_subgraph(g, f).has_value();
  }
  report("canonical containment sentence agrees with subgraph search on 300 seeded pairs", ok);
}

void extraction_soundness() {
  std::uint64_t state = derive_stream(1, "acceptance-extraction");
  bool ok = true;
  int done = 0;
  while (done < 50 && ok) {
    int n = 2 + static_cast<int>(next_random(state) % 5);
    Graph g = random_connected_graph(state, n);
    Graph h = random_connected_graph(state, n);
    if (isomorphic_brute(g, h)) continue;
    int d = depth_D(g, h);
    FormulaPtr f = extract_sentence(g, h, d, d);
    ok = evaluate(f, g) && !evaluate(f, h) && quantifier_depth(f) <= d &&
         variable_width(f) <= d;
    ++done;
  }
  report("extracted sentences separate 50 seeded pairs within depth and width budgets", ok);
}

void star_sentence_dichotomy() {
  std::uint64_t state = derive_stream(1, "acceptance-dichotomy");
  FormulaPtr phi = phi_s_sentence(3);
  bool ok = true;
  for (int i = 0; i < 100 && ok; ++i) {
    int n = 7 + static_cast<int>(next_random(state) % 6);
    Graph g = random_connected_graph(state, n);
    ok = evaluate(phi, g) == (g.max_degree() >= 3);
  }
  report("width-3 star sentence decides K_{1,3} containment on 100 seeded connected graphs",
         ok);
}

}  // namespace

int main() {
  clique_pairs_exact_values();
  subdivided_star_depth_width();
  clique_pendant_star_path_bounds();
  sparkler_pair_witnesses();
  twin_class_width_bound();
  two_regime_depth_bound();
  structural_implications();
  pattern_bound_catalog();
  sentence_vs_search_oracle();
  extraction_soundness();
  star_sentence_dichotomy();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
