#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "efsub/families.hpp"
#include "efsub/pattern.hpp"

using namespace efsub;

namespace {

bool embeds(const Graph& host, const Graph& pattern) {
  auto e = find_subgraph(host, pattern);
  if (!e) return false;
  // validate the embedding: injective, edge-preserving
  std::vector<char> used(host.vertex_count(), 0);
  for (int v : e->map) {
    REQUIRE(v >= 0);
    REQUIRE(v < host.vertex_count());
    REQUIRE_FALSE(used[v]);
    used[v] = 1;
  }
  for (auto [u, v] : pattern.edges()) REQUIRE(host.has_edge(e->map[u], e->map[v]));
  return true;
}

}  // namespace

TEST_CASE("subgraph search") {
  Graph k3 = generate(FamilySpec::complete(3));
  Graph k4 = generate(FamilySpec::complete(4));
  Graph c4 = generate(FamilySpec::cycle(4));
  Graph p3 = generate(FamilySpec::path(3));
  Graph p4 = generate(FamilySpec::path(4));

  CHECK(embeds(k3, p3));
  CHECK_FALSE(embeds(k3, p4));  // too few vertices
  CHECK(embeds(k4, c4));
  CHECK_FALSE(embeds(c4, k3));
  CHECK(embeds(c4, p4));
  CHECK_FALSE(embeds(generate(FamilySpec::complete_bipartite(2, 3)), k3));

  auto e = find_subgraph(p3, generate(FamilySpec::path(2)));
  REQUIRE(e);
  CHECK(e->map == std::vector<int>{0, 1});  // lexicographically least
}

TEST_CASE("pendant statistics of a sparkler") {
  PatternStats st = pattern_stats(generate(FamilySpec::sparkler(4, 2)));
  CHECK(st.pendant_path == 2);
  CHECK(st.pendant_star == 3);
  REQUIRE(st.pendant_sparkler);
  CHECK(*st.pendant_sparkler == 2);
}

TEST_CASE("pendant statistics of paths and stars") {
  PatternStats path = pattern_stats(generate(FamilySpec::path(5)));
  CHECK(path.pendant_path == 4);
  CHECK(path.pendant_star == 1);
  CHECK_FALSE(path.pendant_sparkler);

  PatternStats star = pattern_stats(generate(FamilySpec::star(4)));  // K_{1,3}
  CHECK(star.pendant_path == 1);
  CHECK(star.pendant_star == 3);
  REQUIRE(star.pendant_sparkler);
  CHECK(*star.pendant_sparkler == 1);

  PatternStats clique = pattern_stats(generate(FamilySpec::complete(4)));
  CHECK(clique.pendant_path == 0);
  CHECK(clique.pendant_star == 0);
  CHECK_FALSE(clique.pendant_sparkler);

  CHECK_THROWS_AS(pattern_stats(Graph(3)), std::invalid_argument);
}

TEST_CASE("twin decomposition") {
  TwinDecomposition k4 = twin_decomposition(generate(FamilySpec::complete(4)));
  CHECK(k4.sigma == 4);
  CHECK(k4.classes.size() == 1);
  CHECK(k4.largest_class_is_maximal_homogeneous);

  TwinDecomposition c5 = twin_decomposition(generate(FamilySpec::cycle(5)));
  CHECK(c5.sigma == 1);
  CHECK(c5.classes.size() == 5);

  TwinDecomposition k23 = twin_decomposition(generate(FamilySpec::complete_bipartite(2, 3)));
  CHECK(k23.sigma == 3);
  CHECK(k23.classes.size() == 2);
  CHECK(k23.classes[1] == std::vector<int>{2, 3, 4});
  CHECK(k23.largest_class_is_maximal_homogeneous);

  TwinDecomposition star = twin_decomposition(generate(FamilySpec::star(4)));
  CHECK(star.sigma == 3);
}

TEST_CASE("sparkler recognition") {
  auto s34 = sparkler_form(generate(FamilySpec::sparkler(3, 4)));
  REQUIRE(s34);
  CHECK(s34->first == 3);
  CHECK(s34->second == 4);
  CHECK_FALSE(sparkler_form(generate(FamilySpec::path(5))));
  CHECK_FALSE(sparkler_form(generate(FamilySpec::star(4))));  // p < 2
  CHECK_FALSE(sparkler_form(generate(FamilySpec::cycle(5))));
}

TEST_CASE("combined lower bound") {
  // cliques: no pendant structure, the star/path terms give l - 1
  CHECK(combined_lower_bound(generate(FamilySpec::complete(5))) == Rational(4));
  // S_{4,4} on 8 vertices: the sparkler terms give max(p, (2l-p-4)/2) = 4
  CHECK(combined_lower_bound(generate(FamilySpec::sparkler(4, 4))) == Rational(4));
  // bare path: l - s - 1, coinciding with the exact value l - 2
  CHECK(combined_lower_bound(generate(FamilySpec::path(5))) == Rational(3));
  // exact values carry the small marginal shapes
  CHECK(combined_lower_bound(generate(FamilySpec::path(3))) == Rational(1));
  CHECK(combined_lower_bound(generate(FamilySpec::star(4))) == Rational(3));
  CHECK_THROWS_AS(combined_lower_bound(Graph(1)), std::invalid_argument);
}

TEST_CASE("path-or-star containment") {
  CHECK(phi_ell_holds(generate(FamilySpec::complete(4)), 4));
  CHECK(phi_ell_holds(generate(FamilySpec::path(6)), 5));
  CHECK_FALSE(phi_ell_holds(generate(FamilySpec::star(4)), 5));  // K_{1,3}: no P_5, no K_{1,4}
  CHECK(phi_ell_holds(generate(FamilySpec::cycle(10)), 5));      // long cycles carry P_5
  CHECK_THROWS_AS(phi_ell_holds(Graph(2), 1), std::invalid_argument);
}

TEST_CASE("brute-force isomorphism") {
  Graph c5 = generate(FamilySpec::cycle(5));
  Graph p5 = generate(FamilySpec::path(5));
  CHECK_FALSE(isomorphic_brute(c5, p5));
  Graph relabeled(5);
  for (auto [u, v] : c5.edges()) relabeled.add_edge((u + 2) % 5, (v + 2) % 5);
  CHECK(isomorphic_brute(c5, relabeled));
  CHECK(isomorphic_brute(Graph(0), Graph(0)));
  CHECK_THROWS_AS(isomorphic_brute(Graph(11), Graph(11)), std::invalid_argument);
}
