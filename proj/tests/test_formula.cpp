#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "efsub/families.hpp"
#include "efsub/formula.hpp"
#include "efsub/harness.hpp"
#include "efsub/pattern.hpp"

using namespace efsub;

TEST_CASE("evaluation basics") {
  Graph k2 = generate(FamilySpec::complete(2));
  Graph e2(2);
  FormulaPtr has_edge = Formula::exists(
      "x", Formula::exists("y", Formula::adjacent("x", "y")));
  CHECK(evaluate(has_edge, k2));
  CHECK_FALSE(evaluate(has_edge, e2));
  CHECK_FALSE(evaluate(has_edge, Graph(0)));

  FormulaPtr all_adjacent = Formula::forall(
      "x", Formula::forall("y", Formula::disj({Formula::equal("x", "y"),
                                               Formula::adjacent("x", "y")})));
  CHECK(evaluate(all_adjacent, k2));
  CHECK(evaluate(all_adjacent, generate(FamilySpec::complete(4))));
  CHECK_FALSE(evaluate(all_adjacent, generate(FamilySpec::path(3))));
  CHECK(evaluate(all_adjacent, Graph(0)));  // vacuous

  // empty connectives
  CHECK(evaluate(Formula::conj({}), Graph(1)));
  CHECK_FALSE(evaluate(Formula::disj({}), Graph(1)));
}

TEST_CASE("free variables are rejected") {
  FormulaPtr open = Formula::exists("x", Formula::adjacent("x", "y"));
  CHECK_THROWS_AS(evaluate(open, Graph(2)), std::invalid_argument);
}

TEST_CASE("depth and width") {
  FormulaPtr f = Formula::exists(
      "x1", Formula::forall("x2", Formula::exists("x1", Formula::adjacent("x1", "x2"))));
  CHECK(quantifier_depth(f) == 3);
  CHECK(variable_width(f) == 2);  // x1 is rebound, not a new variable
  CHECK(quantifier_depth(Formula::adjacent("x", "y")) == 0);
}

TEST_CASE("rebinding scopes correctly") {
  // exists x (adj x y) under an outer binding of y and a rebinding of x:
  // on P_3 the center has a neighbor, the ends too.
  FormulaPtr f = Formula::exists(
      "x", Formula::forall("y", Formula::exists("x", Formula::adjacent("x", "y"))));
  CHECK(evaluate(f, generate(FamilySpec::path(3))));
  CHECK_FALSE(evaluate(f, Graph(2)));  // isolated vertices have no neighbor
}

TEST_CASE("canonical containment sentence matches subgraph search") {
  Graph p3 = generate(FamilySpec::path(3));
  FormulaPtr phi = canonical_subgraph_sentence(p3);
  CHECK(quantifier_depth(phi) == 3);
  CHECK(variable_width(phi) == 3);
  CHECK(evaluate(phi, generate(FamilySpec::complete(3))));
  CHECK(evaluate(phi, p3));
  CHECK_FALSE(evaluate(phi, Graph(3)));
  CHECK_THROWS_AS(canonical_subgraph_sentence(Graph(0)), std::invalid_argument);
}

TEST_CASE("canonical sentence agrees with search on random pairs") {
  std::uint64_t state = derive_stream(7, "formula-cross-oracle");
  for (int i = 0; i < 60; ++i) {
    int nf = 1 + static_cast<int>(next_random(state) % 4);
    int ng = 1 + static_cast<int>(next_random(state) % 6);
    Graph f = random_connected_graph(state, nf);
    Graph g = random_connected_graph(state, ng);
    CHECK(evaluate(canonical_subgraph_sentence(f), g) == find_subgraph(g, f).has_value());
  }
}

TEST_CASE("width-s star sentence") {
  FormulaPtr phi3 = phi_s_sentence(3);
  CHECK(variable_width(phi3) == 3);
  CHECK(quantifier_depth(phi3) == 4);
  CHECK(evaluate(phi3, generate(FamilySpec::complete(7))));
  CHECK_FALSE(evaluate(phi3, generate(FamilySpec::path(7))));  // max degree 2
  CHECK_THROWS_AS(phi_s_sentence(2), std::invalid_argument);
}

TEST_CASE("evaluation is isomorphism-invariant") {
  Graph c5 = generate(FamilySpec::cycle(5));
  Graph perm(5);
  for (auto [u, v] : c5.edges()) perm.add_edge((2 * u + 1) % 5, (2 * v + 1) % 5);
  for (const FormulaPtr& f :
       {canonical_subgraph_sentence(generate(FamilySpec::path(3))), phi_s_sentence(3),
        canonical_subgraph_sentence(generate(FamilySpec::cycle(4)))})
    CHECK(evaluate(f, c5) == evaluate(f, perm));
}

TEST_CASE("format and parse round trip") {
  FormulaPtr f = Formula::exists(
      "x1", Formula::conj({Formula::negation(Formula::equal("x1", "x1")),
                           Formula::forall("x2", Formula::disj({Formula::adjacent("x1", "x2")}))}));
  std::string text = format_formula(f);
  CHECK(format_formula(parse_formula(text)) == text);
  CHECK(text ==
        "(exists x1 (and (not (eq x1 x1)) (forall x2 (or (adj x1 x2)))))");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_formula("(frob x y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(adj x y) trailing"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(exists x (adj x y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula(""), std::invalid_argument);
}
