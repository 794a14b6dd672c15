#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "efsub/families.hpp"
#include "efsub/formula.hpp"
#include "efsub/game.hpp"
#include "efsub/harness.hpp"
#include "efsub/pattern.hpp"

using namespace efsub;

namespace {

Graph clique(int n) { return generate(FamilySpec::complete(n)); }
Graph path(int n) { return generate(FamilySpec::path(n)); }

// Replays a strategy tree: at each node, every consistent Duplicator reply
// must be covered by a child, and leaves must have no consistent reply.
void validate_strategy(const Graph& g, const Graph& h, const StrategyNode& node,
                       std::vector<std::pair<int, int>> pairs, int depth_left) {
  REQUIRE(depth_left > 0);
  if (node.lifted) {
    auto it = std::find(pairs.begin(), pairs.end(), *node.lifted);
    REQUIRE(it != pairs.end());
    pairs.erase(it);
  }
  int nreply = node.side == 0 ? h.vertex_count() : g.vertex_count();
  std::vector<char> covered(nreply, 0);
  for (const auto& [y, child] : node.replies) covered[y] = 1;
  for (int y = 0; y < nreply; ++y) {
    auto np = pairs;
    np.emplace_back(node.side == 0 ? node.vertex : y, node.side == 0 ? y : node.vertex);
    bool live = is_partial_isomorphism(g, h, Position{np});
    CHECK(covered[y] == (live ? 1 : 0));
    if (live) {
      auto it = std::find_if(node.replies.begin(), node.replies.end(),
                             [&](const auto& r) { return r.first == y; });
      validate_strategy(g, h, *it->second, np, depth_left - 1);
    }
  }
}

}  // namespace

TEST_CASE("partial isomorphism predicate") {
  Graph p3 = path(3), k3 = clique(3);
  CHECK(is_partial_isomorphism(p3, k3, Position{{}}));
  CHECK(is_partial_isomorphism(p3, k3, Position{{{0, 0}}}));
  CHECK(is_partial_isomorphism(p3, k3, Position{{{0, 0}, {1, 1}}}));  // edge to edge
  CHECK_FALSE(is_partial_isomorphism(p3, k3, Position{{{0, 0}, {2, 1}}}));  // non-edge to edge
  CHECK_FALSE(is_partial_isomorphism(p3, k3, Position{{{0, 0}, {0, 1}}}));  // not a map
  CHECK_FALSE(is_partial_isomorphism(p3, k3, Position{{{0, 0}, {1, 0}}}));  // not injective
  CHECK(is_partial_isomorphism(p3, k3, Position{{{0, 0}, {0, 0}}}));  // duplicates collapse
  CHECK_THROWS_AS(is_partial_isomorphism(p3, k3, Position{{{0, 7}}}), std::out_of_range);
}

TEST_CASE("clique pairs need exactly their order") {
  for (int l = 2; l <= 4; ++l) {
    Graph g = clique(l), h = clique(l - 1);
    CHECK(depth_D(g, h) == l);
    CHECK(width_W(g, h) == l);
    CHECK_FALSE(solve_bounded(g, h, l - 1, 8).spoiler_wins);
    CHECK_FALSE(solve_unbounded(g, h, l - 1).spoiler_wins);
  }
}

TEST_CASE("path vs triangle") {
  Graph p3 = path(3), k3 = clique(3);
  CHECK(depth_D(p3, k3) == 2);  // two non-adjacent distinct vertices exist in P_3 only
  CHECK(width_W(p3, k3) == 2);
  GameOutcome o = solve_bounded(p3, k3, 2, 5);
  CHECK(o.spoiler_wins);
  CHECK(o.rounds_needed == 2);
}

TEST_CASE("rounds_needed matches the attractor level") {
  std::uint64_t state = derive_stream(11, "bounded-vs-unbounded");
  int compared = 0;
  while (compared < 40) {
    int n = 2 + static_cast<int>(next_random(state) % 4);
    Graph g = random_connected_graph(state, n);
    Graph h = random_connected_graph(state, n);
    for (int k = 1; k <= 3; ++k) {
      GameOutcome u = solve_unbounded(g, h, k);
      if (!u.spoiler_wins) {
        // no finite horizon can help at the same pebble count
        CHECK_FALSE(solve_bounded(g, h, k, 12).spoiler_wins);
        continue;
      }
      REQUIRE(u.rounds_needed);
      CHECK(solve_bounded(g, h, k, *u.rounds_needed).spoiler_wins);
      if (*u.rounds_needed > 1)
        CHECK_FALSE(solve_bounded(g, h, k, *u.rounds_needed - 1).spoiler_wins);
      ++compared;
    }
  }
}

TEST_CASE("width never exceeds depth") {
  std::uint64_t state = derive_stream(13, "width-le-depth");
  for (int i = 0; i < 25; ++i) {
    int n = 2 + static_cast<int>(next_random(state) % 4);
    Graph g = random_connected_graph(state, n);
    Graph h = random_connected_graph(state, n);
    if (isomorphic_brute(g, h)) continue;
    CHECK(width_W(g, h) <= depth_D(g, h));
  }
}

TEST_CASE("star pair widths") {
  Graph g = generate(FamilySpec::star(4)), h = generate(FamilySpec::star(3));
  CHECK_FALSE(solve_unbounded(g, h, 2).spoiler_wins);
  CHECK(solve_unbounded(g, h, 3).spoiler_wins);
  CHECK(width_W(g, h) == 3);
}

TEST_CASE("depth and width are symmetric") {
  std::uint64_t state = derive_stream(23, "symmetry");
  int done = 0;
  while (done < 10) {
    int n = 2 + static_cast<int>(next_random(state) % 4);
    Graph g = random_connected_graph(state, n);
    Graph h = random_connected_graph(state, n);
    if (isomorphic_brute(g, h)) continue;
    CHECK(depth_D(g, h) == depth_D(h, g));
    CHECK(width_W(g, h) == width_W(h, g));
    ++done;
  }
}

TEST_CASE("mirror games are never lost") {
  for (int k = 1; k <= 3; ++k) {
    Graph c5 = generate(FamilySpec::cycle(5));
    CHECK_FALSE(solve_unbounded(c5, c5, k).spoiler_wins);
  }
}

TEST_CASE("isomorphic graphs are indistinguishable") {
  Graph c4 = generate(FamilySpec::cycle(4));
  CHECK_THROWS_AS(depth_D(c4, c4), IndistinguishableError);
  CHECK_THROWS_AS(width_W(c4, c4), IndistinguishableError);
}

TEST_CASE("solver caps") {
  Graph big(65);
  CHECK_THROWS_AS(solve_bounded(big, clique(2), 2, 2), CapExceededError);
  CHECK_THROWS_AS(solve_unbounded(clique(2), big, 2), CapExceededError);
  CHECK_THROWS_AS(solve_bounded(clique(3), clique(2), kMaxPebbles + 1, 2), CapExceededError);
  CHECK_THROWS_AS(solve_bounded(clique(3), clique(2), 2, kMaxRounds + 1), CapExceededError);
  CHECK_THROWS_AS(solve_bounded(clique(3), clique(2), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(solve_bounded(clique(3), clique(2), 2, 0), std::invalid_argument);
}

TEST_CASE("query dispatch") {
  Graph g = clique(3), h = clique(2);
  GameQuery bounded{&g, &h, 3, 3};
  CHECK(solve(bounded).spoiler_wins);
  GameQuery unbounded{&g, &h, 2, std::nullopt};
  CHECK_FALSE(solve(unbounded).spoiler_wins);
}

TEST_CASE("strategy extraction replays soundly") {
  Graph g = clique(3), h = clique(2);
  GameOutcome o = solve_bounded(g, h, 3, 3, /*want_strategy=*/true);
  REQUIRE(o.spoiler_wins);
  REQUIRE(o.strategy);
  validate_strategy(g, h, *o.strategy, {}, *o.rounds_needed);
  CHECK(strategy_to_json(*o.strategy).find("\"side\"") != std::string::npos);

  std::uint64_t state = derive_stream(17, "strategy-replay");
  int done = 0;
  while (done < 15) {
    int n = 2 + static_cast<int>(next_random(state) % 4);
    Graph a = random_connected_graph(state, n);
    Graph b = random_connected_graph(state, n);
    if (isomorphic_brute(a, b)) continue;
    int d = depth_D(a, b);
    GameOutcome out = solve_bounded(a, b, d, d, /*want_strategy=*/true);
    REQUIRE(out.spoiler_wins);
    validate_strategy(a, b, *out.strategy, {}, *out.rounds_needed);
    ++done;
  }
}

TEST_CASE("extracted sentence separates path from triangle") {
  Graph p3 = path(3), k3 = clique(3);
  FormulaPtr f = extract_sentence(p3, k3, 2, 2);
  CHECK(evaluate(f, p3));
  CHECK_FALSE(evaluate(f, k3));
  CHECK(quantifier_depth(f) <= 2);
  CHECK(variable_width(f) <= 2);
}

TEST_CASE("extraction is sound on random pairs") {
  std::uint64_t state = derive_stream(19, "extraction-property");
  int done = 0;
  while (done < 20) {
    int n = 2 + static_cast<int>(next_random(state) % 4);
    Graph g = random_connected_graph(state, n);
    Graph h = random_connected_graph(state, n);
    if (isomorphic_brute(g, h)) continue;
    int d = depth_D(g, h);
    FormulaPtr f = extract_sentence(g, h, d, d);
    CHECK(evaluate(f, g));
    CHECK_FALSE(evaluate(f, h));
    CHECK(quantifier_depth(f) <= d);
    CHECK(variable_width(f) <= d);
    ++done;
  }
}

TEST_CASE("extraction requires a Spoiler win") {
  CHECK_THROWS_AS(extract_sentence(clique(3), clique(2), 2, 5), std::invalid_argument);
}
