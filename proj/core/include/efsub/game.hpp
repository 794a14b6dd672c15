#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "efsub/formula.hpp"
#include "efsub/graph.hpp"

namespace efsub {

// Internal caps of the exact solvers: positions are packed into 128-bit keys,
// which bounds the pebble number; memo entries hold per-round bitmasks.
inline constexpr int kMaxPebbles = 10;
inline constexpr int kMaxRounds = 31;

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by depth_D / width_W when no pebble count up to max(v(G), v(H))
// separates the graphs, i.e. they are isomorphic.
struct IndistinguishableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An EF-game state: an unordered set of pebble pairs (vertex in G, vertex in
// H). Pebble identities are erased; any pebble may be lifted and replayed, so
// winning is label-invariant.
struct Position {
  std::vector<std::pair<int, int>> pairs;
};

// True iff the pairs induce a partial isomorphism: a well-defined injective
// map in both directions preserving adjacency and non-adjacency. The empty
// position is live.
bool is_partial_isomorphism(const Graph& g, const Graph& h, const Position& p);

// One Spoiler move and the Duplicator replies it has an answer for. Replies
// that immediately break the partial isomorphism are omitted; a node with no
// replies is a position where every Duplicator answer is dead.
struct StrategyNode {
  int side = 0;  // 0: Spoiler placed in G, 1: in H
  std::optional<std::pair<int, int>> lifted;
  int vertex = 0;
  std::vector<std::pair<int, std::shared_ptr<const StrategyNode>>> replies;
};

std::string strategy_to_json(const StrategyNode& root);

struct GameOutcome {
  bool spoiler_wins = false;
  std::optional<int> rounds_needed;
  std::shared_ptr<const StrategyNode> strategy;  // present for Spoiler wins on request
};

struct GameQuery {
  const Graph* g;
  const Graph* h;
  int pebbles;
  std::optional<int> rounds;  // absent: unbounded-round game
};

// The r-round k-pebble game from the empty position. A round: Spoiler places
// a free pebble (if one remains) or lifts a placed pair and re-places one
// side, on either graph; Duplicator answers on the other graph and loses
// exactly when every answer kills the partial isomorphism.
GameOutcome solve_bounded(const Graph& g, const Graph& h, int pebbles, int rounds,
                          bool want_strategy = false);

// The unbounded-round k-pebble game, decided by backward attractor iteration
// over all live positions with at most k pairs. rounds_needed is the
// attractor level of the empty position when Spoiler wins.
GameOutcome solve_unbounded(const Graph& g, const Graph& h, int pebbles);

GameOutcome solve(const GameQuery& q);

// Least k such that Spoiler wins the k-round k-pebble game / the
// unbounded-round k-pebble game. Throws IndistinguishableError when the
// graphs cannot be separated (they are isomorphic).
int depth_D(const Graph& g, const Graph& h);
int width_W(const Graph& g, const Graph& h);

// A sentence of quantifier depth <= r and variable width <= k that is true
// on g and false on h, read off a Spoiler winning strategy for the r-round
// k-pebble game: placements become quantifiers, Duplicator branching becomes
// connectives over atomic types. Precondition: Spoiler wins that game.
FormulaPtr extract_sentence(const Graph& g, const Graph& h, int k, int r);

}  // namespace efsub
