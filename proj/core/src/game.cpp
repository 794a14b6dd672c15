#include "efsub/game.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include "json.hpp"

namespace efsub {

namespace {

using Code = std::uint16_t;  // (u << 6) | v, vertices below the 64-vertex cap

struct PosVec {
  std::array<Code, kMaxPebbles> c{};
  int n = 0;

  void insert_sorted(Code code) {
    int i = n;
    while (i > 0 && c[i - 1] > code) {
      c[i] = c[i - 1];
      --i;
    }
    c[i] = code;
    ++n;
  }
  bool contains(Code code) const {
    for (int i = 0; i < n; ++i)
      if (c[i] == code) return true;
    return false;
  }
};

struct PosKey {
  std::uint64_t a = 0, b = 0;
  bool operator==(const PosKey&) const = default;
};

struct PosKeyHash {
  std::size_t operator()(const PosKey& k) const {
    std::uint64_t x = k.a ^ (k.b * 0x9e3779b97f4a7c15ull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

PosKey pack(const PosVec& pos) {
  PosKey k;
  for (int i = 0; i < pos.n && i < 5; ++i) k.a |= static_cast<std::uint64_t>(pos.c[i]) << (12 * i);
  for (int i = 5; i < pos.n; ++i) k.b |= static_cast<std::uint64_t>(pos.c[i]) << (12 * (i - 5));
  k.a |= static_cast<std::uint64_t>(pos.n) << 60;
  return k;
}

// Adjacency rows of both graphs as single words, plus the pairwise
// consistency test at the heart of the partial-isomorphism check.
struct GamePair {
  int ng, nh;
  std::array<std::uint64_t, 64> adjg{}, adjh{};

  GamePair(const Graph& g, const Graph& h) : ng(g.vertex_count()), nh(h.vertex_count()) {
    if (ng > kSolverVertexCap || nh > kSolverVertexCap)
      throw CapExceededError("game solver: graphs must have at most " +
                             std::to_string(kSolverVertexCap) + " vertices");
    for (int u = 0; u < ng; ++u)
      for (int v : g.neighborhood(u)) adjg[u] |= std::uint64_t{1} << v;
    for (int u = 0; u < nh; ++u)
      for (int v : h.neighborhood(u)) adjh[u] |= std::uint64_t{1} << v;
  }

  bool consistent(Code c1, Code c2) const {
    int u1 = c1 >> 6, v1 = c1 & 63, u2 = c2 >> 6, v2 = c2 & 63;
    if (u1 == u2 || v1 == v2) return c1 == c2;
    return ((adjg[u1] >> u2) & 1) == ((adjh[v1] >> v2) & 1);
  }
  bool consistent_with(const PosVec& base, Code code) const {
    for (int i = 0; i < base.n; ++i)
      if (!consistent(base.c[i], code)) return false;
    return true;
  }
  // True when vertex x on the given side is already pebbled in base; placing
  // there only reproduces the base position.
  bool occupied(const PosVec& base, int side, int x) const {
    for (int i = 0; i < base.n; ++i)
      if ((side == 0 ? base.c[i] >> 6 : base.c[i] & 63) == x) return true;
    return false;
  }
};

PosVec extend(const PosVec& base, Code code) {
  PosVec np = base;
  if (!np.contains(code)) np.insert_sorted(code);
  return np;
}

PosVec erase_at(const PosVec& pos, int index) {
  PosVec out;
  for (int i = 0; i < pos.n; ++i)
    if (i != index) out.c[out.n++] = pos.c[i];
  return out;
}

void validate_pebbles(int k) {
  if (k < 1) throw std::invalid_argument("game solver: pebble count must be >= 1");
  if (k > kMaxPebbles)
    throw CapExceededError("game solver: pebble count exceeds the cap of " +
                           std::to_string(kMaxPebbles));
}

class BoundedSolver {
 public:
  BoundedSolver(const Graph& g, const Graph& h, int k) : gp_(g, h), k_(k) {
    validate_pebbles(k);
  }

  bool win(const PosVec& pos, int r) {
    if (r <= 0) return false;
    PosKey key = pack(pos);
    if (auto it = memo_.find(key); it != memo_.end() && ((it->second.known >> r) & 1))
      return (it->second.win >> r) & 1;
    bool res = compute(pos, r);
    auto& e = memo_[key];
    e.known |= 1u << r;
    if (res) e.win |= 1u << r;
    return res;
  }

  struct Move {
    int lift_index;  // index into the position, -1 for a free pebble
    int side;        // 0: place in G, 1: place in H
    int vertex;
  };

  // A move whose every live reply is Spoiler-winning with r-1 rounds (or that
  // has no live reply). With skip_occupied, placements on vertices already
  // pebbled in the base are excluded; these only reproduce the base position
  // and a winning one can always be replaced, which keeps extraction
  // positions free of duplicated pebble pairs.
  std::optional<Move> find_winning_move(const PosVec& pos, int r, bool skip_occupied) {
    for (int lift = (pos.n < k_ ? -1 : 0); lift < pos.n; ++lift) {
      PosVec base = lift < 0 ? pos : erase_at(pos, lift);
      for (int side = 0; side < 2; ++side) {
        int nplace = side == 0 ? gp_.ng : gp_.nh;
        for (int x = 0; x < nplace; ++x) {
          if (skip_occupied && gp_.occupied(base, side, x)) continue;
          if (move_wins(base, side, x, r)) return Move{lift, side, x};
        }
      }
    }
    return std::nullopt;
  }

  bool move_wins(const PosVec& base, int side, int x, int r) {
    int nreply = side == 0 ? gp_.nh : gp_.ng;
    bool any_live = false;
    for (int y = 0; y < nreply; ++y) {
      Code code = side == 0 ? static_cast<Code>((x << 6) | y) : static_cast<Code>((y << 6) | x);
      if (!gp_.consistent_with(base, code)) continue;
      any_live = true;
      if (!win(extend(base, code), r - 1)) return false;
    }
    return true;  // includes the no-live-reply immediate win
  }

  const GamePair& pair() const { return gp_; }
  int pebbles() const { return k_; }

 private:
  GamePair gp_;
  int k_;
  struct Entry {
    std::uint32_t known = 0, win = 0;
  };
  std::unordered_map<PosKey, Entry, PosKeyHash> memo_;

  bool compute(const PosVec& pos, int r) {
    for (int lift = (pos.n < k_ ? -1 : 0); lift < pos.n; ++lift) {
      PosVec base = lift < 0 ? pos : erase_at(pos, lift);
      for (int side = 0; side < 2; ++side) {
        int nplace = side == 0 ? gp_.ng : gp_.nh;
        for (int x = 0; x < nplace; ++x)
          if (move_wins(base, side, x, r)) return true;
      }
    }
    return false;
  }
};

class UnboundedSolver {
 public:
  UnboundedSolver(const Graph& g, const Graph& h, int k) : gp_(g, h), k_(k) {
    validate_pebbles(k);
  }

  GameOutcome run() {
    PosVec empty;
    enumerate(empty, 0);
    PosKey empty_key = pack(empty);

    std::vector<std::size_t> undecided(live_.size());
    for (std::size_t i = 0; i < live_.size(); ++i) undecided[i] = i;

    int level = 1;
    while (!undecided.empty()) {
      std::vector<std::size_t> newly;
      for (std::size_t idx : undecided)
        if (wins_now(live_[idx])) newly.push_back(idx);
      if (newly.empty()) break;
      for (std::size_t idx : newly) level_[pack(live_[idx])] = level;
      std::erase_if(undecided, [&](std::size_t idx) { return level_[pack(live_[idx])] != 0; });
      if (level_[empty_key] != 0) break;
      ++level;
    }

    GameOutcome out;
    int empty_level = level_[empty_key];
    out.spoiler_wins = empty_level != 0;
    if (out.spoiler_wins) out.rounds_needed = empty_level;
    return out;
  }

 private:
  GamePair gp_;
  int k_;
  std::vector<PosVec> live_;
  std::unordered_map<PosKey, int, PosKeyHash> level_;  // 0 = live, undecided

  void enumerate(PosVec& cur, Code min_code) {
    live_.push_back(cur);
    level_[pack(cur)] = 0;
    if (cur.n == k_) return;
    for (int u = min_code >> 6; u < gp_.ng; ++u)
      for (int v = (u == (min_code >> 6) ? min_code & 63 : 0); v < gp_.nh; ++v) {
        Code code = static_cast<Code>((u << 6) | v);
        if (!gp_.consistent_with(cur, code)) continue;
        cur.c[cur.n++] = code;  // codes are generated in ascending order
        enumerate(cur, code + 1);
        --cur.n;
      }
  }

  // Decided strictly from previous passes, so levels equal minimal forcing
  // rounds.
  bool wins_now(const PosVec& pos) {
    for (int lift = (pos.n < k_ ? -1 : 0); lift < pos.n; ++lift) {
      PosVec base = lift < 0 ? pos : erase_at(pos, lift);
      for (int side = 0; side < 2; ++side) {
        int nplace = side == 0 ? gp_.ng : gp_.nh;
        int nreply = side == 0 ? gp_.nh : gp_.ng;
        for (int x = 0; x < nplace; ++x) {
          bool any_live = false, all_won = true;
          for (int y = 0; y < nreply && all_won; ++y) {
            Code code =
                side == 0 ? static_cast<Code>((x << 6) | y) : static_cast<Code>((y << 6) | x);
            if (!gp_.consistent_with(base, code)) continue;
            any_live = true;
            auto it = level_.find(pack(extend(base, code)));
            if (it == level_.end() || it->second == 0) all_won = false;
          }
          if (!any_live || all_won) return true;
        }
      }
    }
    return false;
  }
};

PosVec to_posvec(const Graph& g, const Graph& h, const Position& p) {
  if (p.pairs.size() > static_cast<std::size_t>(kMaxPebbles))
    throw CapExceededError("position exceeds the pebble cap");
  PosVec out;
  for (auto [u, v] : p.pairs) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= h.vertex_count())
      throw std::out_of_range("position pair out of range");
    Code code = static_cast<Code>((u << 6) | v);
    if (!out.contains(code)) out.insert_sorted(code);
  }
  return out;
}

}  // namespace

bool is_partial_isomorphism(const Graph& g, const Graph& h, const Position& p) {
  GamePair gp(g, h);
  PosVec pos = to_posvec(g, h, p);
  for (int i = 0; i < pos.n; ++i)
    for (int j = i + 1; j < pos.n; ++j)
      if (!gp.consistent(pos.c[i], pos.c[j])) return false;
  return true;
}

namespace {

std::shared_ptr<const StrategyNode> build_strategy(BoundedSolver& solver, const PosVec& pos,
                                                   int r) {
  auto mv = solver.find_winning_move(pos, r, /*skip_occupied=*/true);
  if (!mv)
    throw std::logic_error("strategy extraction: no duplicate-free winning move found");
  auto node = std::make_shared<StrategyNode>();
  node->side = mv->side;
  node->vertex = mv->vertex;
  PosVec base = pos;
  if (mv->lift_index >= 0) {
    Code lifted = pos.c[mv->lift_index];
    node->lifted = std::make_pair(lifted >> 6, lifted & 63);
    base = erase_at(pos, mv->lift_index);
  }
  const GamePair& gp = solver.pair();
  int nreply = mv->side == 0 ? gp.nh : gp.ng;
  for (int y = 0; y < nreply; ++y) {
    Code code = mv->side == 0 ? static_cast<Code>((mv->vertex << 6) | y)
                              : static_cast<Code>((y << 6) | mv->vertex);
    if (!gp.consistent_with(base, code)) continue;
    node->replies.emplace_back(y, build_strategy(solver, extend(base, code), r - 1));
  }
  return node;
}

}  // namespace

GameOutcome solve_bounded(const Graph& g, const Graph& h, int pebbles, int rounds,
                          bool want_strategy) {
  if (rounds < 1) throw std::invalid_argument("solve_bounded: rounds must be >= 1");
  if (rounds > kMaxRounds)
    throw CapExceededError("solve_bounded: rounds exceed the cap of " +
                           std::to_string(kMaxRounds));
  BoundedSolver solver(g, h, pebbles);
  PosVec empty;
  GameOutcome out;
  out.spoiler_wins = solver.win(empty, rounds);
  if (out.spoiler_wins) {
    for (int r = 1; r <= rounds; ++r)
      if (solver.win(empty, r)) {
        out.rounds_needed = r;
        break;
      }
    if (want_strategy) out.strategy = build_strategy(solver, empty, *out.rounds_needed);
  }
  return out;
}

GameOutcome solve_unbounded(const Graph& g, const Graph& h, int pebbles) {
  return UnboundedSolver(g, h, pebbles).run();
}

GameOutcome solve(const GameQuery& q) {
  if (q.rounds) return solve_bounded(*q.g, *q.h, q.pebbles, *q.rounds);
  return solve_unbounded(*q.g, *q.h, q.pebbles);
}

int depth_D(const Graph& g, const Graph& h) {
  int kmax = std::max(g.vertex_count(), h.vertex_count());
  for (int k = 1; k <= kmax; ++k)
    if (solve_bounded(g, h, k, k).spoiler_wins) return k;
  throw IndistinguishableError("depth_D: graphs are indistinguishable (isomorphic)");
}

int width_W(const Graph& g, const Graph& h) {
  int kmax = std::max(g.vertex_count(), h.vertex_count());
  for (int k = 1; k <= kmax; ++k)
    if (solve_unbounded(g, h, k).spoiler_wins) return k;
  throw IndistinguishableError("width_W: graphs are indistinguishable (isomorphic)");
}

namespace {

// Variables are named by pebble slot; a lifted pebble rebinds its variable,
// which keeps the width at the pebble number.
class SentenceExtractor {
 public:
  SentenceExtractor(const Graph& g, const Graph& h, int k) : solver_(g, h, k), k_(k) {
    slots_.assign(k, std::nullopt);
  }

  FormulaPtr build(const PosVec& pos, int r) {
    auto mv = solver_.find_winning_move(pos, r, /*skip_occupied=*/true);
    if (!mv)
      throw std::logic_error("extract_sentence: no duplicate-free winning move found");
    PosVec base = pos;
    int slot = -1;
    if (mv->lift_index >= 0) {
      Code lifted = pos.c[mv->lift_index];
      base = erase_at(pos, mv->lift_index);
      for (int s = 0; s < k_; ++s)
        if (slots_[s] && *slots_[s] == lifted) slot = s;
    } else {
      for (int s = 0; s < k_ && slot < 0; ++s)
        if (!slots_[s]) slot = s;
    }
    const GamePair& gp = solver_.pair();
    std::string var = var_name(slot);
    auto saved = slots_[slot];
    slots_[slot] = std::nullopt;

    std::vector<FormulaPtr> atp;
    for (int s = 0; s < k_; ++s) {
      if (!slots_[s]) continue;
      int u = *slots_[s] >> 6, v = *slots_[s] & 63;
      bool eq, adj;
      if (mv->side == 0) {
        eq = mv->vertex == u;
        adj = (gp.adjg[mv->vertex] >> u) & 1;
      } else {
        eq = mv->vertex == v;
        adj = (gp.adjh[mv->vertex] >> v) & 1;
      }
      FormulaPtr e = Formula::equal(var, var_name(s));
      FormulaPtr a = Formula::adjacent(var, var_name(s));
      atp.push_back(eq ? e : Formula::negation(e));
      atp.push_back(adj ? a : Formula::negation(a));
    }

    int nreply = mv->side == 0 ? gp.nh : gp.ng;
    std::vector<FormulaPtr> branches;
    for (int y = 0; y < nreply; ++y) {
      Code code = mv->side == 0 ? static_cast<Code>((mv->vertex << 6) | y)
                                : static_cast<Code>((y << 6) | mv->vertex);
      if (!gp.consistent_with(base, code)) continue;
      slots_[slot] = code;
      branches.push_back(build(extend(base, code), r - 1));
    }
    slots_[slot] = saved;

    if (mv->side == 0) {
      for (auto& b : branches) atp.push_back(std::move(b));
      return Formula::exists(var, Formula::conj(std::move(atp)));
    }
    std::vector<FormulaPtr> disj;
    disj.push_back(Formula::negation(Formula::conj(std::move(atp))));
    for (auto& b : branches) disj.push_back(std::move(b));
    return Formula::forall(var, Formula::disj(std::move(disj)));
  }

  bool winnable(int r) {
    PosVec empty;
    return solver_.win(empty, r);
  }

 private:
  static std::string var_name(int slot) { return "x" + std::to_string(slot + 1); }

  BoundedSolver solver_;
  int k_;
  std::vector<std::optional<Code>> slots_;
};

}  // namespace

FormulaPtr extract_sentence(const Graph& g, const Graph& h, int k, int r) {
  if (r < 1 || r > kMaxRounds) throw std::invalid_argument("extract_sentence: bad round count");
  SentenceExtractor ex(g, h, k);
  if (!ex.winnable(r))
    throw std::invalid_argument(
        "extract_sentence: Spoiler does not win the given bounded game");
  PosVec empty;
  return ex.build(empty, r);
}

namespace {

nlohmann::json strategy_json_rec(const StrategyNode& node) {
  nlohmann::json j;
  j["side"] = node.side == 0 ? "G" : "H";
  j["vertex"] = node.vertex;
  if (node.lifted)
    j["lifted"] = {node.lifted->first, node.lifted->second};
  else
    j["lifted"] = nullptr;
  nlohmann::json replies = nlohmann::json::array();
  for (const auto& [y, child] : node.replies)
    replies.push_back({{"reply", y}, {"next", strategy_json_rec(*child)}});
  j["replies"] = std::move(replies);
  return j;
}

}  // namespace

std::string strategy_to_json(const StrategyNode& root) {
  return strategy_json_rec(root).dump();
}

}  // namespace efsub
