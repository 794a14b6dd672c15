#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "efsub/graph.hpp"
#include "efsub/rational.hpp"

namespace efsub {

// Injective map pattern-vertex -> host-vertex sending pattern edges to host
// edges (not-necessarily-induced semantics).
struct Embedding {
  std::vector<int> map;
};

// Backtracking search over pattern vertices in index order with degree and
// adjacency pruning. Returns the lexicographically least embedding under the
// fixed vertex order, or nullopt.
std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern);

// p(F): largest t with a pendant path P_{t+1}; s(F): largest s with a pendant
// star K_{1,s}; both 0 when F has no pendant vertex. spa(F): largest p over
// pendant sparkler subgraphs S_{q,p} with q >= 3 (p = 0 allowed; reported as
// spa = 0 when only p = 0 branches exist), absent when F has none.
struct PatternStats {
  int pendant_path = 0;
  int pendant_star = 0;
  std::optional<int> pendant_sparkler;
};
PatternStats pattern_stats(const Graph& f);  // throws on disconnected input

// Twin classes: u,v are twins iff no third vertex is adjacent to exactly one
// of them. Classes are listed by least member; each is a clique or an
// independent set. The flag records whether every largest class is an
// inclusion-maximal homogeneous set (the refined regime of the definability
// dichotomy).
struct TwinDecomposition {
  std::vector<std::vector<int>> classes;
  int sigma = 0;
  bool largest_class_is_maximal_homogeneous = false;
};
TwinDecomposition twin_decomposition(const Graph& g);

// True iff g contains P_ell or K_{1,ell-1} as a subgraph. Requires ell >= 2.
bool phi_ell_holds(const Graph& g, int ell);

// If f is a sparkler S_{q,p} with q >= 3 and p >= 2, returns (q, p) maximizing
// the sparkler width bound over all such presentations of f.
std::optional<std::pair<int, int>> sparkler_form(const Graph& f);

// Certified lower bound on the asymptotic width needed to define containment
// of the connected pattern f: the best of the pendant-star, pendant-path,
// pendant-sparkler, and sparkler-specific bounds, plus the exact path and
// star values.
Rational combined_lower_bound(const Graph& f);

// Brute-force isomorphism over vertex permutations; correctness oracle for
// graphs of at most 10 vertices.
bool isomorphic_brute(const Graph& g, const Graph& h);

}  // namespace efsub
