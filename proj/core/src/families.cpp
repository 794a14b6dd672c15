#include "efsub/families.hpp"

#include <stdexcept>

namespace efsub {

namespace {

[[noreturn]] void bad_param(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool ok, const std::string& msg) {
  if (!ok) bad_param(msg);
}

Graph make_path(int l) {
  require(l >= 0, "path: order must be >= 0");
  Graph g(l);
  for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle: order must be >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_complete(int n) {
  require(n >= 0, "complete: order must be >= 0");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph make_complete_bipartite(int t, int s) {
  require(t >= 1 && s >= 1, "complete bipartite: both parts must be >= 1");
  Graph g(t + s);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < s; ++j) g.add_edge(i, t + j);
  return g;
}

Graph make_star(int l) {
  require(l >= 1, "star: order must be >= 1");
  Graph g(l);
  for (int i = 1; i < l; ++i) g.add_edge(0, i);
  return g;
}

Graph make_sparkler(int q, int p) {
  require(q >= 2, "sparkler: q must be >= 2");
  require(p >= 0, "sparkler: p must be >= 0");
  Graph g(q + p);
  for (int i = 1; i < q; ++i) g.add_edge(0, i);
  if (p > 0) {
    g.add_edge(0, q);
    for (int i = 0; i + 1 < p; ++i) g.add_edge(q + i, q + i + 1);
  }
  return g;
}

Graph make_broken_fan(int n) {
  require(n >= 4, "broken fan: order must be >= 4");
  // Path part 0..n-3; hub n-2 adjacent to all path vertices but the last;
  // fresh pendant n-1 replaces the broken hub edge.
  Graph g(n);
  for (int i = 0; i + 1 <= n - 3; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i <= n - 4; ++i) g.add_edge(n - 2, i);
  g.add_edge(n - 2, n - 1);
  return g;
}

Graph make_subdivided_star(int s, int t) {
  require(s >= 1, "subdivided star: s must be >= 1");
  require(t >= 1, "subdivided star: t must be >= 1");
  Graph g(s * t + 1);
  for (int i = 0; i < s; ++i) {
    int first = 1 + i * t;
    g.add_edge(0, first);
    for (int j = 0; j + 1 < t; ++j) g.add_edge(first + j, first + j + 1);
  }
  return g;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Star: return "star";
    case Family::Sparkler: return "sparkler";
    case Family::BrokenFan: return "broken-fan";
    case Family::SubdividedStar: return "subdivided-star";
    case Family::SparklerLowerPair: return "sparkler-lower-pair";
    case Family::CliquePendantPath: return "clique-pendant-path";
    case Family::CliquePendantStar: return "clique-pendant-star";
    case Family::GluedCliqueSparkler: return "glued-clique-sparkler";
  }
  return "?";
}

SparklerPairParams sparkler_pair_params(int q, int p) {
  require(q >= 3, "sparkler lower pair: q must be >= 3");
  require(p >= 4, "sparkler lower pair: p must be >= 4");
  int b = 2 + (p % 2);
  return {(p - b) / 2, b, q - 1};
}

GraphPair generate_pair(const FamilySpec& spec) {
  if (spec.kind != Family::SparklerLowerPair)
    bad_param("generate_pair: only defined for sparkler-lower-pair");
  int q = spec.p1, p = spec.p2, n = spec.p3;
  require(n >= 1, "sparkler lower pair: n must be >= 1");
  auto [a, b, s] = sparkler_pair_params(q, p);
  // Smaller bipartite part 0..a with w = 0, larger part a+1..2a+s,
  // then the n star leaves of w, then the tail of b vertices.
  int larger_end = 2 * a + s;
  Graph g((a + 1) + (a + s) + n + b);
  for (int u = 0; u <= a; ++u)
    for (int v = a + 1; v <= larger_end; ++v) g.add_edge(u, v);
  for (int i = 0; i < n; ++i) g.add_edge(0, larger_end + 1 + i);
  int tail0 = larger_end + n + 1;
  g.add_edge(0, tail0);
  for (int i = 0; i + 1 < b; ++i) g.add_edge(tail0 + i, tail0 + i + 1);
  return {g, g.remove_vertex(larger_end), larger_end};
}

Graph attach(const Graph& g, int at, const FamilySpec& part, GlueRole glue_point) {
  Graph pt;
  int glue = -1;
  switch (part.kind) {
    case Family::Path:
      if (glue_point != GlueRole::PathEnd) bad_param("attach: path part requires path-end glue");
      require(part.p1 >= 1, "attach: path part must be non-empty");
      pt = make_path(part.p1);
      glue = 0;
      break;
    case Family::Star:
      if (glue_point != GlueRole::StarCenter)
        bad_param("attach: star part requires star-center glue");
      pt = make_star(part.p1);
      glue = 0;
      break;
    case Family::Sparkler:
      if (glue_point != GlueRole::SparklerTailEnd)
        bad_param("attach: sparkler part requires sparkler-tail-end glue");
      pt = make_sparkler(part.p1, part.p2);
      glue = part.p2 > 0 ? part.p1 + part.p2 - 1 : 0;
      break;
    default:
      bad_param("attach: part must be a path, star, or sparkler");
  }
  if (at < 0 || at >= g.vertex_count()) bad_param("attach: attachment vertex out of range");

  std::vector<int> relabel(pt.vertex_count());
  int next = g.vertex_count();
  for (int v = 0; v < pt.vertex_count(); ++v) relabel[v] = (v == glue) ? at : next++;

  Graph out(g.vertex_count() + pt.vertex_count() - 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : pt.edges()) out.add_edge(relabel[u], relabel[v]);
  return out;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case Family::Path: return make_path(spec.p1);
    case Family::Cycle: return make_cycle(spec.p1);
    case Family::Complete: return make_complete(spec.p1);
    case Family::CompleteBipartite: return make_complete_bipartite(spec.p1, spec.p2);
    case Family::Star: return make_star(spec.p1);
    case Family::Sparkler: return make_sparkler(spec.p1, spec.p2);
    case Family::BrokenFan: return make_broken_fan(spec.p1);
    case Family::SubdividedStar: return make_subdivided_star(spec.p1, spec.p2);
    case Family::SparklerLowerPair:
      bad_param("generate: sparkler-lower-pair produces two graphs; use generate_pair");
    case Family::CliquePendantPath:
      require(spec.p1 >= 1, "clique-pendant-path: clique order must be >= 1");
      require(spec.p2 >= 1, "clique-pendant-path: path order must be >= 1");
      return attach(make_complete(spec.p1), 0, FamilySpec::path(spec.p2), GlueRole::PathEnd);
    case Family::CliquePendantStar:
      require(spec.p1 >= 1, "clique-pendant-star: clique order must be >= 1");
      require(spec.p2 >= 1, "clique-pendant-star: star leaf count must be >= 1");
      return attach(make_complete(spec.p1), 0, FamilySpec::star(spec.p2 + 1),
                    GlueRole::StarCenter);
    case Family::GluedCliqueSparkler:
      require(spec.p1 >= 1, "glued-clique-sparkler: clique order must be >= 1");
      require(spec.p2 >= 0, "glued-clique-sparkler: p must be >= 0");
      require(spec.p3 >= 3, "glued-clique-sparkler: n must be >= 3");
      return attach(make_complete(spec.p1), 0, FamilySpec::sparkler(spec.p3, spec.p2 + 1),
                    GlueRole::SparklerTailEnd);
  }
  bad_param("generate: unknown family");
}

}  // namespace efsub
