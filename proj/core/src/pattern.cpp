#include "efsub/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace efsub {

namespace {

void require_connected(const Graph& f, const char* who) {
  if (!f.is_connected())
    throw std::invalid_argument(std::string(who) + ": input graph must be connected");
}

// Walks from a pendant vertex along degree-2 vertices; returns the number of
// edges traversed and the first vertex of other degree.
std::pair<int, int> walk_from_pendant(const Graph& g, int pendant) {
  int prev = pendant;
  int cur = g.neighborhood(pendant)[0];
  int steps = 1;
  while (g.degree(cur) == 2) {
    auto nb = g.neighborhood(cur);
    int next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++steps;
  }
  return {steps, cur};
}

// Matches a branch rooted at vertex `root` against the sparkler shape
// S_{q,p}, q >= 3, with root at the tail end. Returns p on success.
std::optional<int> sparkler_branch_tail(const Graph& b, int root) {
  if (b.vertex_count() < 4) return std::nullopt;  // q >= 3, p >= 1 needs 4 vertices
  if (b.degree(root) != 1) return std::nullopt;
  auto [p, center] = walk_from_pendant(b, root);
  int q = b.degree(center);
  if (q < 3) return std::nullopt;
  if (b.vertex_count() != p + q) return std::nullopt;
  int pendant_neighbors = 0;
  for (int u : b.neighborhood(center))
    if (b.degree(u) == 1) ++pendant_neighbors;
  // All neighbors but the tail-side one must be leaves (the tail-side
  // neighbor is itself a leaf when p = 1).
  if (pendant_neighbors < q - 1) return std::nullopt;
  return p;
}

bool is_maximal_homogeneous(const Graph& g, const std::vector<int>& cls) {
  bool clique = cls.size() >= 2 && g.has_edge(cls[0], cls[1]);
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : cls) in[v] = 1;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (in[w]) continue;
    bool extends_clique = true, extends_indep = true;
    for (int v : cls) {
      if (g.has_edge(w, v))
        extends_indep = false;
      else
        extends_clique = false;
    }
    if (cls.size() == 1) {
      if (extends_clique || extends_indep) return false;
    } else if (clique ? extends_clique : extends_indep) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern) {
  int l = pattern.vertex_count();
  int n = host.vertex_count();
  if (l > n) return std::nullopt;
  std::vector<int> assign(l, -1);
  std::vector<char> used(n, 0);
  // Pattern neighbors with smaller index, precomputed per vertex.
  std::vector<std::vector<int>> back(l);
  for (int i = 0; i < l; ++i)
    for (int j : pattern.neighborhood(i))
      if (j < i) back[i].push_back(j);

  auto rec = [&](auto&& self, int i) -> bool {
    if (i == l) return true;
    int dp = pattern.degree(i);
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || host.degree(cand) < dp) continue;
      bool ok = true;
      for (int j : back[i])
        if (!host.has_edge(assign[j], cand)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      assign[i] = cand;
      used[cand] = 1;
      if (self(self, i + 1)) return true;
      used[cand] = 0;
      assign[i] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return Embedding{assign};
}

PatternStats pattern_stats(const Graph& f) {
  require_connected(f, "pattern_stats");
  PatternStats st;
  int n = f.vertex_count();

  for (int u = 0; u < n; ++u)
    if (f.degree(u) == 1) st.pendant_path = std::max(st.pendant_path, walk_from_pendant(f, u).first);

  for (int v = 0; v < n; ++v) {
    int pendant_neighbors = 0;
    for (int u : f.neighborhood(v))
      if (f.degree(u) == 1) ++pendant_neighbors;
    st.pendant_star = std::max(st.pendant_star, pendant_neighbors);
  }

  // Pendant sparklers live at vertices of degree 1 or >= 3.
  for (int v = 0; v < n; ++v) {
    int d = f.degree(v);
    if (d == 2 || d == 0) continue;
    // p = 0: a pendant star K_{1,q-1}, q >= 3, attached at its center v.
    int pendant_neighbors = 0;
    for (int u : f.neighborhood(v))
      if (f.degree(u) == 1) ++pendant_neighbors;
    if (pendant_neighbors >= 2)
      st.pendant_sparkler = std::max(st.pendant_sparkler.value_or(0), 0);
    // p >= 1: a v-branch isomorphic to S_{q,p} with v at the tail end.
    auto rest = f.remove_vertex(v);
    std::vector<int> old_index(n - 1);
    for (int u = 0, k = 0; u < n; ++u)
      if (u != v) old_index[k++] = u;
    for (const auto& comp : rest.components()) {
      std::vector<int> branch_vertices{v};
      for (int u : comp) branch_vertices.push_back(old_index[u]);
      std::sort(branch_vertices.begin(), branch_vertices.end());
      int root = static_cast<int>(std::lower_bound(branch_vertices.begin(), branch_vertices.end(),
                                                   v) -
                                  branch_vertices.begin());
      Graph branch = f.induced(branch_vertices);
      if (auto p = sparkler_branch_tail(branch, root))
        st.pendant_sparkler = std::max(st.pendant_sparkler.value_or(0), *p);
    }
  }
  return st;
}

TwinDecomposition twin_decomposition(const Graph& g) {
  int n = g.vertex_count();
  TwinDecomposition out;
  std::vector<int> cls(n, -1);
  auto twins = [&](int u, int v) {
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.has_edge(w, u) != g.has_edge(w, v)) return false;
    }
    return true;
  };
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = static_cast<int>(out.classes.size());
    out.classes.push_back({u});
    for (int v = u + 1; v < n; ++v)
      if (cls[v] < 0 && twins(u, v)) {
        cls[v] = cls[u];
        out.classes.back().push_back(v);
      }
  }
  for (const auto& c : out.classes) out.sigma = std::max(out.sigma, static_cast<int>(c.size()));
  out.largest_class_is_maximal_homogeneous = n > 0;
  for (const auto& c : out.classes)
    if (static_cast<int>(c.size()) == out.sigma && !is_maximal_homogeneous(g, c))
      out.largest_class_is_maximal_homogeneous = false;
  return out;
}

bool phi_ell_holds(const Graph& g, int ell) {
  if (ell < 2) throw std::invalid_argument("phi_ell_holds: ell must be >= 2");
  if (g.max_degree() >= ell - 1) return true;  // K_{1,ell-1}
  Graph path(ell);
  for (int i = 0; i + 1 < ell; ++i) path.add_edge(i, i + 1);
  return find_subgraph(g, path).has_value();
}

std::optional<std::pair<int, int>> sparkler_form(const Graph& f) {
  if (!f.is_connected()) return std::nullopt;
  int n = f.vertex_count();
  for (int u = 0; u < n; ++u) {
    if (f.degree(u) != 1) continue;
    auto [p, center] = walk_from_pendant(f, u);
    int q = f.degree(center);
    if (q < 3 || p < 2 || n != p + q) continue;
    bool star_ok = true;
    int leaves = 0;
    for (int w : f.neighborhood(center))
      if (f.degree(w) == 1) ++leaves;
    star_ok = leaves >= q - 1;
    if (star_ok) return std::make_pair(q, p);
  }
  return std::nullopt;
}

Rational combined_lower_bound(const Graph& f) {
  require_connected(f, "combined_lower_bound");
  if (f.vertex_count() < 2)
    throw std::invalid_argument("combined_lower_bound: pattern needs >= 2 vertices");
  int l = f.vertex_count();
  PatternStats st = pattern_stats(f);
  Rational best(l - st.pendant_star - 1);
  best = max(best, Rational(l - st.pendant_path - 1));
  // exact values for the two marginal shapes: paths and stars
  if (l >= 3 && f.max_degree() <= 2 && f.edge_count() == l - 1)
    best = max(best, Rational(l - 2));
  if (l >= 4 && f.max_degree() == l - 1 && f.edge_count() == l - 1)
    best = max(best, Rational(l - 1));
  if (st.pendant_sparkler) best = max(best, Rational(l - *st.pendant_sparkler - 3));
  if (auto qp = sparkler_form(f)) {
    int p = qp->second;
    best = max(best, Rational(p));
    best = max(best, Rational(2 * l - p - 4 - (p % 2), 2));
  }
  return best;
}

bool isomorphic_brute(const Graph& g, const Graph& h) {
  int n = g.vertex_count();
  if (n != h.vertex_count()) return false;
  if (n > 10) throw std::invalid_argument("isomorphic_brute: restricted to <= 10 vertices");
  if (g.edge_count() != h.edge_count()) return false;
  auto degs = [](const Graph& x) {
    std::vector<int> d(x.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v) d[v] = x.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(g) != degs(h)) return false;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace efsub
