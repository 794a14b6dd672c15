#include "efsub/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace efsub {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("Graph: negative vertex count");
  words_ = (n_ + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
  set_bit(u, v);
  set_bit(v, u);
}

int Graph::edge_count() const {
  long long total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return static_cast<int>(total / 2);
}

int Graph::degree(int v) const {
  check(v);
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::neighborhood(int v) const {
  check(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (bit(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (bit(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  for (int v : vertices) check(v);
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (bit(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph Graph::remove_vertex(int v) const {
  check(v);
  std::vector<int> keep;
  keep.reserve(n_ - 1);
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

bool Graph::is_connected() const { return components().size() <= 1; }

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n_, 0);
  for (int start = 0; start < n_; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      int u = comp[head];
      for (int w = 0; w < n_; ++w)
        if (bit(u, w) && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph out(n_ + other.n_);
  for (auto [u, v] : edges()) out.add_edge(u, v);
  for (auto [u, v] : other.edges()) out.add_edge(n_ + u, n_ + v);
  return out;
}

}  // namespace efsub
