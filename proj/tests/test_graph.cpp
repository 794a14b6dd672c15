#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "efsub/graph.hpp"
#include "efsub/graph_io.hpp"

using namespace efsub;

TEST_CASE("construction and adjacency") {
  Graph g(4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.max_degree() == 2);
  CHECK(g.neighborhood(1) == std::vector<int>{0, 2});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("argument validation") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.has_edge(0, 5), std::out_of_range);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("induced subgraph preserves relative order") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 3);
  g.add_edge(3, 4);
  Graph sub = g.induced({1, 3, 4});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.has_edge(0, 1));
  CHECK(sub.has_edge(1, 2));
  CHECK_FALSE(sub.has_edge(0, 2));
}

TEST_CASE("remove_vertex compacts indices") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  Graph r = g.remove_vertex(1);
  CHECK(r.vertex_count() == 3);
  CHECK(r.has_edge(1, 2));   // old 2-3
  CHECK_FALSE(r.has_edge(0, 1));
}

TEST_CASE("connectivity and components") {
  Graph empty(0);
  CHECK(empty.is_connected());
  Graph g(5);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  CHECK_FALSE(g.is_connected());
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 2});
  CHECK(comps[1] == std::vector<int>{1});
  CHECK(comps[2] == std::vector<int>{3, 4});
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  CHECK(g.is_connected());
}

TEST_CASE("disjoint union and equality") {
  Graph a(2);
  a.add_edge(0, 1);
  Graph b(1);
  Graph u = a.disjoint_union(b);
  CHECK(u.vertex_count() == 3);
  CHECK(u.has_edge(0, 1));
  CHECK(u.degree(2) == 0);
  Graph a2(2);
  a2.add_edge(1, 0);
  CHECK(a == a2);
  CHECK_FALSE(a == b);
}

TEST_CASE("edge list round trip") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 3);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);
}

TEST_CASE("edge list accepts comments and blank lines") {
  std::istringstream in("# a triangle\n\n3 3\n0 1\n1 2\n\n# last\n2 0\n");
  Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("malformed edge lists are rejected") {
  std::istringstream missing("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(missing), std::runtime_error);
  std::istringstream junk("not a graph\n");
  CHECK_THROWS_AS(read_edge_list(junk), std::runtime_error);
  std::istringstream range("2 1\n0 5\n");
  CHECK_THROWS(read_edge_list(range));
}

TEST_CASE("graph6 known encodings") {
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(0, 2);
  k3.add_edge(1, 2);
  CHECK(to_graph6(k3) == "Bw");
  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(to_graph6(k4) == "C~");
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK(to_graph6(p4) == "Ch");
  CHECK(from_graph6("Bw") == k3);
  CHECK(from_graph6(">>graph6<<C~") == k4);
}

TEST_CASE("graph6 round trip") {
  Graph g(70);  // exercises the long-form size prefix
  for (int i = 0; i + 1 < 70; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, 69);
  g.add_edge(5, 40);
  CHECK(from_graph6(to_graph6(g)) == g);
}
