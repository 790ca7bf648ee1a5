#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sparsity/errors.hpp"
#include "sparsity/graph.hpp"

using namespace sparsity;

TEST_CASE("parse_edge_list maps tokens in first-appearance order") {
  auto p = parse_edge_list_string("a b\nb c");
  CHECK(p.graph.num_vertices() == 3);
  CHECK(p.graph.num_edges() == 2);
  CHECK(p.graph.label(0) == "a");
  CHECK(p.graph.label(2) == "c");
  CHECK(p.graph.has_edge(0, 1));
  CHECK(p.graph.has_edge(1, 2));
  CHECK_FALSE(p.graph.has_edge(0, 2));
}

TEST_CASE("parse_edge_list collapses duplicates and skips comments") {
  auto p = parse_edge_list_string("a b\na b\n# x\n\nb a\n");
  CHECK(p.graph.num_vertices() == 2);
  CHECK(p.graph.num_edges() == 1);
  CHECK(p.duplicate_edges == 2);
}

TEST_CASE("parse_edge_list drops and counts self-loops") {
  auto p = parse_edge_list_string("a a");
  CHECK(p.graph.num_vertices() == 1);
  CHECK(p.graph.num_edges() == 0);
  CHECK(p.self_loops == 1);
}

TEST_CASE("malformed lines carry their line number") {
  try {
    parse_edge_list_string("a b\nc\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list_string("a b c\n"), ParseError);
}

TEST_CASE("edge list round trip preserves n and the edge set") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = oracle::erdos_renyi(40, 2.5, seed);
    std::ostringstream out;
    write_edge_list(out, g);
    const Graph h = parse_edge_list_string(out.str()).graph;
    // isolated vertices are not representable in an edge list
    std::size_t isolated = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) isolated += g.degree(v) == 0;
    REQUIRE(h.num_vertices() == g.num_vertices() - isolated);
    CHECK(h.num_edges() == g.num_edges());
    for (const Edge& e : h.edges()) {
      CHECK(g.has_edge(static_cast<Vertex>(std::stoul(h.label(e.u))),
                       static_cast<Vertex>(std::stoul(h.label(e.v)))));
    }
  }
}

TEST_CASE("graph invariants: symmetric adjacency, degree sum, no loops") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = oracle::erdos_renyi(60, 3, seed);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sum += g.degree(v);
      for (Vertex u : g.neighbors(v)) {
        CHECK(u != v);
        CHECK(g.has_edge(u, v));
      }
      auto nb = g.neighbors(v);
      CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    }
    CHECK(sum == 2 * g.num_edges());
  }
}

TEST_CASE("degeneracy of small named graphs") {
  CHECK(degeneracy_order(oracle::complete(4)).degeneracy == 3);
  CHECK(degeneracy_order(oracle::star(5)).degeneracy == 1);
  CHECK(degeneracy_order(oracle::cycle(5)).degeneracy == 2);
  CHECK(degeneracy_order(Graph::from_edges(3, {})).degeneracy == 0);
}

TEST_CASE("degeneracy order: at most d later neighbours, smallest index on ties") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = oracle::erdos_renyi(80, 4, seed);
    const auto d = degeneracy_order(g);
    REQUIRE(d.order.size() == g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::size_t later = 0;
      for (Vertex u : g.neighbors(v)) later += d.position[u] > d.position[v];
      CHECK(later <= d.degeneracy);
    }
  }
  // path 0-1-2: both ends have degree 1, vertex 0 goes first
  CHECK(degeneracy_order(oracle::path(3)).order.front() == 0);
}

TEST_CASE("bfs_within on P5 from the middle") {
  const Graph g = oracle::path(5);
  const auto m = bfs_within(g, 2, 2);
  CHECK(m.dist.size() == 5);
  CHECK(m.distance_to(2) == 0u);
  CHECK(m.distance_to(1) == 1u);
  CHECK(m.distance_to(3) == 1u);
  CHECK(m.distance_to(0) == 2u);
  CHECK(m.distance_to(4) == 2u);
  CHECK(bfs_within(g, 2, 1).dist.size() == 3);
}

TEST_CASE("bfs_within radius 0 and unreachable vertices") {
  const Graph g = oracle::path(4);
  const auto m = bfs_within(g, 1, 0);
  CHECK(m.dist.size() == 1);
  CHECK(m.distance_to(1) == 0u);
  const Graph pair = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto far = bfs_within(pair, 0, 9);
  CHECK(far.dist.size() == 2);
  CHECK_FALSE(far.distance_to(2).has_value());
  CHECK_THROWS_AS(bfs_within(pair, 7, 1), ArgumentError);
}

TEST_CASE("bfs_within agrees with Floyd-Warshall for n <= 50") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 5 + seed % 46;
    const Graph g = oracle::erdos_renyi(n, 1.0 + static_cast<double>(seed % 3), seed);
    const auto fw = oracle::floyd_warshall(g);
    for (Vertex s = 0; s < n; ++s) {
      const unsigned radius = static_cast<unsigned>(seed % 5);
      const auto m = bfs_within(g, s, radius);
      std::size_t inside = 0;
      for (Vertex t = 0; t < n; ++t) {
        if (fw[s][t] <= radius) {
          ++inside;
          CHECK(m.distance_to(t) == fw[s][t]);
        }
      }
      CHECK(m.dist.size() == inside);
    }
  }
}

TEST_CASE("components, giant component and diameter") {
  const Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
  std::size_t count = 0;
  const auto comp = connected_components(g, &count);
  CHECK(count == 2);
  CHECK(comp[0] == 0);
  CHECK(comp[6] == 1);
  const auto giant = giant_component(g);
  CHECK(giant.graph.num_vertices() == 4);
  CHECK(giant.to_parent.front() == 3);
  CHECK(diameter(giant.graph) == 3);
  CHECK(diameter(oracle::cycle(6)) == 3);
}

TEST_CASE("induced subgraph keeps labels and sorted order") {
  const Graph g = parse_edge_list_string("a b\nb c\nc d\nd a\n").graph;
  const std::vector<Vertex> pick{3, 0, 1};
  const auto s = induced_subgraph(g, pick);
  CHECK(s.graph.num_vertices() == 3);
  CHECK(s.graph.num_edges() == 2);
  CHECK(s.to_parent == std::vector<Vertex>{0, 1, 3});
  CHECK(s.graph.label(2) == "d");
}
