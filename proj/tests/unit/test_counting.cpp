#include <chrono>

#include "doctest.h"
#include "oracles.hpp"
#include "sparsity/coloring.hpp"
#include "sparsity/counting.hpp"
#include "sparsity/errors.hpp"

using namespace sparsity;

namespace {

const std::string kFixtures = SPARSITY_FIXTURE_DIR;

// Every vertex its own color: the extraction is a valid forest for any graph.
TreedepthForest trivial_forest(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Color> colors(n), subset(n);
  for (std::size_t i = 0; i < n; ++i) colors[i] = subset[i] = static_cast<Color>(i);
  const auto c = LtdColoring::from_colors(static_cast<unsigned>(n + 1), colors);
  return extract_treedepth_forest(g, c, subset);
}

std::uint64_t global(const PatternGraph& h, const Graph& g, CountMode mode) {
  const auto c = compute_ltd_coloring(g, h.size() + 1);
  return count_global(h, g, c, mode).maps;
}

}  // namespace

TEST_CASE("count modes parse") {
  CHECK(parse_count_mode("induced") == CountMode::induced);
  CHECK(parse_count_mode("subgraph-iso") == CountMode::subgraph);
  CHECK(parse_count_mode("hom") == CountMode::homomorphism);
  CHECK_THROWS_AS(parse_count_mode("bogus"), ArgumentError);
}

TEST_CASE("automorphism counts") {
  CHECK(automorphism_count(PatternGraph::builtin("K3")) == 6);
  CHECK(automorphism_count(PatternGraph::builtin("P3")) == 2);
  CHECK(automorphism_count(PatternGraph::builtin("C4")) == 8);
  CHECK(automorphism_count(PatternGraph::builtin("claw")) == 6);
  CHECK(automorphism_count(PatternGraph::builtin("K1")) == 1);
}

TEST_CASE("patterns above the size budget are rejected") {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 10; ++i) e.push_back({i, i + 1});
  CHECK_THROWS_AS(PatternGraph::from_edges(11, e), BudgetError);
}

TEST_CASE("connected pattern enumeration sizes") {
  CHECK(all_connected_patterns(1).size() == 1);
  CHECK(all_connected_patterns(2).size() == 2);
  CHECK(all_connected_patterns(3).size() == 4);
  CHECK(all_connected_patterns(4).size() == 10);
  CHECK(all_connected_patterns(5).size() == 31);
  for (const auto& h : all_connected_patterns(4)) CHECK(h.connected());
}

TEST_CASE("count_on_treedepth small cases") {
  const Graph k3 = oracle::complete(3);
  CHECK(count_on_treedepth(PatternGraph::builtin("K3"), k3, trivial_forest(k3), CountMode::induced) == 6);
  const Graph g = oracle::erdos_renyi(30, 3, 4);
  CHECK(count_on_treedepth(PatternGraph::builtin("K2"), g, trivial_forest(g), CountMode::subgraph) ==
        2 * g.num_edges());
  CHECK(count_on_treedepth(PatternGraph::builtin("P3"), k3, trivial_forest(k3), CountMode::homomorphism) == 12);
}

TEST_CASE("count_on_treedepth rejects a forest without closure") {
  const Graph g = oracle::path(3);
  std::vector<Vertex> domain{0, 1, 2};
  std::vector<Vertex> parent{kNoVertex, kNoVertex, kNoVertex};
  const auto f = TreedepthForest::from_parents(3, domain, parent);
  CHECK_THROWS_AS(count_on_treedepth(PatternGraph::builtin("K2"), g, f, CountMode::subgraph), ArgumentError);
}

TEST_CASE("count_global basic cases") {
  const Graph k4 = oracle::complete(4);
  const auto c = compute_ltd_coloring(k4, 4);
  const auto tri = count_global(PatternGraph::builtin("K3"), k4, c, CountMode::induced);
  CHECK(tri.maps == 24);
  CHECK(tri.copies() == 4);
  const Graph g = oracle::erdos_renyi(50, 3, 2);
  const auto c3 = compute_ltd_coloring(g, 3);
  CHECK(count_global(PatternGraph::builtin("K2"), g, c3, CountMode::subgraph).copies() == g.num_edges());
}

TEST_CASE("count_global triangles on karate match brute force") {
  const Graph g = read_edge_list_file(kFixtures + "/karate.txt").graph;
  const auto h = PatternGraph::builtin("K3");
  CHECK(global(h, g, CountMode::subgraph) == brute_force_count(h, g, CountMode::subgraph));
  CHECK(global(h, g, CountMode::subgraph) / 6 == 45);
}

TEST_CASE("count_global preconditions") {
  const Graph g = oracle::path(6);
  const auto h = PatternGraph::builtin("P4");
  CHECK_THROWS_AS(count_global(h, g, compute_ltd_coloring(g, 4), CountMode::subgraph), ArgumentError);
  const auto two_edges = PatternGraph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(count_global(two_edges, g, compute_ltd_coloring(g, 5), CountMode::subgraph), ArgumentError);
  auto unverified = LtdColoring::from_colors(5, std::vector<Color>{0, 1, 2, 3, 4, 0});
  CHECK_THROWS_AS(count_global(h, g, unverified, CountMode::subgraph), ArgumentError);
}

TEST_CASE("brute force small cases") {
  CHECK(brute_force_count(PatternGraph::builtin("P3"), oracle::cycle(4), CountMode::induced) / 2 == 4);
  const Graph g = oracle::erdos_renyi(25, 2, 8);
  CHECK(brute_force_count(PatternGraph::builtin("K1"), g, CountMode::subgraph) == 25);
  CHECK(brute_force_count(PatternGraph::builtin("K3"), oracle::cycle(5), CountMode::subgraph) == 0);
  CHECK_THROWS_AS(brute_force_count(PatternGraph::builtin("K2"), oracle::path(501), CountMode::subgraph),
                  BudgetError);
}

TEST_CASE("count_global equals brute force on random hosts") {
  const auto patterns = all_connected_patterns(4);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = oracle::erdos_renyi(20 + seed * 2, 1.0 + static_cast<double>(seed % 3), seed);
    for (const auto& h : patterns) {
      const auto c = compute_ltd_coloring(g, h.size() + 1);
      std::uint64_t prev = 0;
      for (CountMode mode : {CountMode::induced, CountMode::subgraph, CountMode::homomorphism}) {
        const auto got = count_global(h, g, c, mode).maps;
        CHECK(got == brute_force_count(h, g, mode));
        CHECK(got >= prev);  // induced <= subgraph <= homomorphism
        prev = got;
        if (mode != CountMode::homomorphism) CHECK(got % automorphism_count(h) == 0);
      }
    }
  }
}

TEST_CASE("DP trace: leaves hold boundary-only patterns, partial full counts bounded") {
  const Graph g = oracle::erdos_renyi(40, 3, 6);
  const auto f = trivial_forest(g);
  for (const auto& h : all_connected_patterns(3)) {
    CountTrace trace;
    const auto total = count_on_treedepth(h, g, f, CountMode::subgraph, &trace);
    CHECK(trace.leaves_boundary_only);
    CHECK(trace.max_full_entry <= total);
  }
}

TEST_CASE("pattern vertex profiles") {
  const Graph s3 = oracle::star(3);
  const auto k2 = pattern_vertex_profile(PatternGraph::builtin("K2"), s3, trivial_forest(s3), CountMode::subgraph);
  CHECK(k2[0][0] == 3);
  CHECK(k2[0][1] == 3);
  for (Vertex leaf = 1; leaf <= 3; ++leaf) CHECK(k2[leaf][0] == 1);

  const Graph k4 = oracle::complete(4);
  const auto k3 = pattern_vertex_profile(PatternGraph::builtin("K3"), k4, trivial_forest(k4), CountMode::subgraph);
  for (Vertex v = 0; v < 4; ++v) {
    for (unsigned a = 0; a < 3; ++a) CHECK(k3[v][a] == 6);
  }

  const Graph p3 = oracle::path(3);
  const auto pp = pattern_vertex_profile(PatternGraph::builtin("P3"), p3, trivial_forest(p3), CountMode::subgraph);
  CHECK(pp[1][1] == 2);  // builtin P3 is 0-1-2, slot 1 is the middle
}

TEST_CASE("profile columns sum to the total map count") {
  const Graph g = oracle::erdos_renyi(30, 3, 12);
  const auto f = trivial_forest(g);
  for (const auto& h : all_connected_patterns(4)) {
    for (CountMode mode : {CountMode::induced, CountMode::subgraph, CountMode::homomorphism}) {
      const auto total = count_on_treedepth(h, g, f, mode);
      const auto prof = pattern_vertex_profile(h, g, f, mode);
      for (unsigned a = 0; a < h.size(); ++a) {
        std::uint64_t s = 0;
        for (const auto& row : prof) s += row[a];
        CHECK(s == total);
      }
    }
  }
}
