#pragma once

// Reference implementations used only by tests: small, obviously correct,
// and slow.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sparsity/graph.hpp"
#include "sparsity/models.hpp"
#include "sparsity/rng.hpp"

namespace oracle {

using sparsity::Edge;
using sparsity::Graph;
using sparsity::Vertex;

inline constexpr unsigned kInf = std::numeric_limits<unsigned>::max();

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph::from_edges(n, e);
}

// Center 0, leaves 1..k.
inline Graph star(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= k; ++i) e.push_back({0, i});
  return Graph::from_edges(k + 1, e);
}

inline Graph erdos_renyi(std::size_t n, double mu, std::uint64_t seed) {
  return sparsity::erdos_renyi_graph(n, mu, seed).graph;
}

inline std::vector<std::vector<unsigned>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Centered check straight from the definition: every connected subgraph
// (enumerated as connected vertex subsets) sees >= p colors or some color
// exactly once. Exponential; n <= 16.
inline bool is_p_centered(const Graph& g, const std::vector<std::uint32_t>& colors, unsigned p) {
  const std::size_t n = g.num_vertices();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t seen = mask & (~mask + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (!((frontier >> v) & 1)) continue;
        for (Vertex u : g.neighbors(v)) {
          if ((mask >> u) & 1 && !((seen >> u) & 1)) next |= 1u << u;
        }
      }
      seen |= next;
      frontier = next;
    }
    if (seen != mask) continue;
    std::vector<unsigned> count(n + 1, 0);
    unsigned distinct = 0;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1 && count[colors[v]]++ == 0) ++distinct;
    }
    if (distinct >= p) continue;
    if (std::find(count.begin(), count.end(), 1u) == count.end()) return false;
  }
  return true;
}

}  // namespace oracle
