#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace sparsity {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Vertices are dense indices 0..n-1. Neighbor lists are sorted, so
/// has_edge is a binary search. Optional external labels are kept in a side
/// table and only used for reports.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph. Self-loops are dropped and duplicate or reversed
  /// duplicate edges collapse. Endpoints must be < n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of a labelled vertex, if present.
  std::optional<Vertex> find_label(const std::string& name) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

struct ParsedGraph {
  Graph graph;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Reads "u v" lines. '#' starts a comment line, blank lines are skipped.
/// Tokens become dense indices in first-appearance order.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list_string(const std::string& text);
ParsedGraph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

struct DegeneracyOrder {
  std::vector<Vertex> order;     // removal order
  std::vector<std::size_t> position;  // position[v] = index of v in order
  std::size_t degeneracy = 0;
};

/// Repeatedly removes a vertex of minimum remaining degree, smallest index
/// first among ties.
DegeneracyOrder degeneracy_order(const Graph& g);

struct DistanceMap {
  Vertex source = 0;
  unsigned radius = 0;
  std::unordered_map<Vertex, unsigned> dist;

  std::optional<unsigned> distance_to(Vertex v) const;
};

/// Exact distances to every vertex within `radius` of `source`.
DistanceMap bfs_within(const Graph& g, Vertex source, unsigned radius);

inline constexpr unsigned kUnreachable = std::numeric_limits<unsigned>::max();

/// Single-source distances for all vertices; kUnreachable where disconnected.
std::vector<unsigned> bfs_distances(const Graph& g, Vertex source);

/// Component id per vertex, ids dense and ordered by smallest member.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local index -> index in the parent graph
};

/// Subgraph induced by `vertices` (any order, no duplicates). Local indices
/// follow the sorted order of the parent indices; labels are carried over.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Largest connected component, ties broken by smallest member.
Subgraph giant_component(const Graph& g);

/// Largest eccentricity over all vertices (BFS from every vertex); for a
/// disconnected graph this is the largest finite eccentricity.
unsigned diameter(const Graph& g);

}  // namespace sparsity
