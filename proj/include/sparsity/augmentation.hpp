#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sparsity/graph.hpp"

namespace sparsity {

/// Radius used when arc lengths should never be discarded.
inline constexpr unsigned kUnboundedRadius = std::numeric_limits<unsigned>::max();

struct InArc {
  Vertex tail;
  unsigned length;

  friend bool operator==(const InArc&, const InArc&) = default;
};

struct OutArc {
  Vertex head;
  unsigned length;
};

struct Arc {
  Vertex tail;
  Vertex head;
  unsigned length;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed graph with one positive length per ordered vertex pair.
///
/// Arcs are stored by head: in_arcs(v) lists (tail, length) sorted by tail.
/// All lengths lie in 1..radius(). Instances are immutable once built.
class ArcWeightedDigraph {
 public:
  ArcWeightedDigraph() = default;
  ArcWeightedDigraph(std::size_t n, unsigned radius) : radius_(radius), in_(n) {}

  /// Arcs may repeat; the minimum length per ordered pair is kept. Arcs longer
  /// than `radius`, self-arcs, and zero lengths are rejected.
  static ArcWeightedDigraph from_arcs(std::size_t n, unsigned radius, std::vector<Arc> arcs);

  std::size_t num_vertices() const noexcept { return in_.size(); }
  unsigned radius() const noexcept { return radius_; }
  std::size_t num_arcs() const noexcept;
  std::size_t max_in_degree() const noexcept;

  std::span<const InArc> in_arcs(Vertex v) const noexcept { return in_[v]; }
  std::size_t in_degree(Vertex v) const noexcept { return in_[v].size(); }

  std::optional<unsigned> length(Vertex tail, Vertex head) const noexcept;
  bool has_arc(Vertex tail, Vertex head) const noexcept { return length(tail, head).has_value(); }

  /// All arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;
  std::vector<std::vector<OutArc>> out_lists() const;

  /// Undirected simple graph on the same vertices with an edge wherever
  /// an arc exists in either direction.
  Graph underlying_graph() const;

  friend bool operator==(const ArcWeightedDigraph&, const ArcWeightedDigraph&) = default;

 private:
  unsigned radius_ = 1;
  std::vector<std::vector<InArc>> in_;
};

/// Orients every edge from its later-removed to its earlier-removed endpoint
/// in the degeneracy order, all lengths 1.
ArcWeightedDigraph degeneracy_orientation(const Graph& g, unsigned radius = 1);

/// One transitive-fraternal augmentation.
///
/// Transitive: u->v, v->w yields u->w with length w(uv)+w(vw).
/// Fraternal: u->w, v->w yields an arc between u and v with length
/// w(uw)+w(vw). When u and v are already joined (by an input arc or a new
/// transitive arc) the existing arc(s) take the smaller length; otherwise the
/// new pairs form a conflict graph whose degeneracy order orients each pair
/// from the later-removed to the earlier-removed endpoint. Candidates longer
/// than the radius are dropped and the minimum length per ordered pair wins.
ArcWeightedDigraph augment_round(const ArcWeightedDigraph& d);

/// Digraph certifying every distance up to `radius`: for d_G(u,v) <= radius,
/// either an arc between u and v or a common in-neighbour w realizes the
/// distance exactly. Built from the degeneracy orientation with at most
/// radius-1 augmentation rounds (stopping early at a fixed point).
ArcWeightedDigraph build_truncated_digraph(const Graph& g, unsigned radius);

/// Best certified distance for u != v: min over the arc lengths between them
/// and w(xu)+w(xv) over common in-neighbours x. nullopt if uncertified.
std::optional<unsigned> certified_distance(const ArcWeightedDigraph& d, Vertex u, Vertex v);

struct ExactnessReport {
  std::size_t pairs_checked = 0;
  std::size_t mismatches = 0;
  std::size_t unsound_arcs = 0;  // arcs shorter than the true distance
};

/// Compares certified distances against BFS from the given sources (all
/// vertices when `sources` is empty).
ExactnessReport check_truncated_exactness(const Graph& g, const ArcWeightedDigraph& d,
                                          std::span<const Vertex> sources = {});

/// Debug dump, one "tail head length" line per arc.
void write_digraph(std::ostream& out, const ArcWeightedDigraph& d, const Graph* labels = nullptr);

}  // namespace sparsity
