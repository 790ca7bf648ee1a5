#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sparsity/augmentation.hpp"
#include "sparsity/graph.hpp"

namespace sparsity {

using Weight = std::int64_t;

/// Radius cap for the reach index: distance vectors are stored one byte per
/// entry.
inline constexpr unsigned kMaxReachRadius = 255;

/// R[X][dbar]: for every vertex v and nonempty X subset of N^-(v) in the
/// truncated digraph, alpha(v) is added at R[X][dist(v, X)]. Subsets are
/// keyed in ascending vertex order and distance vectors follow that order.
class ReachIndex {
 public:
  ReachIndex() = default;

  const ArcWeightedDigraph& digraph() const noexcept { return d_; }
  unsigned radius() const noexcept { return d_.radius(); }
  std::span<const Weight> alpha() const noexcept { return alpha_; }
  std::size_t num_keys() const noexcept { return table_.size(); }
  std::size_t num_entries() const noexcept;
  Weight total_weight() const noexcept;

  /// Stored weight for one subset and distance vector (0 if absent).
  Weight entry(std::span<const Vertex> subset, std::span<const unsigned> dist) const;

  /// Visits (distance vector, weight) for a subset key, if present.
  template <typename Fn>
  void for_each(std::span<const Vertex> subset, Fn&& fn) const {
    auto it = table_.find(subset_key(subset));
    if (it == table_.end()) return;
    for (const auto& [dv, w] : it->second) fn(std::string_view(dv), w);
  }

  static std::string subset_key(std::span<const Vertex> subset);

 private:
  friend ReachIndex build_reach_index(const ArcWeightedDigraph& d, std::span<const Weight> alpha);

  ArcWeightedDigraph d_;
  std::vector<Weight> alpha_;
  // subset key -> distance vector (one char per entry) -> weight
  std::unordered_map<std::string, std::unordered_map<std::string, Weight>> table_;
};

/// alpha must have one nonnegative entry per vertex. Radius <= 255 and
/// in-degrees <= 26; larger inputs raise BudgetError.
ReachIndex build_reach_index(const ArcWeightedDigraph& d, std::span<const Weight> alpha);

/// Sum of alpha(u) over u != v whose in-neighbourhood meets N^-(v) in
/// exactly X (sorted) and whose distance vector to X equals dist, computed
/// by inclusion-exclusion over supersets of X inside N^-(v).
Weight query_reach(const ReachIndex& idx, Vertex v, std::span<const Vertex> subset,
                   std::span<const unsigned> dist);

struct NeighborhoodSums {
  unsigned r = 0;
  std::size_t n = 0;
  std::vector<Weight> values;  // (r + 1) per vertex, index 0 unused

  Weight at(Vertex v, unsigned d) const { return values[static_cast<std::size_t>(v) * (r + 1) + d]; }
  Weight& at(Vertex v, unsigned d) { return values[static_cast<std::size_t>(v) * (r + 1) + d]; }
  /// Total weight within distance r (excluding v).
  Weight ball(Vertex v) const;
};

enum class SubsetPass {
  /// collapsed when the index fits `index_budget`, pairwise otherwise.
  automatic,
  /// Each (X, dbar) weight comes from query_reach; follows the derivation
  /// term by term and costs about 3^indeg per vertex.
  query,
  /// Same sum regrouped per index entry: over all X within a key Y the
  /// signed min-indicators telescope to one term at the max, so each entry
  /// costs O(|Y|).
  collapsed,
  /// No index: for each v, every out-neighbour u of some x in N^-(v) is
  /// charged at min over shared x of w(xv) + w(xu). This is the state the
  /// subset pass is shown to produce, reached without the 2^indeg keys.
  pairwise,
};

struct NeighborhoodOptions {
  SubsetPass subset_pass = SubsetPass::automatic;
  /// Largest sum over v of 2^indeg(v) for which automatic builds the index.
  double index_budget = 2.5e5;
};

/// Sum over v of 2^indeg(v): the number of (vertex, subset) insertions an
/// index over d needs.
double reach_index_cost(const ArcWeightedDigraph& d);

/// C[v][d] = sum of alpha(u) over u with d_G(u, v) = d, 1 <= d <= r.
NeighborhoodSums neighborhood_sums(const Graph& g, unsigned r, std::span<const Weight> alpha,
                                   const NeighborhoodOptions& options = {});
/// Same, on a prebuilt index (query or collapsed pass; automatic means
/// collapsed, pairwise uses the index's digraph only).
NeighborhoodSums neighborhood_sums(const ReachIndex& idx, const NeighborhoodOptions& options = {});
/// Same, on a prebuilt truncated digraph; builds an index only if the pass
/// needs one.
NeighborhoodSums neighborhood_sums(const ArcWeightedDigraph& d, std::span<const Weight> alpha,
                                   const NeighborhoodOptions& options = {});

/// BFS reference for the same quantity.
NeighborhoodSums neighborhood_sums_bfs(const Graph& g, unsigned r, std::span<const Weight> alpha);

enum class Measure { closeness, harmonic, lin };
std::string to_string(Measure m);
Measure parse_measure(std::string_view text);
inline constexpr Measure kAllMeasures[] = {Measure::closeness, Measure::harmonic, Measure::lin};

struct CentralityTable {
  std::optional<unsigned> radius;  // nullopt for the global measures
  std::vector<double> closeness;
  std::vector<double> harmonic;
  std::vector<double> lin;
  std::vector<std::size_t> reach;  // |N^r[v]|, v included

  std::size_t size() const noexcept { return reach.size(); }
  const std::vector<double>& values(Measure m) const;
};

/// Harmonic sum C/d, Lin's index (1+S)^2/D, and closeness
/// 1/(D + (r+1)(n-1-S)) from neighbourhood sums with unit weights.
CentralityTable centralities_from_sums(const NeighborhoodSums& sums);
CentralityTable localized_centralities(const Graph& g, unsigned r);

/// Per-vertex BFS. Closeness and Lin use the vertex's component only.
CentralityTable exact_centralities(const Graph& g, unsigned threads = 1);

/// Jaccard index of the top ceil(fraction * n) vertices under each table,
/// ties going to the smaller vertex index.
double topk_similarity(const CentralityTable& a, const CentralityTable& b, Measure m,
                       double fraction = 0.10);
std::vector<Vertex> topk_vertices(const CentralityTable& t, Measure m, double fraction);

/// "vertex,closeness,harmonic,lin,reach" rows.
void write_centrality_csv(std::ostream& out, const Graph& g, const CentralityTable& t);

}  // namespace sparsity
