#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsity/coloring.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/parallel.hpp"

namespace sparsity {

enum class CountMode { induced, subgraph, homomorphism };

std::string to_string(CountMode mode);
/// Accepts "induced", "subgraph", "homomorphism" (and "hom").
CountMode parse_count_mode(std::string_view text);

inline constexpr unsigned kMaxPatternSize = 10;

/// Small simple undirected pattern graph on vertices 0..h-1.
class PatternGraph {
 public:
  PatternGraph() = default;
  static PatternGraph from_edges(unsigned h, std::span<const Edge> edges, std::string name = {});
  static PatternGraph from_graph(const Graph& g, std::string name = {});

  /// K1..K10, P1..P10, C3..C10, S1..S9 (star with n leaves) and the names
  /// claw, paw, diamond. Throws ArgumentError for anything else.
  static PatternGraph builtin(std::string_view name);

  unsigned size() const noexcept { return h_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(unsigned a, unsigned b) const noexcept { return (adj_[a] >> b) & 1u; }
  std::uint32_t neighbor_mask(unsigned a) const noexcept { return adj_[a]; }
  bool connected() const noexcept;
  const std::string& name() const noexcept { return name_; }

 private:
  unsigned h_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adj_;
  std::string name_;
};

/// One representative per isomorphism class of connected graphs with
/// 1..max_h vertices (max_h <= 6).
std::vector<PatternGraph> all_connected_patterns(unsigned max_h);

/// |Aut(H)| by trying all h! permutations. BudgetError above kMaxPatternSize.
std::uint64_t automorphism_count(const PatternGraph& h);

struct CountTrace {
  std::size_t nodes = 0;
  std::size_t max_table_size = 0;
  std::size_t total_entries = 0;
  /// Largest count seen for the all-internal pattern at any node.
  std::uint64_t max_full_entry = 0;
  /// False if some leaf table held a pattern with an internal vertex.
  bool leaves_boundary_only = true;
};

/// Number of maps V(H) -> V(G) of the requested kind, by dynamic
/// programming over the forest: leaf tables from root-path checks, forget
/// when passing a table to the parent, join across siblings.
/// The forest must cover V(g) and satisfy the closure property.
std::uint64_t count_on_treedepth(const PatternGraph& h, const Graph& g, const TreedepthForest& forest,
                                 CountMode mode, CountTrace* trace = nullptr);

/// profile[v][a] = number of counted maps with phi(a) = v.
std::vector<std::vector<std::uint64_t>> pattern_vertex_profile(const PatternGraph& h, const Graph& g,
                                                               const TreedepthForest& forest,
                                                               CountMode mode);

struct GlobalCount {
  CountMode mode = CountMode::subgraph;
  std::uint64_t maps = 0;
  std::uint64_t automorphisms = 1;
  std::size_t subsets_evaluated = 0;
  unsigned colors_used = 0;

  /// Maps divided by |Aut(H)| in the isomorphism modes; maps otherwise.
  std::uint64_t copies() const noexcept {
    return mode == CountMode::homomorphism ? maps : maps / automorphisms;
  }
};

struct CountOptions {
  unsigned threads = 1;
  Deadline deadline;
};

/// Counts over every color subset C with |C| <= h of a coloring verified for
/// p >= h+1: each subset's induced subgraph is counted on its extracted
/// forest, exactly-C counts follow by inclusion-exclusion, and the total is
/// their sum. H must be connected.
GlobalCount count_global(const PatternGraph& h, const Graph& g, const LtdColoring& coloring,
                         CountMode mode, const CountOptions& options = {});

struct BruteForceBudget {
  std::size_t max_vertices = 500;
  unsigned max_pattern = 6;
};

/// Map count by backtracking over all (injective, outside homomorphism mode)
/// maps. BudgetError outside the budget.
std::uint64_t brute_force_count(const PatternGraph& h, const Graph& g, CountMode mode,
                                const BruteForceBudget& budget = {});

}  // namespace sparsity
