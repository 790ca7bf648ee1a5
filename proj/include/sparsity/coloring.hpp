#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparsity/errors.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/parallel.hpp"

namespace sparsity {

using Color = std::uint32_t;

/// Vertex coloring aimed at the p-centered property: every connected
/// subgraph with fewer than p colors has a color that occurs exactly once.
struct LtdColoring {
  unsigned p = 2;
  std::vector<Color> colors;
  unsigned palette_size = 0;
  /// Largest subset size i for which all i-subsets of classes were checked.
  unsigned verified_up_to = 0;
  /// True when some level was only spot-checked on a random sample.
  bool sampled = false;

  /// Wraps raw colors, renumbering them densely in order of first use.
  static LtdColoring from_colors(unsigned p, std::vector<Color> colors);

  std::vector<std::vector<Vertex>> classes() const;
};

/// Rooted forest over a vertex subset of a host graph.
class TreedepthForest {
 public:
  TreedepthForest() = default;

  /// `parent[v]` is kNoVertex for roots; only entries of `domain` are read.
  /// Throws ArgumentError for cycles or parents outside the domain.
  static TreedepthForest from_parents(std::size_t host_size, std::vector<Vertex> domain,
                                      const std::vector<Vertex>& parent);

  const std::vector<Vertex>& domain() const noexcept { return domain_; }
  bool contains(Vertex v) const noexcept { return v < in_domain_.size() && in_domain_[v]; }
  Vertex parent(Vertex v) const noexcept { return parent_[v]; }
  /// 1 for roots.
  unsigned level(Vertex v) const noexcept { return level_[v]; }
  unsigned depth() const noexcept { return depth_; }
  std::size_t host_size() const noexcept { return parent_.size(); }

  std::vector<Vertex> roots() const;
  /// Children per vertex (host indexing), each sorted ascending.
  std::vector<std::vector<Vertex>> children() const;
  bool is_ancestor(Vertex ancestor, Vertex v) const noexcept;

  /// Every edge of g inside the domain joins an ancestor-descendant pair.
  bool satisfies_closure(const Graph& g) const;

 private:
  std::vector<Vertex> domain_;
  std::vector<Vertex> parent_;
  std::vector<unsigned> level_;
  std::vector<bool> in_domain_;
  unsigned depth_ = 0;
};

/// A connected piece of the induced subgraph in which no color occurs once.
class CenteredViolation : public Error {
 public:
  CenteredViolation(std::vector<Vertex> component, std::vector<Color> subset);

  const std::vector<Vertex>& component() const noexcept { return component_; }
  const std::vector<Color>& subset() const noexcept { return subset_; }

 private:
  std::vector<Vertex> component_;
  std::vector<Color> subset_;
};

/// Recursive centered extraction on the subgraph induced by `subset`: each
/// component is rooted at the vertex carrying the smallest color that occurs
/// exactly once, that vertex is removed and the rest recursed on.
/// Requires |subset| < coloring.p. Throws CenteredViolation.
TreedepthForest extract_treedepth_forest(const Graph& g, const LtdColoring& coloring,
                                         std::span<const Color> subset);

struct VerifyOptions {
  /// Levels with more subsets than this are checked on a seeded sample.
  std::size_t max_subsets_per_level = 2'000'000;
  std::uint64_t sample_seed = 1;
  unsigned threads = 1;
  Deadline deadline;
};

struct LevelReport {
  unsigned i = 0;
  std::size_t subsets_total = 0;
  std::size_t subsets_checked = 0;
  unsigned max_depth = 0;
  bool pass = true;
  bool sampled = false;
};

struct VerificationReport {
  unsigned p = 0;
  unsigned palette = 0;
  std::vector<LevelReport> levels;
  bool pass = true;
  bool sampled = false;
  /// Lexicographically smallest failing subset, if any.
  std::vector<Color> failing_subset;

  std::string to_json() const;
};

/// Checks every subset of i < p color classes (i = 1..p-1) by centered
/// extraction: pass means each extraction succeeds with depth <= i.
VerificationReport verify_ltd_coloring(const Graph& g, const LtdColoring& coloring, unsigned p,
                                       const VerifyOptions& options = {});

struct ColoringOptions {
  /// Vertices with degree above this get a private color. Default sqrt(2|E|).
  std::optional<double> high_degree_threshold;
  bool private_high_degree = true;
  bool merge_classes = true;
  /// Cap on merge attempts that reach full incremental verification.
  std::size_t max_merge_attempts = 50'000;
  /// Extra augmentation rounds tried when verification fails.
  unsigned max_extra_rounds = 4;
  VerifyOptions verify;
};

struct ColoringRun {
  LtdColoring coloring;
  VerificationReport report;
  unsigned rounds = 0;
  std::size_t private_vertices = 0;
  unsigned palette_before_merge = 0;
  std::size_t merges = 0;
};

/// Raised when the escalation budget is exhausted without a verified result.
class ColoringFailure : public Error {
 public:
  ColoringFailure(const std::string& what, std::vector<Color> subset)
      : Error(what), subset_(std::move(subset)) {}
  const std::vector<Color>& violating_subset() const noexcept { return subset_; }

 private:
  std::vector<Color> subset_;
};

/// (p-1) transitive-fraternal rounds on the graph without its private
/// high-degree vertices, greedy coloring of the augmented graph in reverse
/// degeneracy order, private colors, verified class merging. Verification
/// failures add a round and retry.
ColoringRun compute_ltd_coloring_run(const Graph& g, unsigned p, const ColoringOptions& options = {});
LtdColoring compute_ltd_coloring(const Graph& g, unsigned p, const ColoringOptions& options = {});

/// Upper bound on treedepth: depth of the centered extraction over all
/// classes at once, or nullopt if that extraction hits a violation.
std::optional<unsigned> treedepth_upper_bound(const Graph& g, const LtdColoring& coloring);

/// "label color" lines.
void write_coloring(std::ostream& out, const Graph& g, const LtdColoring& coloring);

}  // namespace sparsity
