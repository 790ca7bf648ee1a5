#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sparsity/graph.hpp"

namespace sparsity {

enum class DegreeFamily {
  power_law,
  power_law_cutoff,
  exponential,
  stretched_exponential,
  gaussian,
  log_normal,
  constant,
  explicit_histogram,
};

std::string to_string(DegreeFamily f);
DegreeFamily parse_degree_family(std::string_view text);

/// Unnormalized pmf f(d) on {1..cap}; degree 0 only through `constant` or an
/// explicit histogram.
struct DegreeDistributionSpec {
  DegreeFamily family = DegreeFamily::constant;
  double gamma = 2.5;
  double lambda = 1.0;
  double beta = 1.0;
  double mu = 0.0;
  double sigma = 1.0;
  std::size_t value = 1;           // constant degree
  std::vector<double> histogram;   // weight of degree d at index d
  std::size_t cap = 0;             // 0 means n-1

  static DegreeDistributionSpec power_law(double gamma);
  static DegreeDistributionSpec constant_degree(std::size_t d);

  /// Normalized pmf over 0..cap(n) (index = degree). Throws ArgumentError on
  /// out-of-range parameters or zero total mass.
  std::vector<double> pmf(std::size_t n) const;
  double mean(std::size_t n) const;

  nlohmann::json to_json() const;
  static DegreeDistributionSpec from_json(const nlohmann::json& j);
};

struct DegreeSequence {
  std::vector<std::size_t> degrees;
  bool parity_fixed = false;
  std::size_t parity_vertex = 0;
};

/// n i.i.d. draws by inverse CDF; an odd sum is fixed by incrementing one
/// uniformly chosen vertex.
DegreeSequence sample_degree_sequence(const DegreeDistributionSpec& spec, std::size_t n,
                                      std::uint64_t seed);

struct GenerationStats {
  std::size_t loops_removed = 0;
  std::size_t multi_edges_collapsed = 0;
  bool parity_fixed = false;
  std::size_t local_edges = 0;        // Kleinberg lattice edges
  std::size_t long_range_arcs = 0;    // Kleinberg, before symmetrizing
  std::size_t long_range_edges = 0;   // Kleinberg edges not on the lattice
  std::size_t duplicate_picks = 0;    // preferential attachment
  std::vector<std::size_t> requested_degrees;
  std::vector<std::size_t> multigraph_degrees;  // before simplification
  std::vector<std::size_t> degree_histogram;    // realized, index = degree

  nlohmann::json to_json() const;
};

struct GeneratedGraph {
  Graph graph;
  nlohmann::json provenance;
  GenerationStats stats;
};

GeneratedGraph configuration_graph(std::span<const std::size_t> degrees, std::uint64_t seed);
GeneratedGraph household_graph(std::span<const std::size_t> degrees, std::size_t household_size,
                               std::uint64_t seed);
GeneratedGraph chung_lu_graph(std::span<const double> weights, std::uint64_t seed);
GeneratedGraph perturbed_graph(const Graph& base, double mu, std::uint64_t seed);
GeneratedGraph erdos_renyi_graph(std::size_t n, double mu, std::uint64_t seed);
GeneratedGraph kleinberg_grid_graph(std::size_t side, std::uint64_t seed);
GeneratedGraph preferential_attachment_graph(const Graph& seed_graph, std::size_t q, std::size_t t,
                                             std::uint64_t seed);

/// Sum over x != u of d(u, x)^-2 on the side x side lattice (Manhattan).
double kleinberg_normalization(std::size_t side, std::size_t u);

/// One independent pick proportional to degree, as used by a single
/// preferential-attachment draw.
Vertex degree_proportional_pick(const Graph& g, std::uint64_t seed, std::uint64_t trial);

/// {"model": ..., "n": ..., "seed": ..., "params": {...}}. Models:
/// configuration, household, chung-lu, erdos-renyi, perturbed, kleinberg,
/// preferential-attachment. Degree-based models take params.degrees
/// (a DegreeDistributionSpec object); chung-lu uses sampled degrees as
/// weights.
GeneratedGraph generate_from_spec(const nlohmann::json& spec);

/// Writes `path` as an edge list and `path + ".json"` with provenance and
/// stats.
void write_generated(const std::string& path, const GeneratedGraph& g);

}  // namespace sparsity
