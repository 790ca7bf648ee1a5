#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace sparsity {

struct ExperimentOptions {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// Per task (one p, one cell, one r); 0 disables.
  double timeout_secs = 0;
  /// Progress lines go here when set.
  std::ostream* progress = nullptr;
};

struct ExperimentReport {
  std::string id;
  nlohmann::json inputs;
  std::vector<std::string> columns;    // CSV column order
  std::vector<nlohmann::json> records;
  std::vector<double> seconds;         // wall clock per record
  nlohmann::json aggregates = nlohmann::json::object();
  double total_seconds = 0;
  bool partial = false;                // some task hit its timeout
  bool verification_failed = false;

  /// Timings are left out when include_timings is false, which makes the
  /// output a pure function of the inputs.
  nlohmann::json to_json(bool include_timings = true) const;
  /// Header row, then one row per record; "--" for timed-out cells.
  void write_csv(std::ostream& out) const;
};

double median(std::vector<double> values);
/// Linear interpolation between order statistics, q in [0, 1].
double quantile(std::vector<double> values, double q);

/// Palette size, verification status and a treedepth bound for each
/// p = 2..p_max on one network.
ExperimentReport run_color_profile(const std::string& network_file, unsigned p_max,
                                   const ExperimentOptions& options = {});

/// For each (gamma, n, seed): power-law degrees, configuration graph, and
/// the palette of a 4-centered coloring. Seeds are options.seed + 0..seeds-1.
ExperimentReport run_dichotomy_experiment(const std::vector<double>& gammas,
                                          const std::vector<std::size_t>& sizes, std::size_t seeds,
                                          const ExperimentOptions& options = {});

/// Top-k Jaccard between localized and exact centralities on the giant
/// component, per radius and measure.
ExperimentReport run_centrality_study(const std::string& network_file, const std::vector<unsigned>& radii,
                                      double fraction = 0.10, const ExperimentOptions& options = {});

}  // namespace sparsity
