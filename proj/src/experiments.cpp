#include "sparsity/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>

#include "sparsity/centrality.hpp"
#include "sparsity/coloring.hpp"
#include "sparsity/errors.hpp"
#include "sparsity/graph.hpp"
#include "sparsity/models.hpp"
#include "sparsity/parallel.hpp"

namespace sparsity {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Progress {
 public:
  explicit Progress(std::ostream* out) : out_(out) {}
  void line(const std::string& text) {
    if (!out_) return;
    std::lock_guard lock(mu_);
    *out_ << text << '\n' << std::flush;
  }

 private:
  std::ostream* out_;
  std::mutex mu_;
};

std::string cell(const json& v) {
  if (v.is_null()) return "--";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v.get<double>());  // shortest round-trip
    return std::string(buf, res.ptr);
  }
  return v.dump();
}

json summary(std::vector<double> xs) {
  if (xs.empty()) return json{{"count", 0}};
  return json{{"count", xs.size()},
              {"median", median(xs)},
              {"q1", quantile(xs, 0.25)},
              {"q3", quantile(xs, 0.75)}};
}

}  // namespace

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw ArgumentError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

json ExperimentReport::to_json(bool include_timings) const {
  json j{{"experiment", id},
         {"inputs", inputs},
         {"records", records},
         {"aggregates", aggregates},
         {"partial", partial},
         {"verification_failed", verification_failed}};
  if (include_timings) {
    j["timings"] = json{{"per_record_seconds", seconds}, {"total_seconds", total_seconds}};
  }
  return j;
}

void ExperimentReport::write_csv(std::ostream& out) const {
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  for (const auto& r : records) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? "," : "") << cell(r.contains(columns[c]) ? r.at(columns[c]) : json());
    }
    out << '\n';
  }
}

ExperimentReport run_color_profile(const std::string& network_file, unsigned p_max,
                                   const ExperimentOptions& options) {
  if (p_max < 2) throw ArgumentError("p_max must be >= 2");
  const auto t0 = Clock::now();
  const Graph g = read_edge_list_file(network_file).graph;
  ExperimentReport rep;
  rep.id = "color-profile";
  rep.inputs = json{{"network", network_file}, {"vertices", g.num_vertices()}, {"edges", g.num_edges()},
                    {"p_max", p_max}, {"seed", options.seed}, {"timeout_secs", options.timeout_secs}};
  rep.columns = {"p", "palette", "verified", "sampled", "treedepth_bound", "rounds"};
  Progress progress(options.progress);
  const std::size_t count = p_max - 1;
  rep.records.assign(count, json());
  rep.seconds.assign(count, 0.0);
  std::vector<char> timed_out(count, 0), failed(count, 0);
  parallel_for(count, resolve_threads(options.threads), [&](unsigned, std::size_t i) {
    const unsigned p = static_cast<unsigned>(i + 2);
    const auto start = Clock::now();
    ColoringOptions co;
    co.verify.sample_seed = options.seed;
    co.verify.deadline = Deadline::after_seconds(options.timeout_secs);
    json rec{{"p", p}};
    try {
      const ColoringRun run = compute_ltd_coloring_run(g, p, co);
      rec["palette"] = run.coloring.palette_size;
      rec["verified"] = run.report.pass;
      rec["sampled"] = run.report.sampled;
      rec["rounds"] = run.rounds;
      const auto bound = treedepth_upper_bound(g, run.coloring);
      rec["treedepth_bound"] = bound ? json(*bound) : json();
      if (!run.report.pass) failed[i] = 1;
    } catch (const TimeoutError&) {
      rec["palette"] = "--";
      timed_out[i] = 1;
    } catch (const ColoringFailure&) {
      rec["palette"] = "--";
      rec["verified"] = false;
      failed[i] = 1;
    }
    rep.records[i] = std::move(rec);
    rep.seconds[i] = since(start);
    progress.line("profile p=" + std::to_string(p) + " palette=" + cell(rep.records[i]["palette"]));
  });
  rep.partial = std::count(timed_out.begin(), timed_out.end(), 1) > 0;
  rep.verification_failed = std::count(failed.begin(), failed.end(), 1) > 0;
  rep.total_seconds = since(t0);
  return rep;
}

ExperimentReport run_dichotomy_experiment(const std::vector<double>& gammas,
                                          const std::vector<std::size_t>& sizes, std::size_t seeds,
                                          const ExperimentOptions& options) {
  for (double gamma : gammas) {
    if (!(gamma > 2)) throw ArgumentError("every gamma must be > 2");
  }
  if (sizes.empty() || gammas.empty() || seeds == 0) throw ArgumentError("empty experiment grid");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw ArgumentError("n list must be strictly ascending");
  }
  const auto t0 = Clock::now();
  ExperimentReport rep;
  rep.id = "dichotomy";
  rep.inputs = json{{"gammas", gammas}, {"sizes", sizes}, {"seeds", seeds}, {"base_seed", options.seed},
                    {"p", 4}, {"timeout_secs", options.timeout_secs}};
  rep.columns = {"gamma", "n", "seed", "edges", "max_degree", "palette", "verified"};
  Progress progress(options.progress);

  struct Cell {
    double gamma;
    std::size_t n;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (double gamma : gammas) {
    for (std::size_t n : sizes) {
      for (std::size_t s = 0; s < seeds; ++s) cells.push_back({gamma, n, options.seed + s});
    }
  }
  rep.records.assign(cells.size(), json());
  rep.seconds.assign(cells.size(), 0.0);
  std::vector<char> timed_out(cells.size(), 0), failed(cells.size(), 0);
  // Large cells first so the pool drains evenly; results land by index.
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cells[a].n != cells[b].n) return cells[a].n > cells[b].n;
    return cells[a].gamma < cells[b].gamma;
  });
  parallel_for(cells.size(), resolve_threads(options.threads), [&](unsigned, std::size_t k) {
    const std::size_t i = order[k];
    const Cell& c = cells[i];
    const auto start = Clock::now();
    const auto degrees = sample_degree_sequence(DegreeDistributionSpec::power_law(c.gamma), c.n, c.seed);
    const auto gen = configuration_graph(degrees.degrees, c.seed);
    json rec{{"gamma", c.gamma}, {"n", c.n}, {"seed", c.seed}, {"edges", gen.graph.num_edges()},
             {"max_degree", gen.graph.max_degree()}};
    ColoringOptions co;
    co.verify.sample_seed = c.seed;
    co.verify.deadline = Deadline::after_seconds(options.timeout_secs);
    try {
      const ColoringRun run = compute_ltd_coloring_run(gen.graph, 4, co);
      rec["palette"] = run.coloring.palette_size;
      rec["verified"] = run.report.pass;
      rec["sampled"] = run.report.sampled;
      if (!run.report.pass) failed[i] = 1;
    } catch (const TimeoutError&) {
      rec["palette"] = "--";
      timed_out[i] = 1;
    } catch (const ColoringFailure&) {
      rec["palette"] = "--";
      rec["verified"] = false;
      failed[i] = 1;
    }
    rep.records[i] = std::move(rec);
    rep.seconds[i] = since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "dichotomy gamma=%g n=%zu seed=%llu palette=%s", c.gamma, c.n,
                  static_cast<unsigned long long>(c.seed), cell(rep.records[i]["palette"]).c_str());
    progress.line(buf);
  });

  json per_cell = json::array();
  json growth = json::array();
  for (double gamma : gammas) {
    std::map<std::size_t, double> med;
    for (std::size_t n : sizes) {
      std::vector<double> xs;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].gamma == gamma && cells[i].n == n && rep.records[i]["palette"].is_number()) {
          xs.push_back(rep.records[i]["palette"].get<double>());
        }
      }
      json s = summary(xs);
      s["gamma"] = gamma;
      s["n"] = n;
      if (!xs.empty()) med[n] = s["median"].get<double>();
      per_cell.push_back(std::move(s));
    }
    json gr{{"gamma", gamma}};
    if (med.count(sizes.front()) && med.count(sizes.back())) {
      gr["ratio"] = med[sizes.back()] / med[sizes.front()];
    } else {
      gr["ratio"] = nullptr;
    }
    growth.push_back(std::move(gr));
  }
  rep.aggregates = json{{"per_cell", per_cell}, {"growth", growth}};
  rep.partial = std::count(timed_out.begin(), timed_out.end(), 1) > 0;
  rep.verification_failed = std::count(failed.begin(), failed.end(), 1) > 0;
  rep.total_seconds = since(t0);
  return rep;
}

ExperimentReport run_centrality_study(const std::string& network_file, const std::vector<unsigned>& radii,
                                      double fraction, const ExperimentOptions& options) {
  for (unsigned r : radii) {
    if (r < 1) throw ArgumentError("radii must be >= 1");
  }
  if (!(fraction > 0 && fraction <= 1)) throw ArgumentError("fraction must lie in (0, 1]");
  const auto t0 = Clock::now();
  const Graph full = read_edge_list_file(network_file).graph;
  const Subgraph giant = giant_component(full);
  const Graph& g = giant.graph;
  ExperimentReport rep;
  rep.id = "centrality-study";
  const unsigned diam = diameter(g);
  rep.inputs = json{{"network", network_file}, {"radii", radii}, {"fraction", fraction},
                    {"timeout_secs", options.timeout_secs}};
  rep.aggregates = json{{"giant_vertices", g.num_vertices()}, {"giant_edges", g.num_edges()}, {"diameter", diam}};
  rep.columns = {"r", "measure", "jaccard"};
  Progress progress(options.progress);
  const CentralityTable exact = exact_centralities(g, resolve_threads(options.threads));

  for (unsigned r : radii) {
    const auto start = Clock::now();
    const Deadline deadline = Deadline::after_seconds(options.timeout_secs);
    const CentralityTable local = localized_centralities(g, r);
    const bool late = deadline.expired();
    for (Measure m : kAllMeasures) {
      json rec{{"r", r}, {"measure", to_string(m)}};
      if (late) {
        rec["jaccard"] = "--";
      } else {
        rec["jaccard"] = topk_similarity(local, exact, m, fraction);
      }
      rep.records.push_back(std::move(rec));
      rep.seconds.push_back(since(start));
    }
    if (late) rep.partial = true;
    progress.line("centrality r=" + std::to_string(r) + (late ? " timed out" : " done"));
  }
  rep.total_seconds = since(t0);
  return rep;
}

}  // namespace sparsity
