#include "sparsity/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "sparsity/augmentation.hpp"
#include "sparsity/rng.hpp"

namespace sparsity {

LtdColoring LtdColoring::from_colors(unsigned p, std::vector<Color> colors) {
  if (p < 2) throw ArgumentError("p must be at least 2");
  std::unordered_map<Color, Color> dense;
  for (Color& c : colors) {
    auto [it, inserted] = dense.try_emplace(c, static_cast<Color>(dense.size()));
    c = it->second;
  }
  LtdColoring out;
  out.p = p;
  out.colors = std::move(colors);
  out.palette_size = static_cast<unsigned>(dense.size());
  return out;
}

std::vector<std::vector<Vertex>> LtdColoring::classes() const {
  std::vector<std::vector<Vertex>> out(palette_size);
  for (Vertex v = 0; v < colors.size(); ++v) out[colors[v]].push_back(v);
  return out;
}

TreedepthForest TreedepthForest::from_parents(std::size_t host_size, std::vector<Vertex> domain,
                                              const std::vector<Vertex>& parent) {
  if (parent.size() != host_size) throw ArgumentError("parent table size mismatch");
  TreedepthForest f;
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
  f.domain_ = std::move(domain);
  f.parent_.assign(host_size, kNoVertex);
  f.level_.assign(host_size, 0);
  f.in_domain_.assign(host_size, false);
  for (Vertex v : f.domain_) {
    if (v >= host_size) throw ArgumentError("domain vertex out of range");
    f.in_domain_[v] = true;
  }
  for (Vertex v : f.domain_) {
    const Vertex p = parent[v];
    if (p != kNoVertex && (p >= host_size || !f.in_domain_[p])) {
      throw ArgumentError("parent outside the forest domain");
    }
    f.parent_[v] = p;
  }
  // Levels by walking up; a walk longer than the domain means a cycle.
  for (Vertex v : f.domain_) {
    std::vector<Vertex> path;
    Vertex x = v;
    while (x != kNoVertex && f.level_[x] == 0) {
      path.push_back(x);
      if (path.size() > f.domain_.size()) throw ArgumentError("parent structure has a cycle");
      x = f.parent_[x];
    }
    unsigned base = x == kNoVertex ? 0 : f.level_[x];
    for (auto it = path.rbegin(); it != path.rend(); ++it) f.level_[*it] = ++base;
    f.depth_ = std::max(f.depth_, base);
  }
  return f;
}

std::vector<Vertex> TreedepthForest::roots() const {
  std::vector<Vertex> out;
  for (Vertex v : domain_) {
    if (parent_[v] == kNoVertex) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> TreedepthForest::children() const {
  std::vector<std::vector<Vertex>> out(parent_.size());
  for (Vertex v : domain_) {
    if (parent_[v] != kNoVertex) out[parent_[v]].push_back(v);
  }
  return out;
}

bool TreedepthForest::is_ancestor(Vertex ancestor, Vertex v) const noexcept {
  if (!contains(ancestor) || !contains(v)) return false;
  while (v != kNoVertex && level_[v] > level_[ancestor]) v = parent_[v];
  return v == ancestor;
}

bool TreedepthForest::satisfies_closure(const Graph& g) const {
  if (g.num_vertices() != parent_.size()) return false;
  for (Vertex v : domain_) {
    for (Vertex w : g.neighbors(v)) {
      if (w < v || !contains(w)) continue;
      if (!is_ancestor(v, w) && !is_ancestor(w, v)) return false;
    }
  }
  return true;
}

namespace {

std::string describe_violation(const std::vector<Vertex>& component) {
  std::string s = "no color occurs exactly once in component {";
  for (std::size_t i = 0; i < component.size() && i < 12; ++i) {
    if (i) s += ',';
    s += std::to_string(component[i]);
  }
  if (component.size() > 12) s += ",...";
  return s + "}";
}

}  // namespace

CenteredViolation::CenteredViolation(std::vector<Vertex> component, std::vector<Color> subset)
    : Error(describe_violation(component)), component_(std::move(component)), subset_(std::move(subset)) {}

namespace {

// Reusable scratch for repeated centered extractions over one coloring.
class Extractor {
 public:
  Extractor(const Graph& g, const std::vector<Color>& colors,
            const std::vector<std::vector<Vertex>>& classes)
      : g_(g),
        colors_(colors),
        classes_(classes),
        active_(g.num_vertices(), 0),
        visited_(g.num_vertices(), 0),
        count_(classes.size(), 0) {}

  struct Outcome {
    bool ok = true;
    unsigned depth = 0;
    std::vector<Vertex> violation;
  };

  // `subset` must be sorted. When `parent`/`level` are given they receive
  // the forest (host indexing) for the subset's vertices.
  Outcome run(std::span<const Color> subset, std::vector<Vertex>* parent = nullptr,
              std::vector<unsigned>* level = nullptr) {
    Outcome out;
    ++epoch_;
    pool_.clear();
    tasks_.clear();
    std::size_t total = 0;
    for (Color c : subset) {
      for (Vertex v : classes_[c]) active_[v] = epoch_;
      total += classes_[c].size();
    }
    pool_.reserve(total);
    seeds_.clear();
    for (Color c : subset) seeds_.insert(seeds_.end(), classes_[c].begin(), classes_[c].end());
    split(0, seeds_.size(), /*from_seeds=*/true, kNoVertex, 1);

    while (!tasks_.empty()) {
      const Task t = tasks_.back();
      tasks_.pop_back();
      out.depth = std::max(out.depth, t.level);
      Vertex root = kNoVertex;
      if (t.end - t.begin == 1) {
        root = pool_[t.begin];
      } else {
        for (std::size_t i = t.begin; i < t.end; ++i) ++count_[colors_[pool_[i]]];
        Color best = kNoColor;
        for (Color c : subset) {
          if (count_[c] == 1) {
            best = c;
            break;
          }
        }
        for (std::size_t i = t.begin; i < t.end; ++i) count_[colors_[pool_[i]]] = 0;
        if (best == kNoColor) {
          out.ok = false;
          out.violation.assign(pool_.begin() + static_cast<std::ptrdiff_t>(t.begin),
                               pool_.begin() + static_cast<std::ptrdiff_t>(t.end));
          std::sort(out.violation.begin(), out.violation.end());
          return out;
        }
        for (std::size_t i = t.begin; i < t.end; ++i) {
          if (colors_[pool_[i]] == best) {
            root = pool_[i];
            break;
          }
        }
      }
      if (parent) (*parent)[root] = t.parent;
      if (level) (*level)[root] = t.level;
      active_[root] = 0;
      if (t.end - t.begin > 1) split(t.begin, t.end, false, root, t.level + 1);
    }
    return out;
  }

 private:
  static constexpr Color kNoColor = std::numeric_limits<Color>::max();

  struct Task {
    std::size_t begin, end;
    Vertex parent;
    unsigned level;
  };

  // Breaks the still-active vertices of a range into components, appending
  // each to the pool as a new task.
  void split(std::size_t begin, std::size_t end, bool from_seeds, Vertex parent, unsigned level) {
    ++stamp_;
    for (std::size_t i = begin; i < end; ++i) {
      const Vertex s = from_seeds ? seeds_[i] : pool_[i];
      if (active_[s] != epoch_ || visited_[s] == stamp_) continue;
      const std::size_t start = pool_.size();
      visited_[s] = stamp_;
      pool_.push_back(s);
      for (std::size_t head = start; head < pool_.size(); ++head) {
        for (Vertex w : g_.neighbors(pool_[head])) {
          if (active_[w] == epoch_ && visited_[w] != stamp_) {
            visited_[w] = stamp_;
            pool_.push_back(w);
          }
        }
      }
      tasks_.push_back({start, pool_.size(), parent, level});
    }
  }

  const Graph& g_;
  const std::vector<Color>& colors_;
  const std::vector<std::vector<Vertex>>& classes_;
  std::vector<std::uint32_t> active_;
  std::vector<std::uint32_t> visited_;
  std::vector<std::uint32_t> count_;
  std::vector<Vertex> pool_;
  std::vector<Vertex> seeds_;
  std::vector<Task> tasks_;
  std::uint32_t epoch_ = 0;
  std::uint32_t stamp_ = 0;
};

void check_coloring_shape(const Graph& g, const LtdColoring& coloring) {
  if (coloring.colors.size() != g.num_vertices()) {
    throw ArgumentError("coloring size does not match the graph");
  }
  for (Color c : coloring.colors) {
    if (c >= coloring.palette_size) throw ArgumentError("color index outside the palette");
  }
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(std::llround(static_cast<double>(r)));
}

// Advances a sorted combination over [0, n) to the next in lex order.
bool next_combination(std::vector<Color>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct LevelTally {
  std::size_t checked = 0;
  unsigned max_depth = 0;
  std::vector<Color> failing;  // lexicographically smallest seen

  void record_failure(const std::vector<Color>& s) {
    if (failing.empty() || s < failing) failing = s;
  }
};

// Subsets of `colors` (the live palette, sorted) of size i that contain
// `required` when it is set. Each unit of work fixes the first element so the
// tally does not depend on thread interleaving.
LevelReport check_level(const Graph& g, const std::vector<Color>& vertex_colors,
                        const std::vector<std::vector<Vertex>>& classes,
                        const std::vector<Color>& colors, unsigned i,
                        std::optional<Color> required, const VerifyOptions& options,
                        bool stop_on_failure, std::vector<Color>& failing) {
  LevelReport report;
  report.i = i;
  std::vector<Color> others;
  for (Color c : colors) {
    if (!required || c != *required) others.push_back(c);
  }
  const unsigned free_slots = required ? i - 1 : i;
  if (free_slots > others.size()) return report;
  const std::size_t budget = options.max_subsets_per_level;
  const std::size_t total = binomial_capped(others.size(), free_slots, budget);
  report.sampled = total > budget;
  report.subsets_total = report.sampled ? binomial_capped(others.size(), free_slots,
                                                          std::numeric_limits<std::size_t>::max() / 2)
                                        : total;

  auto make_subset = [&](const std::vector<Color>& picks) {
    std::vector<Color> s;
    s.reserve(i);
    for (Color idx : picks) s.push_back(others[idx]);
    if (required) s.insert(std::upper_bound(s.begin(), s.end(), *required), *required);
    return s;
  };

  const unsigned threads = resolve_threads(options.threads);
  std::vector<LevelTally> tallies(threads);
  std::vector<Extractor> extractors;
  extractors.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) extractors.emplace_back(g, vertex_colors, classes);

  auto check = [&](unsigned worker, const std::vector<Color>& subset) {
    auto outcome = extractors[worker].run(subset);
    auto& tally = tallies[worker];
    ++tally.checked;
    if (!outcome.ok || outcome.depth > i) {
      tally.record_failure(subset);
      return false;
    }
    tally.max_depth = std::max(tally.max_depth, outcome.depth);
    return true;
  };

  if (free_slots == 0) {
    check(0, make_subset({}));
  } else if (report.sampled) {
    // Seeded sample: draw `budget` subsets, each by a partial shuffle.
    const std::uint64_t stream = (std::uint64_t{i} << 32) | (required ? *required + 1u : 0u);
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads * 8, budget));
    parallel_for(chunks, threads, [&](unsigned worker, std::size_t chunk) {
      CounterRng rng(options.sample_seed, stream ^ mix64(chunk));
      std::vector<Color> idx(others.size());
      const std::size_t lo = budget * chunk / chunks, hi = budget * (chunk + 1) / chunks;
      for (std::size_t s = lo; s < hi; ++s) {
        if ((s & 255) == 0) options.deadline.check();
        std::iota(idx.begin(), idx.end(), Color{0});
        for (unsigned k = 0; k < free_slots; ++k) {
          const auto j = k + rng.below(idx.size() - k);
          std::swap(idx[k], idx[j]);
        }
        std::vector<Color> picks(idx.begin(), idx.begin() + free_slots);
        std::sort(picks.begin(), picks.end());
        if (!check(worker, make_subset(picks)) && stop_on_failure) return;
      }
    });
  } else {
    const std::size_t firsts = others.size() - free_slots + 1;
    parallel_for(firsts, threads, [&](unsigned worker, std::size_t first) {
      std::vector<Color> picks(free_slots);
      for (unsigned k = 0; k < free_slots; ++k) picks[k] = static_cast<Color>(first + k);
      std::size_t step = 0;
      do {
        if ((++step & 255) == 0) options.deadline.check();
        if (!check(worker, make_subset(picks)) && stop_on_failure) return;
      } while (next_combination(picks, others.size()) && picks[0] == first);
    });
  }

  for (const auto& t : tallies) {
    report.subsets_checked += t.checked;
    report.max_depth = std::max(report.max_depth, t.max_depth);
    if (!t.failing.empty() && (failing.empty() || t.failing < failing)) failing = t.failing;
  }
  report.pass = std::all_of(tallies.begin(), tallies.end(),
                            [](const LevelTally& t) { return t.failing.empty(); });
  return report;
}

VerificationReport verify_impl(const Graph& g, const std::vector<Color>& vertex_colors,
                               const std::vector<std::vector<Vertex>>& classes, unsigned p,
                               const VerifyOptions& options, bool stop_on_failure) {
  VerificationReport report;
  report.p = p;
  std::vector<Color> live;
  for (Color c = 0; c < classes.size(); ++c) {
    if (!classes[c].empty()) live.push_back(c);
  }
  report.palette = static_cast<unsigned>(live.size());
  for (unsigned i = 1; i < p; ++i) {
    options.deadline.check();
    std::vector<Color> failing;
    auto level = check_level(g, vertex_colors, classes, live, i, std::nullopt, options,
                             stop_on_failure, failing);
    report.sampled = report.sampled || level.sampled;
    if (!level.pass) {
      report.pass = false;
      if (report.failing_subset.empty()) report.failing_subset = failing;
    }
    report.levels.push_back(level);
    if (!report.pass && stop_on_failure) break;
  }
  return report;
}

}  // namespace

TreedepthForest extract_treedepth_forest(const Graph& g, const LtdColoring& coloring,
                                         std::span<const Color> subset) {
  check_coloring_shape(g, coloring);
  std::vector<Color> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() >= coloring.p) throw ArgumentError("color subset must have fewer than p colors");
  for (Color c : sorted) {
    if (c >= coloring.palette_size) throw ArgumentError("color outside the palette");
  }
  const auto classes = coloring.classes();
  Extractor ex(g, coloring.colors, classes);
  std::vector<Vertex> parent(g.num_vertices(), kNoVertex);
  auto outcome = ex.run(sorted, &parent);
  if (!outcome.ok) throw CenteredViolation(std::move(outcome.violation), sorted);
  std::vector<Vertex> domain;
  for (Color c : sorted) domain.insert(domain.end(), classes[c].begin(), classes[c].end());
  return TreedepthForest::from_parents(g.num_vertices(), std::move(domain), parent);
}

std::optional<unsigned> treedepth_upper_bound(const Graph& g, const LtdColoring& coloring) {
  check_coloring_shape(g, coloring);
  const auto classes = coloring.classes();
  std::vector<Color> all(coloring.palette_size);
  std::iota(all.begin(), all.end(), Color{0});
  Extractor ex(g, coloring.colors, classes);
  auto outcome = ex.run(all);
  if (!outcome.ok) return std::nullopt;
  return outcome.depth;
}

VerificationReport verify_ltd_coloring(const Graph& g, const LtdColoring& coloring, unsigned p,
                                       const VerifyOptions& options) {
  check_coloring_shape(g, coloring);
  return verify_impl(g, coloring.colors, coloring.classes(), p, options, false);
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["palette"] = palette;
  j["pass"] = pass;
  j["sampled"] = sampled;
  auto& levels_json = j["per_i"] = nlohmann::json::array();
  for (const auto& l : levels) {
    levels_json.push_back({{"i", l.i},
                           {"subsets_checked", l.subsets_checked},
                           {"subsets_total", l.subsets_total},
                           {"max_depth", l.max_depth},
                           {"pass", l.pass},
                           {"sampled", l.sampled}});
  }
  if (!failing_subset.empty()) j["failing_subset"] = failing_subset;
  return j.dump(2);
}

namespace {

// Greedy coloring of the vertices not in `skip`, visiting vertices in the
// reverse of the degeneracy removal order of g.
Color greedy_reverse_degeneracy(const Graph& g, std::vector<Color>& colors,
                                const std::vector<bool>& skip) {
  const auto order = degeneracy_order(g);
  constexpr Color kUnset = std::numeric_limits<Color>::max();
  std::vector<std::size_t> mark;
  Color palette = 0;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    const Vertex v = *it;
    if (skip[v]) continue;
    const std::size_t stamp = static_cast<std::size_t>(order.order.rend() - it);
    if (mark.size() < palette + 1) mark.resize(palette + 1, 0);
    for (Vertex w : g.neighbors(v)) {
      if (colors[w] != kUnset) mark[colors[w]] = stamp;
    }
    Color c = 0;
    while (c < palette && mark[c] == stamp) ++c;
    colors[v] = c;
    palette = std::max<Color>(palette, c + 1);
  }
  return palette;
}

Graph remove_vertices(const Graph& g, const std::vector<bool>& removed) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!removed[e.u] && !removed[e.v]) edges.push_back(e);
  }
  return Graph::from_edges(g.num_vertices(), edges);
}

// Pairwise class merging with incremental verification. Failures are
// monotone under coarsening, so a pair that failed once is never retried and
// a merged class inherits the failures of both parts.
std::size_t merge_classes(const Graph& g, std::vector<Color>& colors,
                          std::vector<std::vector<Vertex>>& classes, unsigned p,
                          const ColoringOptions& options) {
  const std::size_t k = classes.size();
  std::vector<std::vector<bool>> failed(k, std::vector<bool>(k, false));
  std::vector<Color> live;
  for (Color c = 0; c < k; ++c) {
    if (!classes[c].empty()) live.push_back(c);
  }
  std::size_t attempts = 0;
  std::size_t merges = 0;
  std::vector<std::uint32_t> mark(g.num_vertices(), 0);
  std::uint32_t stamp = 0;

  auto adjacent_classes = [&](Color a, Color b) {
    ++stamp;
    for (Vertex v : classes[a]) mark[v] = stamp;
    for (Vertex v : classes[b]) {
      for (Vertex w : g.neighbors(v)) {
        if (mark[w] == stamp) return true;
      }
    }
    return false;
  };

  bool progress = true;
  while (progress && attempts < options.max_merge_attempts) {
    progress = false;
    std::vector<Color> order = live;
    std::stable_sort(order.begin(), order.end(), [&](Color a, Color b) {
      return classes[a].size() < classes[b].size();
    });
    for (std::size_t x = 0; x < order.size() && !progress; ++x) {
      for (std::size_t y = x + 1; y < order.size() && !progress; ++y) {
        const Color a = order[x], b = order[y];
        if (failed[a][b]) continue;
        if (adjacent_classes(a, b)) {
          failed[a][b] = failed[b][a] = true;
          continue;
        }
        if (attempts >= options.max_merge_attempts) break;
        options.verify.deadline.check();
        ++attempts;
        // Tentatively move a into b, then check every subset containing b.
        const Color keep = std::min(a, b), gone = std::max(a, b);
        for (Vertex v : classes[gone]) colors[v] = keep;
        auto saved_keep = classes[keep];
        auto saved_gone = std::move(classes[gone]);
        classes[gone].clear();
        classes[keep].insert(classes[keep].end(), saved_gone.begin(), saved_gone.end());
        std::sort(classes[keep].begin(), classes[keep].end());
        std::vector<Color> remaining;
        for (Color c : live) {
          if (c != gone) remaining.push_back(c);
        }
        bool ok = true;
        for (unsigned i = 1; i < p && ok; ++i) {
          std::vector<Color> failing;
          ok = check_level(g, colors, classes, remaining, i, keep, options.verify, true, failing).pass;
        }
        if (ok) {
          live = std::move(remaining);
          for (Color c = 0; c < k; ++c) {
            const bool f = failed[keep][c] || failed[gone][c];
            failed[keep][c] = failed[c][keep] = f;
          }
          ++merges;
          progress = true;
        } else {
          classes[keep] = std::move(saved_keep);
          classes[gone] = std::move(saved_gone);
          for (Vertex v : classes[gone]) colors[v] = gone;
          failed[a][b] = failed[b][a] = true;
        }
      }
    }
  }
  return merges;
}

}  // namespace

ColoringRun compute_ltd_coloring_run(const Graph& g, unsigned p, const ColoringOptions& options) {
  if (p < 2) throw ArgumentError("p must be at least 2");
  const std::size_t n = g.num_vertices();
  ColoringRun run;

  std::vector<bool> is_private(n, false);
  if (options.private_high_degree) {
    const double threshold = options.high_degree_threshold.value_or(
        std::sqrt(2.0 * static_cast<double>(g.num_edges())));
    for (Vertex v = 0; v < n; ++v) {
      if (static_cast<double>(g.degree(v)) > threshold) {
        is_private[v] = true;
        ++run.private_vertices;
      }
    }
  }
  // A private color is unique in every subgraph that contains it, so those
  // vertices can be left out of the augmentation altogether.
  const Graph rest = run.private_vertices ? remove_vertices(g, is_private) : g;

  auto d = degeneracy_orientation(rest, kUnboundedRadius);
  unsigned rounds = 0;
  const unsigned target_rounds = p - 1;
  for (unsigned attempt = 0; attempt <= options.max_extra_rounds; ++attempt) {
    while (rounds < target_rounds + attempt) {
      auto next = augment_round(d);
      ++rounds;
      if (next == d) {
        rounds = target_rounds + attempt;
        break;
      }
      d = std::move(next);
    }
    options.verify.deadline.check();
    const Graph augmented = d.underlying_graph();
    constexpr Color kUnset = std::numeric_limits<Color>::max();
    std::vector<Color> colors(n, kUnset);
    const Color greedy_palette = greedy_reverse_degeneracy(augmented, colors, is_private);
    Color next_color = greedy_palette;
    for (Vertex v = 0; v < n; ++v) {
      if (is_private[v]) colors[v] = next_color++;
    }
    std::vector<std::vector<Vertex>> classes(next_color);
    for (Vertex v = 0; v < n; ++v) classes[colors[v]].push_back(v);

    auto report = verify_impl(g, colors, classes, p, options.verify, true);
    if (!report.pass) {
      if (attempt == options.max_extra_rounds) {
        throw ColoringFailure("no verified coloring within the augmentation budget",
                              report.failing_subset);
      }
      continue;
    }
    run.rounds = rounds;
    run.palette_before_merge = next_color;
    if (options.merge_classes) run.merges = merge_classes(g, colors, classes, p, options);

    // Renumber densely, keeping the relative order of surviving classes.
    std::vector<Color> remap(classes.size(), kUnset);
    Color dense = 0;
    for (Color c = 0; c < classes.size(); ++c) {
      if (!classes[c].empty()) remap[c] = dense++;
    }
    for (Color& c : colors) c = remap[c];
    run.coloring.p = p;
    run.coloring.colors = std::move(colors);
    run.coloring.palette_size = dense;
    run.report = verify_ltd_coloring(g, run.coloring, p, options.verify);
    if (!run.report.pass) {
      throw ColoringFailure("merged coloring failed verification", run.report.failing_subset);
    }
    run.coloring.verified_up_to = p - 1;
    run.coloring.sampled = run.report.sampled;
    return run;
  }
  throw ColoringFailure("no verified coloring within the augmentation budget", {});
}

LtdColoring compute_ltd_coloring(const Graph& g, unsigned p, const ColoringOptions& options) {
  return compute_ltd_coloring_run(g, p, options).coloring;
}

void write_coloring(std::ostream& out, const Graph& g, const LtdColoring& coloring) {
  check_coloring_shape(g, coloring);
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << g.label(v) << ' ' << coloring.colors[v] << '\n';
}

}  // namespace sparsity
