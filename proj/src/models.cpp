#include "sparsity/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "sparsity/errors.hpp"
#include "sparsity/rng.hpp"

namespace sparsity {

namespace {

using nlohmann::json;

struct FamilyName {
  DegreeFamily family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {DegreeFamily::power_law, "power-law"},
    {DegreeFamily::power_law_cutoff, "power-law-cutoff"},
    {DegreeFamily::exponential, "exponential"},
    {DegreeFamily::stretched_exponential, "stretched-exponential"},
    {DegreeFamily::gaussian, "gaussian"},
    {DegreeFamily::log_normal, "log-normal"},
    {DegreeFamily::constant, "constant"},
    {DegreeFamily::explicit_histogram, "explicit-histogram"},
};

std::vector<std::size_t> histogram_of(const Graph& g) {
  std::vector<std::size_t> h(g.max_degree() + 1, 0);
  if (g.num_vertices() == 0) h.clear();
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++h[g.degree(v)];
  return h;
}

GeneratedGraph finish(Graph g, json provenance, GenerationStats stats) {
  stats.degree_histogram = histogram_of(g);
  return {std::move(g), std::move(provenance), std::move(stats)};
}

void require(bool ok, const char* what) {
  if (!ok) throw ArgumentError(what);
}

// Pairs stub list entries (2i, 2i+1) after a uniform shuffle.
struct Matching {
  std::vector<Edge> multiedges;
  std::vector<std::size_t> degrees;
};

Matching match_stubs(std::span<const std::size_t> degrees, std::uint64_t seed) {
  std::size_t total = 0;
  for (std::size_t d : degrees) total += d;
  if (total % 2 != 0) throw ArgumentError("degree sum is odd");
  std::vector<Vertex> stubs;
  stubs.reserve(total);
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    stubs.insert(stubs.end(), degrees[v], static_cast<Vertex>(v));
  }
  CounterRng rng(seed, "configuration/stubs");
  rng.shuffle(std::span<Vertex>(stubs));
  Matching m;
  m.degrees.assign(degrees.size(), 0);
  m.multiedges.reserve(total / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    m.multiedges.push_back({stubs[i], stubs[i + 1]});
    ++m.degrees[stubs[i]];
    ++m.degrees[stubs[i + 1]];
  }
  return m;
}

// Drops loops and duplicates, counting both.
std::vector<Edge> simplify(std::vector<Edge> edges, GenerationStats& stats) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) {
      ++stats.loops_removed;
      continue;
    }
    out.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(out.begin(), out.end());
  const auto before = out.size();
  out.erase(std::unique(out.begin(), out.end()), out.end());
  stats.multi_edges_collapsed += before - out.size();
  return out;
}

std::size_t manhattan(std::size_t side, std::size_t a, std::size_t b) {
  const auto ar = a / side, ac = a % side, br = b / side, bc = b % side;
  return (ar > br ? ar - br : br - ar) + (ac > bc ? ac - bc : bc - ac);
}

std::vector<std::size_t> degrees_of(const json& j, std::size_t n, std::uint64_t seed,
                                    bool* parity_fixed) {
  if (j.is_array()) return j.get<std::vector<std::size_t>>();
  auto seq = sample_degree_sequence(DegreeDistributionSpec::from_json(j), n, seed);
  if (parity_fixed) *parity_fixed = seq.parity_fixed;
  return seq.degrees;
}

}  // namespace

std::string to_string(DegreeFamily f) {
  for (const auto& [family, name] : kFamilies) {
    if (family == f) return name;
  }
  return "unknown";
}

DegreeFamily parse_degree_family(std::string_view text) {
  for (const auto& [family, name] : kFamilies) {
    if (text == name) return family;
  }
  throw ArgumentError("unknown degree distribution family: " + std::string(text));
}

DegreeDistributionSpec DegreeDistributionSpec::power_law(double gamma) {
  DegreeDistributionSpec s;
  s.family = DegreeFamily::power_law;
  s.gamma = gamma;
  return s;
}

DegreeDistributionSpec DegreeDistributionSpec::constant_degree(std::size_t d) {
  DegreeDistributionSpec s;
  s.family = DegreeFamily::constant;
  s.value = d;
  return s;
}

std::vector<double> DegreeDistributionSpec::pmf(std::size_t n) const {
  require(n >= 1, "distribution needs n >= 1");
  std::size_t top = n - 1;
  if (cap != 0) top = std::min(top, cap);
  std::vector<double> f(top + 1, 0.0);
  switch (family) {
    case DegreeFamily::power_law:
    case DegreeFamily::power_law_cutoff:
      require(gamma > 2.0, "power law needs gamma > 2");
      if (family == DegreeFamily::power_law_cutoff) require(lambda > 0, "cutoff needs lambda > 0");
      break;
    case DegreeFamily::exponential:
      require(lambda > 0, "exponential needs lambda > 0");
      break;
    case DegreeFamily::stretched_exponential:
      require(lambda > 0 && beta > 0, "stretched exponential needs lambda, beta > 0");
      break;
    case DegreeFamily::gaussian:
    case DegreeFamily::log_normal:
      require(sigma > 0, "sigma must be positive");
      break;
    case DegreeFamily::constant:
      require(value <= top, "constant degree exceeds the support cap");
      break;
    case DegreeFamily::explicit_histogram:
      for (double w : histogram) require(w >= 0 && std::isfinite(w), "histogram weights must be finite and >= 0");
      break;
  }
  for (std::size_t d = 0; d <= top; ++d) {
    const double x = static_cast<double>(d);
    double w = 0;
    switch (family) {
      case DegreeFamily::power_law:
        w = d == 0 ? 0 : std::pow(x, -gamma);
        break;
      case DegreeFamily::power_law_cutoff:
        w = d == 0 ? 0 : std::pow(x, -gamma) * std::exp(-lambda * x);
        break;
      case DegreeFamily::exponential:
        w = d == 0 ? 0 : std::exp(-lambda * x);
        break;
      case DegreeFamily::stretched_exponential:
        w = d == 0 ? 0 : std::pow(x, beta - 1) * std::exp(-lambda * std::pow(x, beta));
        break;
      case DegreeFamily::gaussian:
        w = d == 0 ? 0 : std::exp(-(x - mu) * (x - mu) / (2 * sigma * sigma));
        break;
      case DegreeFamily::log_normal: {
        if (d == 0) break;
        const double l = std::log(x) - mu;
        w = std::exp(-l * l / (2 * sigma * sigma)) / x;
        break;
      }
      case DegreeFamily::constant:
        w = d == value ? 1 : 0;
        break;
      case DegreeFamily::explicit_histogram:
        w = d < histogram.size() ? histogram[d] : 0;
        break;
    }
    f[d] = w;
  }
  const double total = std::accumulate(f.begin(), f.end(), 0.0);
  if (!(total > 0) || !std::isfinite(total)) {
    throw ArgumentError("degree distribution has no mass on the support");
  }
  for (double& w : f) w /= total;
  const double check = std::accumulate(f.begin(), f.end(), 0.0);
  if (std::abs(check - 1.0) > 1e-9) throw ArgumentError("degree distribution does not normalize");
  return f;
}

double DegreeDistributionSpec::mean(std::size_t n) const {
  const auto f = pmf(n);
  double m = 0;
  for (std::size_t d = 0; d < f.size(); ++d) m += static_cast<double>(d) * f[d];
  return m;
}

json DegreeDistributionSpec::to_json() const {
  json j{{"family", to_string(family)}};
  switch (family) {
    case DegreeFamily::power_law:
      j["gamma"] = gamma;
      break;
    case DegreeFamily::power_law_cutoff:
      j["gamma"] = gamma;
      j["lambda"] = lambda;
      break;
    case DegreeFamily::exponential:
      j["lambda"] = lambda;
      break;
    case DegreeFamily::stretched_exponential:
      j["lambda"] = lambda;
      j["beta"] = beta;
      break;
    case DegreeFamily::gaussian:
    case DegreeFamily::log_normal:
      j["mu"] = mu;
      j["sigma"] = sigma;
      break;
    case DegreeFamily::constant:
      j["value"] = value;
      break;
    case DegreeFamily::explicit_histogram:
      j["histogram"] = histogram;
      break;
  }
  if (cap != 0) j["cap"] = cap;
  return j;
}

DegreeDistributionSpec DegreeDistributionSpec::from_json(const json& j) {
  try {
    DegreeDistributionSpec s;
    s.family = parse_degree_family(j.at("family").get<std::string>());
    s.gamma = j.value("gamma", s.gamma);
    s.lambda = j.value("lambda", s.lambda);
    s.beta = j.value("beta", s.beta);
    s.mu = j.value("mu", s.mu);
    s.sigma = j.value("sigma", s.sigma);
    s.value = j.value("value", s.value);
    s.cap = j.value("cap", s.cap);
    if (j.contains("histogram")) s.histogram = j.at("histogram").get<std::vector<double>>();
    return s;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad degree distribution: ") + e.what());
  }
}

DegreeSequence sample_degree_sequence(const DegreeDistributionSpec& spec, std::size_t n,
                                      std::uint64_t seed) {
  const auto f = spec.pmf(n);
  std::vector<double> cdf(f.size());
  std::partial_sum(f.begin(), f.end(), cdf.begin());
  cdf.back() = 1.0;
  CounterRng rng(seed, "degrees/draws");
  DegreeSequence seq;
  seq.degrees.resize(n);
  std::size_t sum = 0;
  for (auto& d : seq.degrees) {
    const double u = rng.uniform();
    d = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    d = std::min(d, f.size() - 1);
    // skip zero-probability bins that a rounding tie could land on
    while (f[d] == 0 && d > 0) --d;
    sum += d;
  }
  if (sum % 2 != 0) {
    CounterRng fix(seed, "degrees/parity");
    seq.parity_vertex = static_cast<std::size_t>(fix.below(n));
    ++seq.degrees[seq.parity_vertex];
    seq.parity_fixed = true;
  }
  return seq;
}

json GenerationStats::to_json() const {
  json j{{"loops_removed", loops_removed},
         {"multi_edges_collapsed", multi_edges_collapsed},
         {"parity_fixed", parity_fixed},
         {"degree_histogram", degree_histogram}};
  if (local_edges || long_range_arcs) {
    j["local_edges"] = local_edges;
    j["long_range_arcs"] = long_range_arcs;
    j["long_range_edges"] = long_range_edges;
  }
  if (duplicate_picks) j["duplicate_picks"] = duplicate_picks;
  return j;
}

GeneratedGraph configuration_graph(std::span<const std::size_t> degrees, std::uint64_t seed) {
  GenerationStats stats;
  auto m = match_stubs(degrees, seed);
  stats.requested_degrees.assign(degrees.begin(), degrees.end());
  if (m.degrees != stats.requested_degrees) {
    throw std::logic_error("stub matching does not realize the degree sequence");
  }
  stats.multigraph_degrees = std::move(m.degrees);
  auto edges = simplify(std::move(m.multiedges), stats);
  json prov{{"model", "configuration"}, {"n", degrees.size()}, {"seed", seed}};
  return finish(Graph::from_edges(degrees.size(), edges), std::move(prov), std::move(stats));
}

GeneratedGraph household_graph(std::span<const std::size_t> degrees, std::size_t household_size,
                               std::uint64_t seed) {
  require(household_size >= 1, "household size must be >= 1");
  auto base = configuration_graph(degrees, seed);
  const std::size_t s = household_size;
  const std::size_t n = degrees.size();
  GenerationStats stats = std::move(base.stats);
  std::vector<Edge> edges;
  edges.reserve(base.graph.num_edges() + n * s * (s - 1) / 2);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        edges.push_back({static_cast<Vertex>(h * s + a), static_cast<Vertex>(h * s + b)});
      }
    }
  }
  CounterRng rng(seed, "household/endpoints");
  for (const Edge& e : base.graph.edges()) {
    const auto u = static_cast<Vertex>(e.u * s + rng.below(s));
    const auto v = static_cast<Vertex>(e.v * s + rng.below(s));
    edges.push_back({u, v});
  }
  edges = simplify(std::move(edges), stats);
  json prov{{"model", "household"}, {"n", n}, {"household_size", s}, {"seed", seed}};
  return finish(Graph::from_edges(n * s, edges), std::move(prov), std::move(stats));
}

GeneratedGraph chung_lu_graph(std::span<const double> weights, std::uint64_t seed) {
  double m = 0;
  for (double w : weights) {
    require(w >= 0 && std::isfinite(w), "Chung-Lu weights must be finite and >= 0");
    m += w;
  }
  const std::size_t n = weights.size();
  std::vector<Edge> edges;
  if (m > 0) {
    // plain pair loop; weight-sorted skipping would go here for large n
    CounterRng rng(seed, "chung-lu/pairs");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double p = std::min(1.0, weights[i] * weights[j] / m);
        if (rng.uniform() < p) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  json prov{{"model", "chung-lu"}, {"n", n}, {"seed", seed}};
  return finish(Graph::from_edges(n, edges), std::move(prov), {});
}

GeneratedGraph perturbed_graph(const Graph& base, double mu, std::uint64_t seed) {
  require(mu >= 0 && std::isfinite(mu), "mu must be >= 0");
  const std::size_t n = base.num_vertices();
  std::vector<Edge> edges = base.edges();
  GenerationStats stats;
  if (mu > 0 && n >= 2) {
    const double p = std::min(1.0, mu / static_cast<double>(n));
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    CounterRng rng(seed, "perturbed/pairs");
    // walk the pairs (i, j), i < j, in row order by geometric skips
    std::uint64_t k = rng.geometric(p);
    std::size_t row = 0;
    std::uint64_t row_start = 0;
    while (k < pairs) {
      while (k >= row_start + (n - 1 - row)) {
        row_start += n - 1 - row;
        ++row;
      }
      const auto col = row + 1 + static_cast<std::size_t>(k - row_start);
      edges.push_back({static_cast<Vertex>(row), static_cast<Vertex>(col)});
      const std::uint64_t skip = rng.geometric(p);
      if (skip >= pairs) break;
      k += skip + 1;
    }
  }
  const std::size_t before = edges.size();
  Graph g = Graph::from_edges(n, edges, base.labels());
  stats.multi_edges_collapsed = before - g.num_edges();
  json prov{{"model", "perturbed"}, {"n", n}, {"mu", mu}, {"base_edges", base.num_edges()}, {"seed", seed}};
  return finish(std::move(g), std::move(prov), std::move(stats));
}

GeneratedGraph erdos_renyi_graph(std::size_t n, double mu, std::uint64_t seed) {
  auto g = perturbed_graph(Graph::from_edges(n, {}), mu, seed);
  g.provenance = json{{"model", "erdos-renyi"}, {"n", n}, {"mu", mu}, {"seed", seed}};
  return g;
}

double kleinberg_normalization(std::size_t side, std::size_t u) {
  double s = 0;
  for (std::size_t x = 0; x < side * side; ++x) {
    if (x == u) continue;
    const double d = static_cast<double>(manhattan(side, u, x));
    s += 1.0 / (d * d);
  }
  return s;
}

GeneratedGraph kleinberg_grid_graph(std::size_t side, std::uint64_t seed) {
  require(side >= 2, "grid side must be >= 2");
  const std::size_t n = side * side;
  GenerationStats stats;
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const auto v = static_cast<Vertex>(r * side + c);
      if (c + 1 < side) edges.push_back({v, v + 1});
      if (r + 1 < side) edges.push_back({v, static_cast<Vertex>(v + side)});
    }
  }
  stats.local_edges = edges.size();

  CounterRng rng(seed, "kleinberg/long-range");
  std::vector<double> cdf(n);
  std::vector<Edge> arcs;
  arcs.reserve(n);
  for (std::size_t u = 0; u < n; ++u) {
    double acc = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (x != u) {
        const double d = static_cast<double>(manhattan(side, u, x));
        acc += 1.0 / (d * d);
      }
      cdf[x] = acc;
    }
    const double target = rng.uniform() * acc;
    auto x = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), target) - cdf.begin());
    x = std::min(x, n - 1);
    if (x == u) x = x + 1 < n ? x + 1 : x - 1;  // zero-width bin, only on a rounding tie
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(x)});
  }
  stats.long_range_arcs = arcs.size();
  edges.insert(edges.end(), arcs.begin(), arcs.end());
  const std::size_t before = edges.size();
  Graph g = Graph::from_edges(n, edges);
  stats.multi_edges_collapsed = before - g.num_edges();
  stats.long_range_edges = g.num_edges() - stats.local_edges;
  json prov{{"model", "kleinberg"}, {"side", side}, {"p", 1}, {"q", 1}, {"r", 2}, {"seed", seed}};
  json directed = json::array();
  for (const Edge& a : arcs) directed.push_back({a.u, a.v});
  prov["long_range_arcs"] = std::move(directed);
  return finish(std::move(g), std::move(prov), std::move(stats));
}

GeneratedGraph preferential_attachment_graph(const Graph& seed_graph, std::size_t q, std::size_t t,
                                             std::uint64_t seed) {
  if (seed_graph.num_edges() == 0) throw ArgumentError("seed graph has no edges");
  require(q >= 1 && q <= seed_graph.num_vertices(), "q must lie in 1..|V(seed graph)|");
  GenerationStats stats;
  const std::size_t n0 = seed_graph.num_vertices();
  std::vector<Edge> edges = seed_graph.edges();
  std::vector<Vertex> endpoints;
  endpoints.reserve(2 * (edges.size() + q * t));
  for (const Edge& e : edges) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  CounterRng rng(seed, "preferential-attachment/picks");
  std::vector<Vertex> picks;
  for (std::size_t step = 0; step < t; ++step) {
    const std::size_t frozen = endpoints.size();
    const auto v = static_cast<Vertex>(n0 + step);
    picks.clear();
    for (std::size_t k = 0; k < q; ++k) picks.push_back(endpoints[rng.below(frozen)]);
    std::sort(picks.begin(), picks.end());
    const auto unique_end = std::unique(picks.begin(), picks.end());
    stats.duplicate_picks += static_cast<std::size_t>(picks.end() - unique_end);
    picks.erase(unique_end, picks.end());
    for (Vertex u : picks) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  json prov{{"model", "preferential-attachment"}, {"n0", n0}, {"m0", seed_graph.num_edges()},
            {"q", q}, {"t", t}, {"seed", seed}};
  return finish(Graph::from_edges(n0 + t, edges), std::move(prov), std::move(stats));
}

Vertex degree_proportional_pick(const Graph& g, std::uint64_t seed, std::uint64_t trial) {
  if (g.num_edges() == 0) throw ArgumentError("graph has no edges");
  CounterRng rng(seed, stream_id("preferential-attachment/single") ^ mix64(trial));
  std::uint64_t k = rng.below(2 * g.num_edges());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (k < g.degree(v)) return v;
    k -= g.degree(v);
  }
  return static_cast<Vertex>(g.num_vertices() - 1);
}

GeneratedGraph generate_from_spec(const json& spec) {
  try {
    const auto model = spec.at("model").get<std::string>();
    const auto seed = spec.value("seed", std::uint64_t{0});
    const json params = spec.value("params", json::object());
    const auto n = spec.value("n", std::size_t{0});
    GeneratedGraph out;
    bool parity = false;
    if (model == "configuration" || model == "household") {
      const auto degrees = degrees_of(params.at("degrees"), n, seed, &parity);
      out = model == "configuration"
                ? configuration_graph(degrees, seed)
                : household_graph(degrees, params.value("household_size", std::size_t{3}), seed);
    } else if (model == "chung-lu") {
      std::vector<double> w;
      if (params.contains("weights")) {
        w = params.at("weights").get<std::vector<double>>();
      } else {
        for (std::size_t d : degrees_of(params.at("degrees"), n, seed, &parity)) w.push_back(static_cast<double>(d));
      }
      out = chung_lu_graph(w, seed);
    } else if (model == "erdos-renyi") {
      out = erdos_renyi_graph(n, params.at("mu").get<double>(), seed);
    } else if (model == "perturbed") {
      Graph base = params.contains("base_file")
                       ? read_edge_list_file(params.at("base_file").get<std::string>()).graph
                       : Graph::from_edges(n, {});
      out = perturbed_graph(base, params.at("mu").get<double>(), seed);
    } else if (model == "kleinberg") {
      out = kleinberg_grid_graph(params.value("side", n), seed);
    } else if (model == "preferential-attachment") {
      const auto q = params.value("q", std::size_t{1});
      const auto k = params.value("seed_clique", q + 1);
      std::vector<Edge> clique;
      for (Vertex a = 0; a < k; ++a) {
        for (Vertex b = a + 1; b < k; ++b) clique.push_back({a, b});
      }
      const auto t = params.contains("t") ? params.at("t").get<std::size_t>() : (n > k ? n - k : 0);
      out = preferential_attachment_graph(Graph::from_edges(k, clique), q, t, seed);
    } else {
      throw ArgumentError("unknown model: " + model);
    }
    out.stats.parity_fixed = out.stats.parity_fixed || parity;
    out.provenance["spec"] = spec;
    return out;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("bad model spec: ") + e.what());
  }
}

void write_generated(const std::string& path, const GeneratedGraph& g) {
  write_edge_list_file(path, g.graph);
  std::ofstream side(path + ".json");
  if (!side) throw IoError("cannot write " + path + ".json");
  side << json{{"provenance", g.provenance}, {"stats", g.stats.to_json()}}.dump(2) << '\n';
  if (!side) throw IoError("write failed: " + path + ".json");
}

}  // namespace sparsity
