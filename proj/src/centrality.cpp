#include "sparsity/centrality.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <cmath>
#include <cstring>
#include <ostream>
#include <set>

#include "sparsity/errors.hpp"
#include "sparsity/parallel.hpp"

namespace sparsity {

namespace {

constexpr unsigned kMaxIndexInDegree = 26;

std::string dist_key(std::span<const unsigned> dist) {
  std::string s(dist.size(), '\0');
  for (std::size_t i = 0; i < dist.size(); ++i) s[i] = static_cast<char>(dist[i]);
  return s;
}

unsigned dist_at(std::string_view dv, std::size_t i) { return static_cast<unsigned char>(dv[i]); }

// Members of in_arcs(v) selected by a bitmask, in list (= vertex) order.
void select(std::span<const InArc> in, std::uint32_t mask, std::vector<Vertex>& subset,
            std::string& dist) {
  subset.clear();
  dist.clear();
  for (std::size_t i = 0; i < in.size(); ++i) {
    if ((mask >> i) & 1u) {
      subset.push_back(in[i].tail);
      dist.push_back(static_cast<char>(in[i].length));
    }
  }
}

Weight sign_of(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

std::string ReachIndex::subset_key(std::span<const Vertex> subset) {
  std::string s(subset.size() * sizeof(Vertex), '\0');
  if (!subset.empty()) std::memcpy(s.data(), subset.data(), s.size());
  return s;
}

std::size_t ReachIndex::num_entries() const noexcept {
  std::size_t total = 0;
  for (const auto& [k, bucket] : table_) total += bucket.size();
  return total;
}

Weight ReachIndex::total_weight() const noexcept {
  Weight total = 0;
  for (const auto& [k, bucket] : table_) {
    for (const auto& [dv, w] : bucket) total += w;
  }
  return total;
}

Weight ReachIndex::entry(std::span<const Vertex> subset, std::span<const unsigned> dist) const {
  auto it = table_.find(subset_key(subset));
  if (it == table_.end()) return 0;
  auto jt = it->second.find(dist_key(dist));
  return jt == it->second.end() ? 0 : jt->second;
}

ReachIndex build_reach_index(const ArcWeightedDigraph& d, std::span<const Weight> alpha) {
  if (alpha.size() != d.num_vertices()) throw ArgumentError("weight vector size mismatch");
  if (d.radius() > kMaxReachRadius) throw ArgumentError("reach index radius above 255");
  for (Weight a : alpha) {
    if (a < 0) throw ArgumentError("weights must be nonnegative");
  }
  ReachIndex idx;
  idx.d_ = d;
  idx.alpha_.assign(alpha.begin(), alpha.end());
  std::vector<Vertex> subset;
  std::string dist;
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    const auto in = d.in_arcs(v);
    if (in.size() > kMaxIndexInDegree) throw BudgetError("in-degree too large for the reach index");
    const std::uint32_t full = (1u << in.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
      select(in, mask, subset, dist);
      idx.table_[ReachIndex::subset_key(subset)][dist] += alpha[v];
    }
  }
  return idx;
}

Weight query_reach(const ReachIndex& idx, Vertex v, std::span<const Vertex> subset,
                   std::span<const unsigned> dist) {
  const auto& d = idx.digraph();
  if (v >= d.num_vertices()) throw ArgumentError("query vertex out of range");
  if (subset.empty()) throw ArgumentError("query subset must be nonempty");
  if (dist.size() != subset.size()) throw ArgumentError("distance vector length mismatch");
  const auto in = d.in_arcs(v);
  // Positions of X within N^-(v); everything else is free to extend X.
  std::uint32_t x_mask = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && subset[i] <= subset[i - 1]) throw ArgumentError("query subset must be sorted");
    auto it = std::lower_bound(in.begin(), in.end(), subset[i],
                               [](const InArc& a, Vertex t) { return a.tail < t; });
    if (it == in.end() || it->tail != subset[i]) {
      throw ArgumentError("query subset is not inside the in-neighbourhood");
    }
    x_mask |= 1u << (it - in.begin());
  }
  const std::uint32_t free = ((1u << in.size()) - 1) & ~x_mask;
  std::vector<Vertex> y;
  std::string ignored;
  Weight total = 0;
  // Enumerate T subset of free, Y = X u T.
  for (std::uint32_t t = free;; t = (t - 1) & free) {
    const std::uint32_t y_mask = x_mask | t;
    select(in, y_mask, y, ignored);
    // Offsets of X's members inside Y.
    std::vector<std::size_t> at;
    at.reserve(subset.size());
    for (std::size_t i = 0, j = 0; i < y.size(); ++i) {
      if (j < subset.size() && y[i] == subset[j]) {
        at.push_back(i);
        ++j;
      }
    }
    const Weight s = sign_of(static_cast<std::size_t>(std::popcount(t)));
    idx.for_each(y, [&](std::string_view dv, Weight w) {
      for (std::size_t i = 0; i < at.size(); ++i) {
        if (dist_at(dv, at[i]) != dist[i]) return;
      }
      total += s * w;
    });
    if (t == 0) break;
  }
  // v's own entry sits at X = N^-(v) with its own distance vector; u != v.
  if (free == 0) {
    bool own = true;
    for (std::size_t i = 0; i < subset.size(); ++i) own = own && in[i].length == dist[i];
    if (own) total -= idx.alpha()[v];
  }
  return total;
}

Weight NeighborhoodSums::ball(Vertex v) const {
  Weight total = 0;
  for (unsigned d = 1; d <= r; ++d) total += at(v, d);
  return total;
}

namespace {

void subset_pass_query(const ReachIndex& idx, Vertex v, NeighborhoodSums& c) {
  const auto in = idx.digraph().in_arcs(v);
  const unsigned r = c.r;
  const std::uint32_t full = (1u << in.size()) - 1;
  std::vector<Vertex> x, y;
  std::string xdist, ydist;
  for (std::uint32_t xm = 1; xm <= full && xm != 0; ++xm) {
    select(in, xm, x, xdist);
    // Distance vectors with nonzero weight are restrictions of stored ones.
    std::set<std::vector<unsigned>> candidates;
    const std::uint32_t free = full & ~xm;
    for (std::uint32_t t = free;; t = (t - 1) & free) {
      select(in, xm | t, y, ydist);
      std::vector<std::size_t> at;
      for (std::size_t i = 0, j = 0; i < y.size(); ++i) {
        if (j < x.size() && y[i] == x[j]) {
          at.push_back(i);
          ++j;
        }
      }
      idx.for_each(y, [&](std::string_view dv, Weight) {
        std::vector<unsigned> restricted(at.size());
        for (std::size_t i = 0; i < at.size(); ++i) restricted[i] = dist_at(dv, at[i]);
        candidates.insert(std::move(restricted));
      });
      if (t == 0) break;
    }
    for (const auto& dbar : candidates) {
      const Weight w = query_reach(idx, v, x, dbar);
      if (w == 0) continue;
      unsigned best = kUnboundedRadius;
      for (std::size_t i = 0; i < x.size(); ++i) {
        best = std::min(best, dbar[i] + static_cast<unsigned char>(xdist[i]));
      }
      if (best <= r) c.at(v, best) += w;
    }
  }
}

void subset_pass_collapsed(const ReachIndex& idx, Vertex v, NeighborhoodSums& c) {
  const auto in = idx.digraph().in_arcs(v);
  const unsigned r = c.r;
  const std::uint32_t full = (1u << in.size()) - 1;
  std::vector<Vertex> y;
  std::string ydist;
  for (std::uint32_t ym = 1; ym <= full && ym != 0; ++ym) {
    select(in, ym, y, ydist);
    const Weight s = sign_of(y.size() - 1);
    idx.for_each(y, [&](std::string_view dv, Weight w) {
      unsigned worst = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        worst = std::max(worst, dist_at(dv, i) + static_cast<unsigned char>(ydist[i]));
      }
      if (worst <= r) c.at(v, worst) += s * w;
    });
  }
}

void subset_pass_pairwise(const ArcWeightedDigraph& d, const std::vector<std::vector<OutArc>>& out,
                          std::span<const Weight> alpha, Vertex v, std::vector<unsigned>& best,
                          std::vector<Vertex>& touched, NeighborhoodSums& c) {
  touched.clear();
  for (const InArc& x : d.in_arcs(v)) {
    for (const OutArc& u : out[x.tail]) {
      const unsigned s = x.length + u.length;
      if (best[u.head] == kUnboundedRadius) touched.push_back(u.head);
      best[u.head] = std::min(best[u.head], s);
    }
  }
  for (Vertex u : touched) {
    if (best[u] <= c.r) c.at(v, best[u]) += alpha[u];
    best[u] = kUnboundedRadius;
  }
}

NeighborhoodSums sums_impl(const ArcWeightedDigraph& d, std::span<const Weight> alpha,
                           SubsetPass pass, const ReachIndex* idx) {
  const std::size_t n = d.num_vertices();
  const unsigned r = d.radius();
  NeighborhoodSums c;
  c.r = r;
  c.n = n;
  c.values.assign(n * (r + 1), 0);

  // Vertices sharing in-neighbours.
  std::vector<std::vector<OutArc>> out;
  std::vector<unsigned> best;
  std::vector<Vertex> touched;
  if (pass == SubsetPass::pairwise) {
    out = d.out_lists();
    best.assign(n, kUnboundedRadius);
  }
  for (Vertex v = 0; v < n; ++v) {
    switch (pass) {
      case SubsetPass::query: subset_pass_query(*idx, v, c); break;
      case SubsetPass::pairwise: subset_pass_pairwise(d, out, alpha, v, best, touched, c); break;
      default: subset_pass_collapsed(*idx, v, c); break;
    }
    // v itself is counted once through X = N^-(v); query_reach already
    // leaves it out.
    const auto in = d.in_arcs(v);
    if (!in.empty() && pass != SubsetPass::query) {
      unsigned self = kUnboundedRadius;
      for (const InArc& a : in) self = std::min(self, 2 * a.length);
      if (self <= r) c.at(v, self) -= alpha[v];
    }
  }
  // Arc corrections, once per adjacent pair.
  for (Vertex v = 0; v < n; ++v) {
    for (const InArc& a : d.in_arcs(v)) {
      const Vertex u = a.tail;
      const auto back = d.length(v, u);
      if (back && u > v) continue;  // both arcs: handled from the smaller tail
      const unsigned len = back ? std::min(a.length, *back) : a.length;
      const auto iu = d.in_arcs(u);
      const auto iv = d.in_arcs(v);
      unsigned shared = kUnboundedRadius;
      bool any = false;
      for (std::size_t i = 0, j = 0; i < iu.size() && j < iv.size();) {
        if (iu[i].tail < iv[j].tail) {
          ++i;
        } else if (iv[j].tail < iu[i].tail) {
          ++j;
        } else {
          any = true;
          shared = std::min(shared, iu[i].length + iv[j].length);
          ++i;
          ++j;
        }
      }
      unsigned target = len;
      if (any) {
        if (shared <= r) {
          c.at(v, shared) -= alpha[u];
          c.at(u, shared) -= alpha[v];
        }
        target = std::min(target, shared);
      }
      c.at(v, target) += alpha[u];
      c.at(u, target) += alpha[v];
    }
  }
  return c;
}

}  // namespace

double reach_index_cost(const ArcWeightedDigraph& d) {
  double total = 0;
  for (Vertex v = 0; v < d.num_vertices(); ++v) total += std::ldexp(1.0, static_cast<int>(d.in_degree(v)));
  return total;
}

NeighborhoodSums neighborhood_sums(const ReachIndex& idx, const NeighborhoodOptions& options) {
  const auto pass = options.subset_pass == SubsetPass::automatic ? SubsetPass::collapsed : options.subset_pass;
  return sums_impl(idx.digraph(), idx.alpha(), pass, &idx);
}

NeighborhoodSums neighborhood_sums(const ArcWeightedDigraph& d, std::span<const Weight> alpha,
                                   const NeighborhoodOptions& options) {
  if (alpha.size() != d.num_vertices()) throw ArgumentError("weight vector size mismatch");
  auto pass = options.subset_pass;
  if (pass == SubsetPass::automatic) {
    pass = reach_index_cost(d) <= options.index_budget ? SubsetPass::collapsed : SubsetPass::pairwise;
  }
  if (pass == SubsetPass::pairwise) {
    for (Weight a : alpha) {
      if (a < 0) throw ArgumentError("weights must be nonnegative");
    }
    return sums_impl(d, alpha, pass, nullptr);
  }
  const auto idx = build_reach_index(d, alpha);
  return sums_impl(d, alpha, pass, &idx);
}

NeighborhoodSums neighborhood_sums(const Graph& g, unsigned r, std::span<const Weight> alpha,
                                   const NeighborhoodOptions& options) {
  if (r == 0) throw ArgumentError("radius must be at least 1");
  if (r > kMaxReachRadius) throw ArgumentError("radius above 255");
  if (alpha.size() != g.num_vertices()) throw ArgumentError("weight vector size mismatch");
  return neighborhood_sums(build_truncated_digraph(g, r), alpha, options);
}

NeighborhoodSums neighborhood_sums_bfs(const Graph& g, unsigned r, std::span<const Weight> alpha) {
  if (alpha.size() != g.num_vertices()) throw ArgumentError("weight vector size mismatch");
  NeighborhoodSums c;
  c.r = r;
  c.n = g.num_vertices();
  c.values.assign(c.n * (r + 1), 0);
  for (Vertex v = 0; v < c.n; ++v) {
    for (const auto& [u, dist] : bfs_within(g, v, r).dist) {
      if (u != v) c.at(v, dist) += alpha[u];
    }
  }
  return c;
}

std::string to_string(Measure m) {
  switch (m) {
    case Measure::closeness: return "closeness";
    case Measure::harmonic: return "harmonic";
    case Measure::lin: return "lin";
  }
  return "unknown";
}

Measure parse_measure(std::string_view text) {
  if (text == "closeness") return Measure::closeness;
  if (text == "harmonic") return Measure::harmonic;
  if (text == "lin") return Measure::lin;
  throw ArgumentError("unknown measure '" + std::string(text) + "'");
}

const std::vector<double>& CentralityTable::values(Measure m) const {
  switch (m) {
    case Measure::closeness: return closeness;
    case Measure::harmonic: return harmonic;
    case Measure::lin: return lin;
  }
  throw ArgumentError("unknown measure");
}

namespace {

// Shared by the localized and exact tables so that saturated radii give
// bit-identical values.
struct Moments {
  std::int64_t reached = 0;   // vertices at distance 1..r
  std::int64_t distance = 0;  // sum of distances
  double harmonic = 0;
};

Moments moments(std::span<const Weight> histogram) {
  Moments m;
  for (std::size_t d = 1; d < histogram.size(); ++d) {
    m.reached += histogram[d];
    m.distance += static_cast<std::int64_t>(d) * histogram[d];
    m.harmonic += static_cast<double>(histogram[d]) / static_cast<double>(d);
  }
  return m;
}

double lin_index(const Moments& m) {
  if (m.distance == 0) return 1.0;
  const double top = static_cast<double>(1 + m.reached);
  return top * top / static_cast<double>(m.distance);
}

// Vertices outside the r-ball are charged r+1 each.
std::int64_t closeness_denominator(const Moments& m, std::size_t n, unsigned r) {
  const auto missing = static_cast<std::int64_t>(n) - 1 - m.reached;
  return m.distance + static_cast<std::int64_t>(r + 1) * missing;
}

void resize(CentralityTable& t, std::size_t n) {
  t.closeness.assign(n, 0);
  t.harmonic.assign(n, 0);
  t.lin.assign(n, 0);
  t.reach.assign(n, 0);
}

}  // namespace

CentralityTable centralities_from_sums(const NeighborhoodSums& sums) {
  CentralityTable t;
  t.radius = sums.r;
  resize(t, sums.n);
  for (Vertex v = 0; v < sums.n; ++v) {
    const auto m = moments({sums.values.data() + static_cast<std::size_t>(v) * (sums.r + 1), sums.r + 1});
    t.harmonic[v] = m.harmonic;
    t.lin[v] = lin_index(m);
    const auto den = closeness_denominator(m, sums.n, sums.r);
    t.closeness[v] = den > 0 ? 1.0 / static_cast<double>(den) : 0.0;
    t.reach[v] = static_cast<std::size_t>(1 + m.reached);
  }
  return t;
}

CentralityTable localized_centralities(const Graph& g, unsigned r) {
  const std::vector<Weight> ones(g.num_vertices(), 1);
  return centralities_from_sums(neighborhood_sums(g, r, ones));
}

CentralityTable exact_centralities(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  CentralityTable t;
  resize(t, n);
  parallel_for(n, resolve_threads(threads), [&](unsigned, std::size_t s) {
    const auto dist = bfs_distances(g, static_cast<Vertex>(s));
    std::vector<Weight> hist(1, 0);
    for (unsigned d : dist) {
      if (d == kUnreachable || d == 0) continue;
      if (hist.size() <= d) hist.resize(d + 1, 0);
      ++hist[d];
    }
    const auto m = moments(hist);
    t.harmonic[s] = m.harmonic;
    t.lin[s] = lin_index(m);
    t.closeness[s] = m.distance > 0 ? 1.0 / static_cast<double>(m.distance) : 0.0;
    t.reach[s] = static_cast<std::size_t>(1 + m.reached);
  });
  return t;
}

std::vector<Vertex> topk_vertices(const CentralityTable& t, Measure m, double fraction) {
  if (!(fraction > 0) || fraction > 1) throw ArgumentError("fraction must lie in (0, 1]");
  const auto& values = t.values(m);
  if (values.size() != t.size()) throw ArgumentError("measure absent from the table");
  std::vector<Vertex> order(values.size());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  const auto k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(values.size()) - 1e-9));
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return values[a] > values[b]; });
  order.resize(std::min(k, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

double topk_similarity(const CentralityTable& a, const CentralityTable& b, Measure m, double fraction) {
  if (a.size() != b.size()) throw ArgumentError("tables cover different vertex sets");
  const auto ta = topk_vertices(a, m, fraction);
  const auto tb = topk_vertices(b, m, fraction);
  std::vector<Vertex> both;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(both));
  const std::size_t uni = ta.size() + tb.size() - both.size();
  return uni == 0 ? 1.0 : static_cast<double>(both.size()) / static_cast<double>(uni);
}

void write_centrality_csv(std::ostream& out, const Graph& g, const CentralityTable& t) {
  out << "vertex,closeness,harmonic,lin,reach\n";
  const auto old = out.precision(17);
  for (Vertex v = 0; v < t.size(); ++v) {
    out << g.label(v) << ',' << t.closeness[v] << ',' << t.harmonic[v] << ',' << t.lin[v] << ','
        << t.reach[v] << '\n';
  }
  out.precision(old);
}

}  // namespace sparsity
