#include "sparsity/augmentation.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <ostream>

#include "sparsity/errors.hpp"

namespace sparsity {

namespace {

bool by_head_tail_length(const Arc& a, const Arc& b) {
  if (a.head != b.head) return a.head < b.head;
  if (a.tail != b.tail) return a.tail < b.tail;
  return a.length < b.length;
}

// Sum of two lengths if it fits the radius.
std::optional<unsigned> bounded_sum(unsigned a, unsigned b, unsigned radius) {
  const std::uint64_t s = std::uint64_t{a} + b;
  if (s > radius) return std::nullopt;
  return static_cast<unsigned>(s);
}

}  // namespace

ArcWeightedDigraph ArcWeightedDigraph::from_arcs(std::size_t n, unsigned radius,
                                                 std::vector<Arc> arcs) {
  if (radius == 0) throw ArgumentError("digraph radius must be positive");
  ArcWeightedDigraph d(n, radius);
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) throw ArgumentError("arc endpoint out of range");
    if (a.tail == a.head) throw ArgumentError("self-arc");
    if (a.length == 0 || a.length > radius) throw ArgumentError("arc length outside 1..radius");
  }
  std::sort(arcs.begin(), arcs.end(), by_head_tail_length);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i].head == arcs[i - 1].head && arcs[i].tail == arcs[i - 1].tail) continue;
    d.in_[arcs[i].head].push_back({arcs[i].tail, arcs[i].length});
  }
  return d;
}

std::size_t ArcWeightedDigraph::num_arcs() const noexcept {
  std::size_t total = 0;
  for (const auto& list : in_) total += list.size();
  return total;
}

std::size_t ArcWeightedDigraph::max_in_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : in_) best = std::max(best, list.size());
  return best;
}

std::optional<unsigned> ArcWeightedDigraph::length(Vertex tail, Vertex head) const noexcept {
  if (head >= in_.size()) return std::nullopt;
  const auto& list = in_[head];
  auto it = std::lower_bound(list.begin(), list.end(), tail,
                             [](const InArc& a, Vertex t) { return a.tail < t; });
  if (it == list.end() || it->tail != tail) return std::nullopt;
  return it->length;
}

std::vector<Arc> ArcWeightedDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(num_arcs());
  for (Vertex h = 0; h < in_.size(); ++h) {
    for (const InArc& a : in_[h]) out.push_back({a.tail, h, a.length});
  }
  std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  return out;
}

std::vector<std::vector<OutArc>> ArcWeightedDigraph::out_lists() const {
  std::vector<std::vector<OutArc>> out(in_.size());
  for (Vertex h = 0; h < in_.size(); ++h) {
    for (const InArc& a : in_[h]) out[a.tail].push_back({h, a.length});
  }
  return out;
}

Graph ArcWeightedDigraph::underlying_graph() const {
  std::vector<Edge> edges;
  edges.reserve(num_arcs());
  for (Vertex h = 0; h < in_.size(); ++h) {
    for (const InArc& a : in_[h]) edges.push_back({a.tail, h});
  }
  return Graph::from_edges(in_.size(), edges);
}

ArcWeightedDigraph degeneracy_orientation(const Graph& g, unsigned radius) {
  const auto order = degeneracy_order(g);
  std::vector<Arc> arcs;
  arcs.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const bool u_later = order.position[e.u] > order.position[e.v];
    arcs.push_back(u_later ? Arc{e.u, e.v, 1} : Arc{e.v, e.u, 1});
  }
  return ArcWeightedDigraph::from_arcs(g.num_vertices(), radius, std::move(arcs));
}

ArcWeightedDigraph augment_round(const ArcWeightedDigraph& d) {
  const std::size_t n = d.num_vertices();
  const unsigned radius = d.radius();
  const auto out = d.out_lists();

  // Input arcs plus transitive closures of every directed 2-path.
  std::vector<Arc> staged = d.arcs();
  for (Vertex mid = 0; mid < n; ++mid) {
    for (const InArc& in : d.in_arcs(mid)) {
      for (const OutArc& next : out[mid]) {
        if (in.tail == next.head) continue;
        if (auto len = bounded_sum(in.length, next.length, radius)) {
          staged.push_back({in.tail, next.head, *len});
        }
      }
    }
  }
  const auto stage = ArcWeightedDigraph::from_arcs(n, radius, std::move(staged));

  // Fraternal completions. Pairs that are already adjacent only tighten the
  // existing arcs; the rest are collected for orientation.
  std::vector<Arc> updates = stage.arcs();
  std::vector<Arc> fresh;  // tail < head, orientation decided below
  for (Vertex w = 0; w < n; ++w) {
    const auto ins = d.in_arcs(w);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      for (std::size_t j = i + 1; j < ins.size(); ++j) {
        const Vertex u = ins[i].tail;  // u < v: in-lists are sorted by tail
        const Vertex v = ins[j].tail;
        auto len = bounded_sum(ins[i].length, ins[j].length, radius);
        if (!len) continue;
        const bool uv = stage.has_arc(u, v);
        const bool vu = stage.has_arc(v, u);
        if (uv) updates.push_back({u, v, *len});
        if (vu) updates.push_back({v, u, *len});
        if (!uv && !vu) fresh.push_back({u, v, *len});
      }
    }
  }

  if (!fresh.empty()) {
    std::sort(fresh.begin(), fresh.end(), [](const Arc& a, const Arc& b) {
      if (a.tail != b.tail) return a.tail < b.tail;
      if (a.head != b.head) return a.head < b.head;
      return a.length < b.length;
    });
    std::vector<Arc> pairs;
    for (const Arc& a : fresh) {
      if (!pairs.empty() && pairs.back().tail == a.tail && pairs.back().head == a.head) continue;
      pairs.push_back(a);
    }
    std::vector<Edge> conflict_edges;
    conflict_edges.reserve(pairs.size());
    for (const Arc& a : pairs) conflict_edges.push_back({a.tail, a.head});
    const auto conflict = Graph::from_edges(n, conflict_edges);
    const auto order = degeneracy_order(conflict);
    for (const Arc& a : pairs) {
      const bool tail_later = order.position[a.tail] > order.position[a.head];
      updates.push_back(tail_later ? a : Arc{a.head, a.tail, a.length});
    }
  }
  return ArcWeightedDigraph::from_arcs(n, radius, std::move(updates));
}

std::optional<unsigned> certified_distance(const ArcWeightedDigraph& d, Vertex u, Vertex v) {
  std::optional<unsigned> best;
  auto consider = [&best](unsigned value) {
    if (!best || value < *best) best = value;
  };
  if (auto l = d.length(u, v)) consider(*l);
  if (auto l = d.length(v, u)) consider(*l);
  const auto a = d.in_arcs(u);
  const auto b = d.in_arcs(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].tail < b[j].tail) {
      ++i;
    } else if (b[j].tail < a[i].tail) {
      ++j;
    } else {
      const std::uint64_t s = std::uint64_t{a[i].length} + b[j].length;
      if (s <= kUnboundedRadius) consider(static_cast<unsigned>(s));
      ++i;
      ++j;
    }
  }
  return best;
}

ExactnessReport check_truncated_exactness(const Graph& g, const ArcWeightedDigraph& d,
                                          std::span<const Vertex> sources) {
  ExactnessReport report;
  std::vector<Vertex> all;
  if (sources.empty()) {
    all.resize(g.num_vertices());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    sources = all;
  }
  for (Vertex s : sources) {
    const auto truth = bfs_within(g, s, d.radius());
    for (const auto& [v, dist] : truth.dist) {
      if (v == s) continue;
      ++report.pairs_checked;
      const auto cert = certified_distance(d, s, v);
      if (!cert || *cert != dist) ++report.mismatches;
    }
    for (const InArc& a : d.in_arcs(s)) {
      const auto dist = truth.distance_to(a.tail);
      if (!dist || a.length < *dist) ++report.unsound_arcs;
    }
  }
  return report;
}

ArcWeightedDigraph build_truncated_digraph(const Graph& g, unsigned radius) {
  if (radius == 0) throw ArgumentError("radius must be at least 1");
  auto d = degeneracy_orientation(g, radius);
  for (unsigned round = 1; round < radius; ++round) {
    auto next = augment_round(d);
    if (next == d) break;
    d = std::move(next);
  }
#ifndef NDEBUG
  std::vector<Vertex> sample;
  for (Vertex v = 0; v < g.num_vertices() && sample.size() < 16; v += 1 + g.num_vertices() / 16) {
    sample.push_back(v);
  }
  [[maybe_unused]] const auto report = check_truncated_exactness(g, d, sample);
  assert(report.mismatches == 0 && report.unsound_arcs == 0);
#endif
  return d;
}

void write_digraph(std::ostream& out, const ArcWeightedDigraph& d, const Graph* labels) {
  for (const Arc& a : d.arcs()) {
    if (labels) {
      out << labels->label(a.tail) << ' ' << labels->label(a.head);
    } else {
      out << a.tail << ' ' << a.head;
    }
    out << ' ' << a.length << '\n';
  }
}

}  // namespace sparsity
