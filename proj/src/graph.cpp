#include "sparsity/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "sparsity/errors.hpp"

namespace sparsity {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw ArgumentError("label table size does not match vertex count");
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw ArgumentError("edge endpoint out of range");
    if (e.u == e.v) continue;
    normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : normalized) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * normalized.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : normalized) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.labels_ = std::move(labels);
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> Graph::find_label(const std::string& name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == name) return static_cast<Vertex>(i);
  }
  return std::nullopt;
}

ParsedGraph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  ParsedGraph result;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError(line_no, "expected two vertex tokens");
    }
    const Vertex u = intern(a);
    const Vertex v = intern(b);
    if (u == v) {
      ++result.self_loops;
      continue;
    }
    edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  const std::size_t raw = edges.size();
  const std::size_t n = labels.size();
  result.graph = Graph::from_edges(n, edges, std::move(labels));
  result.duplicate_edges = raw - result.graph.num_edges();
  return result;
}

ParsedGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

ParsedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_edge_list(out, g);
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyOrder result;
  result.order.reserve(n);
  result.position.assign(n, 0);

  std::vector<std::size_t> remaining(n);
  std::vector<bool> removed(n, false);
  using Entry = std::pair<std::size_t, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (Vertex v = 0; v < n; ++v) {
    remaining[v] = g.degree(v);
    queue.emplace(remaining[v], v);
  }
  while (!queue.empty()) {
    auto [deg, v] = queue.top();
    queue.pop();
    if (removed[v] || deg != remaining[v]) continue;
    removed[v] = true;
    result.position[v] = result.order.size();
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, deg);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) queue.emplace(--remaining[w], w);
    }
  }
  return result;
}

std::optional<unsigned> DistanceMap::distance_to(Vertex v) const {
  auto it = dist.find(v);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

DistanceMap bfs_within(const Graph& g, Vertex source, unsigned radius) {
  if (source >= g.num_vertices()) throw ArgumentError("bfs source out of range");
  DistanceMap result{source, radius, {}};
  result.dist.emplace(source, 0);
  std::vector<Vertex> frontier{source};
  for (unsigned d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        if (result.dist.emplace(w, d).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return result;
}

std::vector<unsigned> bfs_distances(const Graph& g, Vertex source) {
  std::vector<unsigned> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.num_vertices(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  std::unordered_map<Vertex, Vertex> local;
  local.reserve(sub.to_parent.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    local.emplace(sub.to_parent[i], static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_parent[i])) {
      auto it = local.find(w);
      if (it != local.end() && it->second > i) edges.push_back({static_cast<Vertex>(i), it->second});
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(sub.to_parent.size());
    for (Vertex v : sub.to_parent) labels.push_back(g.label(v));
  }
  sub.graph = Graph::from_edges(sub.to_parent.size(), edges, std::move(labels));
  return sub;
}

Subgraph giant_component(const Graph& g) {
  std::size_t count = 0;
  auto comp = connected_components(g, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (auto c : comp) ++sizes[c];
  std::size_t best = 0;
  for (std::size_t c = 1; c < count; ++c) {
    if (sizes[c] > sizes[best]) best = c;
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (comp[v] == best) members.push_back(v);
  }
  return induced_subgraph(g, members);
}

unsigned diameter(const Graph& g) {
  unsigned best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (unsigned d : bfs_distances(g, v)) {
      if (d != kUnreachable) best = std::max(best, d);
    }
  }
  return best;
}

}  // namespace sparsity
