#include "sparsity/counting.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "sparsity/rng.hpp"

namespace sparsity {

std::string to_string(CountMode mode) {
  switch (mode) {
    case CountMode::induced: return "induced";
    case CountMode::subgraph: return "subgraph";
    case CountMode::homomorphism: return "homomorphism";
  }
  return "unknown";
}

CountMode parse_count_mode(std::string_view text) {
  if (text == "induced" || text == "induced-iso") return CountMode::induced;
  if (text == "subgraph" || text == "subgraph-iso") return CountMode::subgraph;
  if (text == "homomorphism" || text == "hom") return CountMode::homomorphism;
  throw ArgumentError("unknown count mode '" + std::string(text) + "'");
}

PatternGraph PatternGraph::from_edges(unsigned h, std::span<const Edge> edges, std::string name) {
  if (h == 0) throw ArgumentError("pattern needs at least one vertex");
  if (h > kMaxPatternSize) throw BudgetError("pattern has more than 10 vertices");
  PatternGraph p;
  p.h_ = h;
  p.adj_.assign(h, 0);
  p.name_ = std::move(name);
  for (const Edge& e : edges) {
    if (e.u >= h || e.v >= h) throw ArgumentError("pattern edge endpoint out of range");
    if (e.u == e.v) throw ArgumentError("pattern has a self-loop");
    p.adj_[e.u] |= 1u << e.v;
    p.adj_[e.v] |= 1u << e.u;
  }
  for (unsigned a = 0; a < h; ++a) {
    for (unsigned b = a + 1; b < h; ++b) {
      if (p.adjacent(a, b)) p.edges_.push_back({a, b});
    }
  }
  return p;
}

PatternGraph PatternGraph::from_graph(const Graph& g, std::string name) {
  const auto edges = g.edges();
  return from_edges(static_cast<unsigned>(g.num_vertices()), edges, std::move(name));
}

PatternGraph PatternGraph::builtin(std::string_view name) {
  const std::string n(name);
  std::vector<Edge> e;
  auto sized = [&](char prefix) -> std::optional<unsigned> {
    if (n.size() < 2 || n[0] != prefix) return std::nullopt;
    unsigned k = 0;
    for (std::size_t i = 1; i < n.size(); ++i) {
      if (n[i] < '0' || n[i] > '9') return std::nullopt;
      k = k * 10 + static_cast<unsigned>(n[i] - '0');
      if (k > 99) return std::nullopt;
    }
    return k;
  };
  if (n == "claw") return builtin("S3");
  if (n == "paw") {
    e = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    return from_edges(4, e, n);
  }
  if (n == "diamond") {
    e = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
    return from_edges(4, e, n);
  }
  if (auto k = sized('K'); k && *k >= 1) {
    for (unsigned a = 0; a < *k; ++a)
      for (unsigned b = a + 1; b < *k; ++b) e.push_back({a, b});
    return from_edges(*k, e, n);
  }
  if (auto k = sized('P'); k && *k >= 1) {
    for (unsigned a = 0; a + 1 < *k; ++a) e.push_back({a, a + 1});
    return from_edges(*k, e, n);
  }
  if (auto k = sized('C'); k && *k >= 3) {
    for (unsigned a = 0; a < *k; ++a) e.push_back({a, (a + 1) % *k});
    return from_edges(*k, e, n);
  }
  if (auto k = sized('S'); k && *k >= 1) {
    for (unsigned a = 1; a <= *k; ++a) e.push_back({0, a});
    return from_edges(*k + 1, e, n);
  }
  throw ArgumentError("unknown built-in pattern '" + n + "'");
}

bool PatternGraph::connected() const noexcept {
  if (h_ == 0) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (unsigned a = 0; a < h_; ++a) {
      if ((frontier >> a) & 1u) next |= adj_[a];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (h_ == 32 ? ~0u : (1u << h_) - 1);
}

std::vector<PatternGraph> all_connected_patterns(unsigned max_h) {
  if (max_h > 6) throw BudgetError("pattern enumeration limited to 6 vertices");
  std::vector<PatternGraph> out;
  for (unsigned h = 1; h <= max_h; ++h) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned a = 0; a < h; ++a)
      for (unsigned b = a + 1; b < h; ++b) pairs.push_back({a, b});
    std::vector<std::vector<unsigned>> pair_index(h, std::vector<unsigned>(h));
    for (unsigned i = 0; i < pairs.size(); ++i) {
      pair_index[pairs[i].first][pairs[i].second] = pair_index[pairs[i].second][pairs[i].first] = i;
    }
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> perm(h);
    std::iota(perm.begin(), perm.end(), 0u);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::uint32_t canon = mask;
      for (const auto& q : perms) {
        std::uint32_t image = 0;
        for (unsigned i = 0; i < pairs.size(); ++i) {
          if ((mask >> i) & 1u) image |= 1u << pair_index[q[pairs[i].first]][q[pairs[i].second]];
        }
        canon = std::min(canon, image);
      }
      if (!seen.insert(canon).second) continue;
      std::vector<Edge> edges;
      std::string name;
      for (unsigned i = 0; i < pairs.size(); ++i) {
        if ((canon >> i) & 1u) {
          edges.push_back({pairs[i].first, pairs[i].second});
          if (!name.empty()) name += ',';
          name += std::to_string(pairs[i].first) + '-' + std::to_string(pairs[i].second);
        }
      }
      if (name.empty()) name = "K1";
      auto p = PatternGraph::from_edges(h, edges, name);
      if (p.connected()) out.push_back(std::move(p));
    }
  }
  return out;
}

std::uint64_t automorphism_count(const PatternGraph& h) {
  if (h.size() > kMaxPatternSize) throw BudgetError("automorphism search limited to 10 vertices");
  std::vector<unsigned> perm(h.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : h.edges()) {
      if (!h.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

using Key = std::uint64_t;
using Count = std::uint64_t;
using Table = std::vector<std::pair<Key, Count>>;

constexpr unsigned kFieldBits = 6;
constexpr Key kFieldMask = 63;
constexpr Key kInternal = 63;
constexpr unsigned kMaxDepth = 62;

Count add_checked(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("count overflows 64 bits");
  return r;
}

Count mul_checked(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("count overflows 64 bits");
  return r;
}

void normalize(Table& t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (w > 0 && t[w - 1].first == t[r].first) {
      t[w - 1].second = add_checked(t[w - 1].second, t[r].second);
    } else {
      t[w++] = t[r];
    }
  }
  t.resize(w);
}

Count lookup(const Table& t, Key k) {
  auto it = std::lower_bound(t.begin(), t.end(), k, [](const auto& e, Key x) { return e.first < x; });
  return it != t.end() && it->first == k ? it->second : 0;
}

class PatternDp {
 public:
  PatternDp(const PatternGraph& h, const Graph& g, const TreedepthForest& f, CountMode mode)
      : h_(h), g_(g), f_(f), mode_(mode), hs_(h.size()) {
    if (hs_ == 0 || hs_ > kMaxPatternSize) throw ArgumentError("pattern size outside 1..10");
    if (f.host_size() != g.num_vertices() || f.domain().size() != g.num_vertices()) {
      throw ArgumentError("forest must cover every vertex of the graph");
    }
    if (f.depth() > kMaxDepth) throw ArgumentError("forest deeper than 62 levels");
    if (!f.satisfies_closure(g)) throw ArgumentError("forest closure does not contain the graph");
    for (unsigned a = 0; a < hs_; ++a) full_ |= kInternal << (kFieldBits * a);
  }

  static unsigned state(Key k, unsigned a) { return static_cast<unsigned>((k >> (kFieldBits * a)) & kFieldMask); }

  // Bits of pattern vertices in W, and of those internal.
  std::pair<std::uint32_t, std::uint32_t> masks(Key k) const {
    std::uint32_t w = 0, in = 0;
    for (unsigned a = 0; a < hs_; ++a) {
      const unsigned s = state(k, a);
      if (s != 0) w |= 1u << a;
      if (s == kInternal) in |= 1u << a;
    }
    return {w, in};
  }

  Key positioned_part(Key k) const {
    Key out = k;
    for (unsigned a = 0; a < hs_; ++a) {
      if (state(k, a) == kInternal) out &= ~(kFieldMask << (kFieldBits * a));
    }
    return out;
  }

  // All valid partial maps of H onto the root path of length `depth`.
  Table leaf_table(unsigned depth) const {
    Table out;
    std::vector<unsigned> pos(hs_, 0);
    auto compatible = [&](unsigned a) {
      const unsigned pa = pos[a];
      for (unsigned b = 0; b < a; ++b) {
        const unsigned pb = pos[b];
        if (pb == 0) continue;
        const bool same = pa == pb;
        const bool g_adj = !same && ((path_adj_[std::max(pa, pb) - 1] >> (std::min(pa, pb) - 1)) & 1u);
        if (h_.adjacent(a, b)) {
          if (!g_adj) return false;
        } else if (mode_ == CountMode::induced) {
          if (same || g_adj) return false;
        } else if (mode_ == CountMode::subgraph) {
          if (same) return false;
        }
      }
      return true;
    };
    auto recurse = [&](auto&& self, unsigned a, Key key) -> void {
      if (a == hs_) {
        out.push_back({key, 1});
        return;
      }
      for (unsigned p = 0; p <= depth; ++p) {
        pos[a] = p;
        if (p == 0 || compatible(a)) self(self, a + 1, key | (Key{p} << (kFieldBits * a)));
      }
      pos[a] = 0;
    };
    recurse(recurse, 0, 0);
    normalize(out);
    return out;
  }

  // Vertices at `depth` become internal; entries where such a vertex has an
  // H-neighbour outside W are dropped.
  std::optional<Key> forget_key(Key k, unsigned depth) const {
    const auto [w, in] = masks(k);
    (void)in;
    Key out = k;
    for (unsigned a = 0; a < hs_; ++a) {
      if (state(k, a) != depth) continue;
      if ((h_.neighbor_mask(a) & ~w) != 0) return std::nullopt;
      out |= kInternal << (kFieldBits * a);
    }
    return out;
  }

  Table forget(const Table& t, unsigned depth) const {
    Table out;
    out.reserve(t.size());
    for (const auto& [k, c] : t) {
      if (auto nk = forget_key(k, depth)) out.push_back({*nk, c});
    }
    normalize(out);
    return out;
  }

  struct Grouped {
    std::unordered_map<Key, std::vector<std::size_t>> by_boundary;
    std::vector<std::uint32_t> internal;
  };

  Grouped group(const Table& t) const {
    Grouped gr;
    gr.internal.resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      gr.internal[i] = masks(t[i].first).second;
      gr.by_boundary[positioned_part(t[i].first)].push_back(i);
    }
    return gr;
  }

  Table join(const Table& a, const Table& b) const {
    const Table& small = a.size() <= b.size() ? a : b;
    const Table& large = a.size() <= b.size() ? b : a;
    const auto gr = group(small);
    Table out;
    for (const auto& [k, c] : large) {
      auto it = gr.by_boundary.find(positioned_part(k));
      if (it == gr.by_boundary.end()) continue;
      const std::uint32_t in = masks(k).second;
      for (std::size_t j : it->second) {
        if (gr.internal[j] & in) continue;
        out.push_back({k | small[j].first, mul_checked(c, small[j].second)});
      }
    }
    normalize(out);
    return out;
  }

  void note(const Table& t, bool leaf) {
    if (!trace_) return;
    ++trace_->nodes;
    trace_->max_table_size = std::max(trace_->max_table_size, t.size());
    trace_->total_entries += t.size();
    trace_->max_full_entry = std::max(trace_->max_full_entry, lookup(t, full_));
    if (leaf) {
      for (const auto& [k, c] : t) {
        if (masks(k).second != 0) trace_->leaves_boundary_only = false;
      }
    }
  }

  // Post-order pass. Optionally keeps every vertex table for the profile.
  Count run(bool keep_tables, CountTrace* trace) {
    trace_ = trace;
    const std::size_t n = g_.num_vertices();
    children_ = f_.children();
    roots_ = f_.roots();
    if (keep_tables) tables_.assign(n, {});

    struct Frame {
      Vertex v;
      std::size_t next = 0;
      std::optional<Table> acc;
    };
    std::optional<Table> top;
    std::vector<Frame> stack;
    std::vector<Vertex> path;
    path_adj_.clear();

    auto push = [&](Vertex v) {
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < path.size(); ++j) {
        if (g_.has_edge(path[j], v)) mask |= std::uint64_t{1} << j;
      }
      path.push_back(v);
      path_adj_.push_back(mask);
      stack.push_back({v, 0, std::nullopt});
    };
    auto absorb = [](std::optional<Table>& acc, Table t, const PatternDp& self) {
      if (!acc) {
        acc = std::move(t);
      } else {
        acc = self.join(*acc, t);
      }
    };

    for (Vertex r : roots_) {
      push(r);
      while (!stack.empty()) {
        Frame& fr = stack.back();
        const auto& kids = children_[fr.v];
        if (fr.next < kids.size()) {
          push(kids[fr.next++]);
          continue;
        }
        const unsigned depth = static_cast<unsigned>(path.size());
        const bool leaf = kids.empty();
        Table t = leaf ? leaf_table(depth) : std::move(*fr.acc);
        note(t, leaf);
        Table up = forget(t, depth);
        if (keep_tables) tables_[fr.v] = std::move(t);
        stack.pop_back();
        path.pop_back();
        path_adj_.pop_back();
        if (stack.empty()) {
          absorb(top, std::move(up), *this);
        } else {
          absorb(stack.back().acc, std::move(up), *this);
        }
      }
    }
    return top ? lookup(*top, full_) : 0;
  }

  // Outside weights: for a node with child tables (forgotten) fg and
  // outside table `out_parent` over the joined keys, the outside table of
  // each fg[i] over its own keys.
  std::vector<Table> split_outside(const std::vector<Table>& fg, const Table& out_parent) const {
    const std::size_t m = fg.size();
    std::vector<Table> result(m);
    if (m == 1) {
      for (const auto& [k, c] : fg[0]) {
        if (Count w = lookup(out_parent, k)) result[0].push_back({k, w});
      }
      return result;
    }
    std::vector<std::optional<Table>> prefix(m + 1), suffix(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      prefix[i + 1] = prefix[i] ? join(*prefix[i], fg[i]) : fg[i];
    }
    for (std::size_t i = m; i-- > 0;) {
      suffix[i] = suffix[i + 1] ? join(fg[i], *suffix[i + 1]) : fg[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
      Table others;
      if (prefix[i] && suffix[i + 1]) {
        others = join(*prefix[i], *suffix[i + 1]);
      } else {
        others = prefix[i] ? *prefix[i] : *suffix[i + 1];
      }
      const auto gr = group(others);
      for (const auto& [k, c] : fg[i]) {
        auto it = gr.by_boundary.find(positioned_part(k));
        if (it == gr.by_boundary.end()) continue;
        const std::uint32_t in = masks(k).second;
        Count w = 0;
        for (std::size_t j : it->second) {
          if (gr.internal[j] & in) continue;
          if (Count o = lookup(out_parent, k | others[j].first)) {
            w = add_checked(w, mul_checked(o, others[j].second));
          }
        }
        if (w) result[i].push_back({k, w});
      }
    }
    return result;
  }

  std::vector<std::vector<Count>> profile() {
    const std::size_t n = g_.num_vertices();
    run(true, nullptr);
    std::vector<std::vector<Count>> prof(n, std::vector<Count>(hs_, 0));

    // Top-down over (node, outside table); node kNoVertex is the virtual root.
    struct Item {
      Vertex v;
      Table outside;
    };
    std::vector<Item> work;
    work.push_back({kNoVertex, Table{{full_, 1}}});
    while (!work.empty()) {
      Item item = std::move(work.back());
      work.pop_back();
      const auto& kids = item.v == kNoVertex ? roots_ : children_[item.v];
      if (kids.empty()) continue;
      const unsigned child_depth = item.v == kNoVertex ? 1 : f_.level(item.v) + 1;
      std::vector<Table> fg;
      fg.reserve(kids.size());
      for (Vertex c : kids) fg.push_back(forget(tables_[c], child_depth));
      auto outs = split_outside(fg, item.outside);
      for (std::size_t i = 0; i < kids.size(); ++i) {
        const Vertex c = kids[i];
        Table out_c;
        for (const auto& [k, cnt] : tables_[c]) {
          auto fk = forget_key(k, child_depth);
          if (!fk) continue;
          if (Count w = lookup(outs[i], *fk)) out_c.push_back({k, w});
        }
        for (const auto& [k, w] : out_c) {
          const Count inside = lookup(tables_[c], k);
          for (unsigned a = 0; a < hs_; ++a) {
            if (state(k, a) == child_depth) prof[c][a] = add_checked(prof[c][a], mul_checked(inside, w));
          }
        }
        work.push_back({c, std::move(out_c)});
      }
    }
    return prof;
  }

 private:
  const PatternGraph& h_;
  const Graph& g_;
  const TreedepthForest& f_;
  CountMode mode_;
  unsigned hs_;
  Key full_ = 0;
  CountTrace* trace_ = nullptr;
  std::vector<std::uint64_t> path_adj_;  // bit j: path position j+1 adjacent
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> roots_;
  std::vector<Table> tables_;
};

struct SubsetHash {
  std::size_t operator()(const std::vector<Color>& s) const noexcept {
    std::uint64_t h = 0x1234567;
    for (Color c : s) h = mix64(h ^ c);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::uint64_t count_on_treedepth(const PatternGraph& h, const Graph& g, const TreedepthForest& forest,
                                 CountMode mode, CountTrace* trace) {
  PatternDp dp(h, g, forest, mode);
  if (trace) *trace = {};
  return dp.run(false, trace);
}

std::vector<std::vector<std::uint64_t>> pattern_vertex_profile(const PatternGraph& h, const Graph& g,
                                                               const TreedepthForest& forest,
                                                               CountMode mode) {
  PatternDp dp(h, g, forest, mode);
  return dp.profile();
}

GlobalCount count_global(const PatternGraph& h, const Graph& g, const LtdColoring& coloring,
                         CountMode mode, const CountOptions& options) {
  const unsigned hs = h.size();
  if (hs == 0) throw ArgumentError("empty pattern");
  if (!h.connected()) {
    throw ArgumentError("pattern is disconnected; count each component separately and combine");
  }
  if (coloring.p <= hs) throw ArgumentError("coloring parameter p must exceed the pattern size");
  if (coloring.verified_up_to < hs || coloring.sampled) {
    throw ArgumentError("coloring is not exhaustively verified up to the pattern size");
  }
  if (coloring.colors.size() != g.num_vertices()) throw ArgumentError("coloring size mismatch");

  GlobalCount result;
  result.mode = mode;
  result.automorphisms = automorphism_count(h);
  const auto classes = coloring.classes();
  std::vector<Color> live;
  for (Color c = 0; c < classes.size(); ++c) {
    if (!classes[c].empty()) live.push_back(c);
  }
  result.colors_used = static_cast<unsigned>(live.size());

  std::vector<std::vector<Color>> subsets;
  for (unsigned size = 1; size <= std::min<std::size_t>(hs, live.size()); ++size) {
    std::vector<unsigned> idx(size);
    std::iota(idx.begin(), idx.end(), 0u);
    while (true) {
      std::vector<Color> s(size);
      for (unsigned i = 0; i < size; ++i) s[i] = live[idx[i]];
      subsets.push_back(std::move(s));
      unsigned i = size;
      while (i > 0 && idx[i - 1] == live.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (unsigned j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  result.subsets_evaluated = subsets.size();

  std::vector<Count> raw(subsets.size(), 0);
  parallel_for(subsets.size(), resolve_threads(options.threads), [&](unsigned, std::size_t i) {
    if ((i & 63) == 0) options.deadline.check();
    const auto& s = subsets[i];
    std::vector<Vertex> members;
    for (Color c : s) members.insert(members.end(), classes[c].begin(), classes[c].end());
    if (mode != CountMode::homomorphism && members.size() < hs) return;
    const auto sub = induced_subgraph(g, members);
    std::vector<Color> local(sub.to_parent.size());
    for (std::size_t v = 0; v < local.size(); ++v) {
      local[v] = static_cast<Color>(std::lower_bound(s.begin(), s.end(), coloring.colors[sub.to_parent[v]]) - s.begin());
    }
    LtdColoring lc;
    lc.p = coloring.p;
    lc.colors = std::move(local);
    lc.palette_size = static_cast<unsigned>(s.size());
    std::vector<Color> all(s.size());
    std::iota(all.begin(), all.end(), Color{0});
    const auto forest = extract_treedepth_forest(sub.graph, lc, all);
    raw[i] = count_on_treedepth(h, sub.graph, forest, mode);
  });

  std::unordered_map<std::vector<Color>, std::size_t, SubsetHash> index;
  index.reserve(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) index.emplace(subsets[i], i);

  __extension__ using int128 = __int128;
  int128 total = 0;
  for (const auto& c : subsets) {
    int128 exact = 0;
    const unsigned k = static_cast<unsigned>(c.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<Color> s;
      for (unsigned b = 0; b < k; ++b) {
        if ((mask >> b) & 1u) s.push_back(c[b]);
      }
      const int128 r = raw[index.at(s)];
      exact += ((k - static_cast<unsigned>(s.size())) % 2 == 0) ? r : -r;
    }
    total += exact;
  }
  if (total < 0 || total > static_cast<int128>(std::numeric_limits<Count>::max())) {
    throw Error("inclusion-exclusion total out of range");
  }
  result.maps = static_cast<Count>(total);
  return result;
}

std::uint64_t brute_force_count(const PatternGraph& h, const Graph& g, CountMode mode,
                                const BruteForceBudget& budget) {
  const unsigned hs = h.size();
  if (hs == 0) throw ArgumentError("empty pattern");
  if (hs > budget.max_pattern || g.num_vertices() > budget.max_vertices) {
    throw BudgetError("brute-force count outside its budget");
  }
  // Visit pattern vertices so that each has an earlier neighbour when possible.
  std::vector<unsigned> order;
  std::vector<int> anchor;  // earlier neighbour in the order, or -1
  std::uint32_t placed = 0;
  while (order.size() < hs) {
    unsigned pick = hs;
    for (unsigned a = 0; a < hs && pick == hs; ++a) {
      if (!((placed >> a) & 1u) && (h.neighbor_mask(a) & placed)) pick = a;
    }
    if (pick == hs) {
      for (unsigned a = 0; a < hs; ++a) {
        if (!((placed >> a) & 1u)) {
          pick = a;
          break;
        }
      }
    }
    int anc = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (h.adjacent(pick, order[i])) {
        anc = static_cast<int>(i);
        break;
      }
    }
    order.push_back(pick);
    anchor.push_back(anc);
    placed |= 1u << pick;
  }

  std::vector<Vertex> image(hs, kNoVertex);
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), Vertex{0});
  Count total = 0;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == hs) {
      total = add_checked(total, 1);
      return;
    }
    const unsigned a = order[depth];
    std::span<const Vertex> candidates =
        anchor[depth] >= 0 ? g.neighbors(image[order[static_cast<std::size_t>(anchor[depth])]])
                           : std::span<const Vertex>(all);
    for (Vertex x : candidates) {
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const unsigned b = order[i];
        const Vertex y = image[b];
        const bool same = x == y;
        const bool adj = !same && g.has_edge(x, y);
        if (h.adjacent(a, b)) {
          ok = adj;
        } else if (mode == CountMode::induced) {
          ok = !same && !adj;
        } else if (mode == CountMode::subgraph) {
          ok = !same;
        }
      }
      if (!ok) continue;
      image[a] = x;
      self(self, depth + 1);
    }
    image[a] = kNoVertex;
  };
  recurse(recurse, 0);
  return total;
}

}  // namespace sparsity
