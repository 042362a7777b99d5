#include "hexalloc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>

#include "hexalloc/error.hpp"

namespace hexalloc {
namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t k) { words_[k / 64] |= (std::uint64_t{1} << (k % 64)); }
  void reset(std::size_t k) { words_[k / 64] &= ~(std::uint64_t{1} << (k % 64)); }
  bool test(std::size_t k) const { return (words_[k / 64] >> (k % 64)) & 1U; }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Graph under Zykov transformations. Super vertices keep their original
// position as id; merged-away ids are removed from `alive`.
struct ZykovState {
  std::vector<Bitset> adj;
  Bitset alive;
  std::vector<std::vector<std::size_t>> members;

  explicit ZykovState(const InterferenceGraph& g)
      : adj(g.vertex_count(), Bitset(g.vertex_count())), alive(g.vertex_count()), members(g.vertex_count()) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      alive.set(v);
      members[v].push_back(v);
      for (std::size_t w : g.neighbors(v)) adj[v].set(w);
    }
  }

  std::size_t size() const { return alive.count(); }

  void connect(std::size_t u, std::size_t v) {
    adj[u].set(v);
    adj[v].set(u);
  }

  // Contract v into u.
  void merge(std::size_t u, std::size_t v) {
    adj[v].for_each([&](std::size_t w) {
      adj[w].reset(v);
      adj[w].set(u);
      adj[u].set(w);
    });
    alive.reset(v);
    members[u].insert(members[u].end(), members[v].begin(), members[v].end());
    members[v].clear();
  }
};

std::vector<std::size_t> greedy_clique_in(const std::vector<Bitset>& adj, const Bitset& alive) {
  std::vector<std::size_t> best;
  alive.for_each([&](std::size_t seed) {
    std::vector<std::size_t> clique{seed};
    Bitset cand = adj[seed] & alive;
    while (!cand.none()) {
      std::size_t pick = 0;
      std::size_t pick_degree = 0;
      bool first = true;
      cand.for_each([&](std::size_t v) {
        const std::size_t d = (adj[v] & cand).count();
        if (first || d > pick_degree) {
          pick = v;
          pick_degree = d;
          first = false;
        }
      });
      clique.push_back(pick);
      cand &= adj[pick];
    }
    if (clique.size() > best.size()) best = std::move(clique);
  });
  return best;
}

// DSATUR over alive super vertices; returns color per id (-1 when dead).
std::vector<int> dsatur(const ZykovState& s, int& colors_used) {
  const std::size_t n = s.adj.size();
  std::vector<int> color(n, -1);
  std::vector<Bitset> seen_colors(n, Bitset(n + 1));
  std::vector<std::size_t> saturation(n, 0);
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> order;
  s.alive.for_each([&](std::size_t v) {
    order.push_back(v);
    degree[v] = (s.adj[v] & s.alive).count();
  });
  colors_used = 0;
  for (std::size_t step = 0; step < order.size(); ++step) {
    std::size_t pick = n;
    for (std::size_t v : order) {
      if (color[v] >= 0) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && degree[v] > degree[pick])) {
        pick = v;
      }
    }
    int c = 0;
    while (seen_colors[pick].test(static_cast<std::size_t>(c))) ++c;
    color[pick] = c;
    colors_used = std::max(colors_used, c + 1);
    (s.adj[pick] & s.alive).for_each([&](std::size_t w) {
      if (!seen_colors[w].test(static_cast<std::size_t>(c))) {
        seen_colors[w].set(static_cast<std::size_t>(c));
        ++saturation[w];
      }
    });
  }
  return color;
}

class ZykovSolver {
 public:
  explicit ZykovSolver(const InterferenceGraph& g) : graph_(g), best_colors_(std::numeric_limits<int>::max()) {}

  std::vector<int> solve(SolverStats& stats) {
    ZykovState root(graph_);
    stats.clique_lower_bound = static_cast<int>(greedy_clique_in(root.adj, root.alive).size());
    int ub = 0;
    const auto initial = dsatur(root, ub);
    record(root, initial, ub);
    stats.initial_upper_bound = ub;
    expand(root, stats);
    return best_;
  }

 private:
  void record(const ZykovState& s, const std::vector<int>& super_color, int colors) {
    if (colors >= best_colors_) return;
    best_colors_ = colors;
    best_.assign(graph_.vertex_count(), -1);
    s.alive.for_each([&](std::size_t u) {
      for (std::size_t v : s.members[u]) best_[v] = super_color[u];
    });
  }

  void expand(ZykovState& s, SolverStats& stats) {
    ++stats.nodes;
    const int lb = static_cast<int>(greedy_clique_in(s.adj, s.alive).size());
    if (lb >= best_colors_) return;

    int ub = 0;
    auto heuristic = dsatur(s, ub);
    record(s, heuristic, ub);
    if (lb >= best_colors_) return;

    // Branching pair: non-adjacent, most common neighbors, lowest ids on ties.
    std::size_t bu = 0, bv = 0;
    std::size_t best_common = 0;
    bool found = false;
    s.alive.for_each([&](std::size_t u) {
      s.alive.for_each([&](std::size_t v) {
        if (v <= u || s.adj[u].test(v)) return;
        const std::size_t common = (s.adj[u] & s.adj[v] & s.alive).count();
        if (!found || common > best_common) {
          bu = u;
          bv = v;
          best_common = common;
          found = true;
        }
      });
    });

    if (!found) {
      // Complete graph: one color per super vertex.
      std::vector<int> super_color(s.adj.size(), -1);
      int next = 0;
      s.alive.for_each([&](std::size_t u) { super_color[u] = next++; });
      record(s, super_color, next);
      return;
    }

    {
      ZykovState merged = s;
      merged.merge(bu, bv);
      expand(merged, stats);
    }
    s.connect(bu, bv);
    expand(s, stats);
  }

  const InterferenceGraph& graph_;
  int best_colors_;
  std::vector<int> best_;
};

Coloring canonical(std::span<const CellIndex> order, std::span<const int> raw) {
  Coloring out;
  std::map<int, int> renumber;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto [it, inserted] = renumber.emplace(raw[k], static_cast<int>(renumber.size()));
    out.assignment[order[k]] = it->second;
  }
  out.num_colors = static_cast<int>(renumber.size());
  return out;
}

int positive_mod(int value, int m) { return ((value % m) + m) % m; }

bool try_color(const InterferenceGraph& g, std::vector<int>& color, std::size_t v, int k) {
  if (v == g.vertex_count()) return true;
  for (int c = 0; c < k; ++c) {
    bool clash = false;
    for (std::size_t w : g.neighbors(v)) {
      if (w < v && color[w] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (try_color(g, color, v + 1, k)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

int Coloring::color_of(const CellIndex& c) const {
  auto it = assignment.find(c);
  if (it == assignment.end()) {
    throw Error(ErrorCode::kIncompleteColoring, "no color assigned to " + to_string(c));
  }
  return it->second;
}

Coloring chromatic_coloring(const InterferenceGraph& graph, const SolverOptions& options, SolverStats* stats) {
  if (graph.vertex_count() > options.max_vertices) {
    throw Error(ErrorCode::kSizeLimit, "exact solver is capped at " + std::to_string(options.max_vertices) +
                                           " vertices (graph has " + std::to_string(graph.vertex_count()) +
                                           "); use pattern_coloring or raise the cap");
  }
  SolverStats local;
  if (graph.empty()) {
    if (stats) *stats = local;
    return {};
  }
  ZykovSolver solver(graph);
  const auto raw = solver.solve(local);
  if (stats) *stats = local;
  return canonical(graph.vertices(), raw);
}

std::vector<std::size_t> greedy_clique(const InterferenceGraph& graph) {
  ZykovState s(graph);
  auto clique = greedy_clique_in(s.adj, s.alive);
  std::sort(clique.begin(), clique.end());
  return clique;
}

Coloring pattern_coloring(std::span<const CellIndex> cells, ReuseKind kind) {
  std::vector<int> raw;
  raw.reserve(cells.size());
  for (const auto& c : cells) {
    if (!has_valid_parity(c)) {
      throw Error(ErrorCode::kInvalidLattice, "cell " + to_string(c) + " violates (i + j) mod 2 == 0");
    }
    const int a = c.i;
    const int b = (c.j - c.i) / 2;
    raw.push_back(kind == ReuseKind::kData ? positive_mod(a - b, 3)
                                           : 2 * positive_mod(a, 2) + positive_mod(b, 2));
  }
  return canonical(cells, raw);
}

Coloring pattern_coloring(const Lattice& lattice, ReuseKind kind) { return pattern_coloring(lattice.cells(), kind); }

Coloring lattice_coloring(const InterferenceGraph& graph, ReuseKind kind, const SolverOptions& options) {
  if (graph.vertex_count() <= options.max_vertices) return chromatic_coloring(graph, options);
  return pattern_coloring(graph.vertices(), kind);
}

bool verify_coloring(const InterferenceGraph& graph, const Coloring& coloring) {
  std::vector<int> color;
  color.reserve(graph.vertex_count());
  for (const auto& v : graph.vertices()) color.push_back(coloring.color_of(v));
  for (auto [a, b] : graph.edges()) {
    if (color[a] == color[b]) return false;
  }
  return true;
}

int brute_force_chromatic(const InterferenceGraph& graph) {
  if (graph.vertex_count() > 10) {
    throw Error(ErrorCode::kSizeLimit, "brute-force oracle is limited to 10 vertices");
  }
  if (graph.empty()) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> color(graph.vertex_count(), -1);
    if (try_color(graph, color, 0, k)) return k;
  }
}

void write_coloring_csv(std::ostream& os, std::span<const CellIndex> order, const Coloring& coloring) {
  os << "i,j,color\n";
  for (const auto& c : order) os << c.i << ',' << c.j << ',' << coloring.color_of(c) << '\n';
}

}  // namespace hexalloc
