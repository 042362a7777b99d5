#include "hexalloc/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hexalloc/error.hpp"

namespace hexalloc {

InterferenceGraph::InterferenceGraph(std::vector<CellIndex> vertices, std::span<const Edge> edges)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
  if (std::set<CellIndex>(vertices_.begin(), vertices_.end()).size() != vertices_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "graph has duplicate vertices");
  }
  for (auto [a, b] : edges) {
    if (a >= vertices_.size() || b >= vertices_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "edge references a missing vertex");
    }
    if (a == b) {
      throw Error(ErrorCode::kInvalidArgument, "self loop on " + to_string(vertices_[a]));
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

bool InterferenceGraph::adjacent(std::size_t a, std::size_t b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool InterferenceGraph::adjacent(const CellIndex& a, const CellIndex& b) const {
  const std::size_t pa = find(a);
  const std::size_t pb = find(b);
  return pa != npos && pb != npos && adjacent(pa, pb);
}

std::size_t InterferenceGraph::find(const CellIndex& c) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), c);
  return it == vertices_.end() ? npos : static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<InterferenceGraph::Edge> InterferenceGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t a = 0; a < adjacency_.size(); ++a) {
    for (std::size_t b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

InterferenceGraph build_interference_graph(const Lattice& lattice, std::span<const CellIndex> active_cells,
                                           std::int64_t metric_threshold) {
  if (metric_threshold <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "metric threshold must be positive");
  }
  for (const auto& c : active_cells) {
    if (!lattice.contains(c)) {
      throw Error(ErrorCode::kNotInLattice, "active cell " + to_string(c) + " is not part of the lattice");
    }
  }
  std::vector<InterferenceGraph::Edge> edges;
  for (std::size_t a = 0; a < active_cells.size(); ++a) {
    for (std::size_t b = a + 1; b < active_cells.size(); ++b) {
      if (lattice_metric(active_cells[a], active_cells[b]) < metric_threshold) edges.emplace_back(a, b);
    }
  }
  return InterferenceGraph({active_cells.begin(), active_cells.end()}, edges);
}

InterferenceGraph build_interference_graph(const Lattice& lattice, std::int64_t metric_threshold) {
  return build_interference_graph(lattice, lattice.cells(), metric_threshold);
}

InterferenceGraph subgraph_on(const InterferenceGraph& graph, std::span<const CellIndex> keep) {
  const std::set<CellIndex> wanted(keep.begin(), keep.end());
  std::vector<CellIndex> vertices;
  std::vector<std::size_t> old_to_new(graph.vertex_count(), InterferenceGraph::npos);
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (wanted.contains(graph.vertices()[v])) {
      old_to_new[v] = vertices.size();
      vertices.push_back(graph.vertices()[v]);
    }
  }
  if (vertices.size() != wanted.size()) {
    throw Error(ErrorCode::kInvalidArgument, "subgraph vertex set is not contained in the graph");
  }
  std::vector<InterferenceGraph::Edge> edges;
  for (auto [a, b] : graph.edges()) {
    if (old_to_new[a] != InterferenceGraph::npos && old_to_new[b] != InterferenceGraph::npos) {
      edges.emplace_back(old_to_new[a], old_to_new[b]);
    }
  }
  return InterferenceGraph(std::move(vertices), edges);
}

std::vector<std::vector<std::size_t>> connected_components(const InterferenceGraph& graph) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(graph.vertex_count(), false);
  for (std::size_t root = 0; root < graph.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (std::size_t w : graph.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

void write_edge_list(std::ostream& os, const InterferenceGraph& graph) {
  for (auto [a, b] : graph.edges()) {
    const auto& ca = graph.vertices()[a];
    const auto& cb = graph.vertices()[b];
    os << ca.i << ' ' << ca.j << ' ' << cb.i << ' ' << cb.j << '\n';
  }
}

std::vector<std::pair<CellIndex, CellIndex>> parse_edge_list(std::istream& is) {
  std::vector<std::pair<CellIndex, CellIndex>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    CellIndex a, b;
    std::string rest;
    if (!(ls >> a.i >> a.j >> b.i >> b.j) || (ls >> rest)) {
      throw Error(ErrorCode::kInvalidArgument, "malformed edge on line " + std::to_string(line_no));
    }
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace hexalloc
