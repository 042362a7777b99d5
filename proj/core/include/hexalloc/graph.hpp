#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hexalloc/lattice.hpp"

namespace hexalloc {

/// Undirected simple graph whose vertices are cells. Edges are stored as
/// sorted adjacency lists over vertex positions.
class InterferenceGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  InterferenceGraph() = default;

  /// Throws kInvalidArgument on duplicate vertices, self loops or edges that
  /// reference a missing position.
  InterferenceGraph(std::vector<CellIndex> vertices, std::span<const Edge> edges);

  const std::vector<CellIndex>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return vertices_.empty(); }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t a, std::size_t b) const;
  bool adjacent(const CellIndex& a, const CellIndex& b) const;

  /// Position of `c` among vertices(), or npos.
  std::size_t find(const CellIndex& c) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Edges in increasing (first, second) order.
  std::vector<Edge> edges() const;

 private:
  std::vector<CellIndex> vertices_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Edge (a, b) iff lattice_metric(a, b) < metric_threshold. Vertex order
/// follows `active_cells`.
InterferenceGraph build_interference_graph(const Lattice& lattice, std::span<const CellIndex> active_cells,
                                           std::int64_t metric_threshold);

/// Same, over every lattice cell.
InterferenceGraph build_interference_graph(const Lattice& lattice, std::int64_t metric_threshold);

/// Induced subgraph. Vertex order is the parent's order restricted to `keep`.
InterferenceGraph subgraph_on(const InterferenceGraph& graph, std::span<const CellIndex> keep);

/// Vertex positions of each connected component. Components are ordered by
/// their smallest position and list positions in increasing order.
std::vector<std::vector<std::size_t>> connected_components(const InterferenceGraph& graph);

/// One "i1 j1 i2 j2" line per edge.
void write_edge_list(std::ostream& os, const InterferenceGraph& graph);

/// Parses the edge-list format back into cell pairs.
std::vector<std::pair<CellIndex, CellIndex>> parse_edge_list(std::istream& is);

}  // namespace hexalloc
