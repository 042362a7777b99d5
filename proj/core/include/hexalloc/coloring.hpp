#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "hexalloc/graph.hpp"
#include "hexalloc/lattice.hpp"

namespace hexalloc {

/// Vertex to color assignment. Color ids are contiguous in [0, num_colors)
/// and numbered by first appearance in the colored graph's vertex order.
struct Coloring {
  std::map<CellIndex, int> assignment;
  int num_colors = 0;

  /// Throws kIncompleteColoring when `c` is not assigned.
  int color_of(const CellIndex& c) const;
};

enum class ReuseKind { kControl, kData };

constexpr std::int64_t metric_threshold(ReuseKind kind) {
  return kind == ReuseKind::kControl ? kControlMetricThreshold : kDataMetricThreshold;
}

struct SolverOptions {
  std::size_t max_vertices = 64;
};

struct SolverStats {
  std::uint64_t nodes = 0;          // search nodes visited
  int clique_lower_bound = 0;       // clique found at the root
  int initial_upper_bound = 0;      // DSATUR colors at the root
};

/// Exact minimum coloring by Zykov branching: pick the non-adjacent pair with
/// the most common neighbors (ties to the lowest positions), then explore
/// "merge the pair" before "join the pair by an edge". Leaves are complete
/// graphs whose vertex count is the number of colors. A greedy clique bounds
/// each node from below and DSATUR supplies upper bounds.
///
/// Throws kSizeLimit when the graph has more than options.max_vertices
/// vertices. An empty graph yields zero colors.
Coloring chromatic_coloring(const InterferenceGraph& graph, const SolverOptions& options = {},
                            SolverStats* stats = nullptr);

/// Clique found by the solver's greedy heuristic, as vertex positions.
std::vector<std::size_t> greedy_clique(const InterferenceGraph& graph);

/// Closed-form periodic colorings over axial coordinates a = i, b = (j - i)/2.
///   data:    (a - b) mod 3             -> at most 3 colors
///   control: 2 (a mod 2) + (b mod 2)   -> at most 4 colors
/// Every same-colored pair sits at metric >= the kind's threshold.
Coloring pattern_coloring(const Lattice& lattice, ReuseKind kind);
Coloring pattern_coloring(std::span<const CellIndex> cells, ReuseKind kind);

/// Exact coloring while the graph fits the solver cap, otherwise the periodic
/// pattern restricted to the graph's vertices. The graph must have been built
/// with a threshold no larger than the kind's.
Coloring lattice_coloring(const InterferenceGraph& graph, ReuseKind kind, const SolverOptions& options = {});

/// True iff no edge joins two same-colored vertices. Throws
/// kIncompleteColoring when a vertex is unassigned.
bool verify_coloring(const InterferenceGraph& graph, const Coloring& coloring);

/// Exhaustive k-coloring search for k = 1, 2, ...; independent of the Zykov
/// solver and limited to 10 vertices (kSizeLimit otherwise).
int brute_force_chromatic(const InterferenceGraph& graph);

/// CSV with header "i,j,color", one row per cell in `order`.
void write_coloring_csv(std::ostream& os, std::span<const CellIndex> order, const Coloring& coloring);

}  // namespace hexalloc
