#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hexalloc {

/// Lattice step pair of a hexagonal cell center. Valid cells satisfy
/// (i + j) mod 2 == 0.
struct CellIndex {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

std::string to_string(const CellIndex& c);

constexpr bool has_valid_parity(const CellIndex& c) { return ((c.i + c.j) % 2) == 0; }

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Integer form of the squared center distance: 3*di^2 + dj^2.
/// distance^2 == (3 R^2 / 4) * lattice_metric.
constexpr std::int64_t lattice_metric(const CellIndex& a, const CellIndex& b) {
  const std::int64_t di = static_cast<std::int64_t>(a.i) - b.i;
  const std::int64_t dj = static_cast<std::int64_t>(a.j) - b.j;
  return 3 * di * di + dj * dj;
}

/// Reuse thresholds on the integer metric. Cells closer than the threshold
/// must not share a channel; cells at or beyond it may.
inline constexpr std::int64_t kControlMetricThreshold = 16;  // 2*sqrt(3)*R
inline constexpr std::int64_t kDataMetricThreshold = 12;     // 3*R

struct NeighborhoodPartition {
  std::vector<CellIndex> e_set;  // metric > threshold
  std::vector<CellIndex> f_set;  // metric == threshold
  std::vector<CellIndex> g_set;  // metric < threshold, includes the cell itself
};

/// A finite set of parity-valid hexagonal cells with a common radius and origin.
class Lattice {
 public:
  /// All parity-valid (i, j) in [-N, N]^2, ordered row-major by j then i.
  static Lattice build(int index_bound, double radius, Point origin = {});

  /// Irregular deployment from an explicit cell list. Order is preserved.
  static Lattice from_cells(std::vector<CellIndex> cells, double radius, Point origin = {});

  double radius() const { return radius_; }
  Point origin() const { return origin_; }
  int index_bound() const { return index_bound_; }
  const std::vector<CellIndex>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(const CellIndex& c) const;
  /// Position of `c` in cells(); throws kNotInLattice.
  std::size_t position(const CellIndex& c) const;

  Point center_of(const CellIndex& c) const;
  double distance(const CellIndex& a, const CellIndex& b) const;

  NeighborhoodPartition neighborhood_sets(const CellIndex& c, std::int64_t metric_threshold) const;

 private:
  Lattice(std::vector<CellIndex> cells, double radius, Point origin, int index_bound);

  void require(const CellIndex& c) const;

  std::vector<CellIndex> cells_;
  std::map<CellIndex, std::size_t> positions_;
  double radius_ = 1.0;
  Point origin_;
  int index_bound_ = 0;
};

/// The 12-cell reference block (3 columns x 4 rows).
std::vector<CellIndex> twelve_cell_fixture();

}  // namespace hexalloc
