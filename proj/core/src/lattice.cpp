#include "hexalloc/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "hexalloc/error.hpp"

namespace hexalloc {

std::string to_string(const CellIndex& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

Lattice::Lattice(std::vector<CellIndex> cells, double radius, Point origin, int index_bound)
    : cells_(std::move(cells)), radius_(radius), origin_(origin), index_bound_(index_bound) {
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw Error(ErrorCode::kInvalidLattice, "radius must be positive and finite");
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    const CellIndex& c = cells_[k];
    if (!has_valid_parity(c)) {
      throw Error(ErrorCode::kInvalidLattice, "cell " + to_string(c) + " violates (i + j) mod 2 == 0");
    }
    if (!positions_.emplace(c, k).second) {
      throw Error(ErrorCode::kInvalidLattice, "duplicate cell " + to_string(c));
    }
  }
}

Lattice Lattice::build(int index_bound, double radius, Point origin) {
  if (index_bound < 0) {
    throw Error(ErrorCode::kInvalidLattice, "index bound must be non-negative");
  }
  std::vector<CellIndex> cells;
  for (int j = -index_bound; j <= index_bound; ++j) {
    for (int i = -index_bound; i <= index_bound; ++i) {
      if (has_valid_parity({i, j})) cells.push_back({i, j});
    }
  }
  return Lattice(std::move(cells), radius, origin, index_bound);
}

Lattice Lattice::from_cells(std::vector<CellIndex> cells, double radius, Point origin) {
  int bound = 0;
  for (const auto& c : cells) {
    bound = std::max({bound, std::abs(c.i), std::abs(c.j)});
  }
  return Lattice(std::move(cells), radius, origin, bound);
}

bool Lattice::contains(const CellIndex& c) const { return positions_.contains(c); }

void Lattice::require(const CellIndex& c) const {
  if (!contains(c)) {
    throw Error(ErrorCode::kNotInLattice, "cell " + to_string(c) + " is not part of the lattice");
  }
}

std::size_t Lattice::position(const CellIndex& c) const {
  auto it = positions_.find(c);
  if (it == positions_.end()) {
    throw Error(ErrorCode::kNotInLattice, "cell " + to_string(c) + " is not part of the lattice");
  }
  return it->second;
}

Point Lattice::center_of(const CellIndex& c) const {
  require(c);
  return {origin_.x + c.i * (3.0 * radius_ / 2.0), origin_.y + c.j * (std::sqrt(3.0) * radius_ / 2.0)};
}

double Lattice::distance(const CellIndex& a, const CellIndex& b) const {
  const Point pa = center_of(a);
  const Point pb = center_of(b);
  return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

NeighborhoodPartition Lattice::neighborhood_sets(const CellIndex& c, std::int64_t metric_threshold) const {
  require(c);
  NeighborhoodPartition part;
  for (const auto& other : cells_) {
    const std::int64_t m = lattice_metric(c, other);
    if (m > metric_threshold) {
      part.e_set.push_back(other);
    } else if (m == metric_threshold) {
      part.f_set.push_back(other);
    } else {
      part.g_set.push_back(other);
    }
  }
  return part;
}

std::vector<CellIndex> twelve_cell_fixture() {
  return {{0, 0}, {0, 2}, {0, 4}, {0, 6}, {1, 1}, {1, 3},
          {1, 5}, {1, 7}, {2, 0}, {2, 2}, {2, 4}, {2, 6}};
}

}  // namespace hexalloc
