#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hexalloc/coloring.hpp"
#include "hexalloc/lattice.hpp"
#include "hexalloc/spectrum.hpp"

namespace hexalloc {

inline constexpr int kMaxBeaconOrder = 14;

/// Superframe of one PAN coordinator, in units of the base superframe
/// duration: active period SD = 2^SO at the start of each BI = 2^BO.
struct SuperframeConfig {
  CellIndex pan_cell;
  int superframe_order = 0;  // SO
  int beacon_order = 0;      // BO
  std::int64_t phase = 0;    // start offset, multiple of the elementary cycle

  std::int64_t superframe_duration() const { return std::int64_t{1} << superframe_order; }
  std::int64_t beacon_interval() const { return std::int64_t{1} << beacon_order; }
};

struct CycleStructure {
  std::int64_t bi_maj = 1;    // major cycle, max BI
  std::int64_t sd_min = 1;    // elementary cycle, min SD
  std::int64_t u_cycles = 1;  // bi_maj / sd_min

  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

/// Throws kInvalidSuperframe on an empty list, SO > BO, or orders outside
/// [0, kMaxBeaconOrder].
CycleStructure cycle_structure(std::span<const SuperframeConfig> configs);

/// PAN x elementary-cycle activity, row per config.
class ActivityMatrix {
 public:
  ActivityMatrix() = default;
  ActivityMatrix(std::size_t pans, std::size_t cycles) : pans_(pans), cycles_(cycles), cells_(pans * cycles, 0) {}

  std::size_t pans() const { return pans_; }
  std::size_t cycles() const { return cycles_; }
  bool active(std::size_t pan, std::size_t cycle) const { return cells_[pan * cycles_ + cycle] != 0; }
  void set(std::size_t pan, std::size_t cycle, bool value) { cells_[pan * cycles_ + cycle] = value ? 1 : 0; }
  std::size_t row_count(std::size_t pan) const;

 private:
  std::size_t pans_ = 0;
  std::size_t cycles_ = 0;
  std::vector<std::uint8_t> cells_;
};

/// PAN i is active in elementary cycle t iff (t * sd_min - phase_i) mod BI_i
/// lies in [0, SD_i). `num_cycles` defaults to u_cycles.
ActivityMatrix activity_matrix(std::span<const SuperframeConfig> configs, const CycleStructure& structure,
                               std::optional<std::size_t> num_cycles = std::nullopt);

/// Per-PAN per-cycle data channel sets.
class AllocationMatrix {
 public:
  AllocationMatrix() = default;
  AllocationMatrix(std::size_t pans, std::size_t cycles);

  std::size_t pans() const { return pans_; }
  std::size_t cycles() const { return cycles_; }

  const std::vector<LogicalChannel>& channels(std::size_t pan, std::size_t cycle) const {
    return channels_[pan * cycles_ + cycle];
  }
  /// Colors of the PAN's active component (0 when inactive).
  int component_chi(std::size_t pan, std::size_t cycle) const { return chi_[pan * cycles_ + cycle]; }
  /// Channels granted to the PAN (0 when inactive).
  int k(std::size_t pan, std::size_t cycle) const { return k_[pan * cycles_ + cycle]; }

  /// Chromatic number of the cycle's active graph (0 when nobody is active).
  const std::vector<int>& per_cycle_chi() const { return per_cycle_chi_; }
  /// floor(|data_set| / per_cycle_chi), the grant of the most constrained component.
  const std::vector<int>& per_cycle_k() const { return per_cycle_k_; }

  void assign(std::size_t pan, std::size_t cycle, std::vector<LogicalChannel> channels, int chi);
  void set_cycle_summary(std::size_t cycle, int chi, int k);

 private:
  std::size_t pans_ = 0;
  std::size_t cycles_ = 0;
  std::vector<std::vector<LogicalChannel>> channels_;
  std::vector<int> chi_;
  std::vector<int> k_;
  std::vector<int> per_cycle_chi_;
  std::vector<int> per_cycle_k_;
};

struct DynamicOptions {
  SolverOptions solver;
  std::optional<std::size_t> num_cycles;  // defaults to one major cycle
};

/// For every elementary cycle: color the threshold-12 graph of the active
/// PANs one connected component at a time, grant each PAN
/// floor(|data_set| / component colors) channels, and give each color class
/// its own slice of the data set.
///
/// Throws kNotInLattice for a PAN outside the lattice and kInvalidSuperframe
/// for two PANs on the same cell.
AllocationMatrix allocate_dynamic(const Lattice& lattice, std::span<const SuperframeConfig> configs,
                                  const ChannelPlan& plan, const DynamicOptions& options = {});

}  // namespace hexalloc
