#include "hexalloc/dynamic_alloc.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hexalloc/error.hpp"
#include "hexalloc/graph.hpp"
#include "hexalloc/static_alloc.hpp"

namespace hexalloc {
namespace {

void validate(const SuperframeConfig& cfg, std::size_t index) {
  const std::string where = "superframe " + std::to_string(index + 1) + " at " + to_string(cfg.pan_cell);
  if (cfg.superframe_order < 0 || cfg.beacon_order < 0 || cfg.beacon_order > kMaxBeaconOrder) {
    throw Error(ErrorCode::kInvalidSuperframe,
                where + ": orders must lie in [0, " + std::to_string(kMaxBeaconOrder) + "]");
  }
  if (cfg.superframe_order > cfg.beacon_order) {
    throw Error(ErrorCode::kInvalidSuperframe, where + ": SO " + std::to_string(cfg.superframe_order) +
                                                   " exceeds BO " + std::to_string(cfg.beacon_order));
  }
  if (cfg.phase < 0) {
    throw Error(ErrorCode::kInvalidSuperframe, where + ": phase must be non-negative");
  }
}

}  // namespace

CycleStructure cycle_structure(std::span<const SuperframeConfig> configs) {
  if (configs.empty()) {
    throw Error(ErrorCode::kInvalidSuperframe, "at least one superframe is required");
  }
  CycleStructure out{0, 0, 0};
  for (std::size_t k = 0; k < configs.size(); ++k) {
    validate(configs[k], k);
    out.bi_maj = std::max(out.bi_maj, configs[k].beacon_interval());
    out.sd_min = k == 0 ? configs[k].superframe_duration() : std::min(out.sd_min, configs[k].superframe_duration());
  }
  out.u_cycles = out.bi_maj / out.sd_min;
  return out;
}

std::size_t ActivityMatrix::row_count(std::size_t pan) const {
  std::size_t total = 0;
  for (std::size_t t = 0; t < cycles_; ++t) total += active(pan, t) ? 1 : 0;
  return total;
}

ActivityMatrix activity_matrix(std::span<const SuperframeConfig> configs, const CycleStructure& structure,
                               std::optional<std::size_t> num_cycles) {
  const std::size_t cycles = num_cycles.value_or(static_cast<std::size_t>(structure.u_cycles));
  ActivityMatrix out(configs.size(), cycles);
  for (std::size_t p = 0; p < configs.size(); ++p) {
    const auto& cfg = configs[p];
    validate(cfg, p);
    if (cfg.phase % structure.sd_min != 0) {
      throw Error(ErrorCode::kInvalidSuperframe, "superframe " + std::to_string(p + 1) +
                                                     ": phase must be a multiple of the elementary cycle " +
                                                     std::to_string(structure.sd_min));
    }
    const std::int64_t bi = cfg.beacon_interval();
    const std::int64_t sd = cfg.superframe_duration();
    for (std::size_t t = 0; t < cycles; ++t) {
      const std::int64_t offset = ((static_cast<std::int64_t>(t) * structure.sd_min - cfg.phase) % bi + bi) % bi;
      out.set(p, t, offset < sd);
    }
  }
  return out;
}

AllocationMatrix::AllocationMatrix(std::size_t pans, std::size_t cycles)
    : pans_(pans),
      cycles_(cycles),
      channels_(pans * cycles),
      chi_(pans * cycles, 0),
      k_(pans * cycles, 0),
      per_cycle_chi_(cycles, 0),
      per_cycle_k_(cycles, 0) {}

void AllocationMatrix::assign(std::size_t pan, std::size_t cycle, std::vector<LogicalChannel> channels, int chi) {
  const std::size_t at = pan * cycles_ + cycle;
  k_[at] = static_cast<int>(channels.size());
  chi_[at] = chi;
  channels_[at] = std::move(channels);
}

void AllocationMatrix::set_cycle_summary(std::size_t cycle, int chi, int k) {
  per_cycle_chi_[cycle] = chi;
  per_cycle_k_[cycle] = k;
}

AllocationMatrix allocate_dynamic(const Lattice& lattice, std::span<const SuperframeConfig> configs,
                                  const ChannelPlan& plan, const DynamicOptions& options) {
  const CycleStructure structure = cycle_structure(configs);
  const ActivityMatrix activity = activity_matrix(configs, structure, options.num_cycles);

  std::set<CellIndex> seen;
  for (std::size_t p = 0; p < configs.size(); ++p) {
    const auto& cell = configs[p].pan_cell;
    if (!lattice.contains(cell)) {
      throw Error(ErrorCode::kNotInLattice, "PAN " + std::to_string(p + 1) + " cell " + to_string(cell) +
                                                " is not part of the lattice");
    }
    if (!seen.insert(cell).second) {
      throw Error(ErrorCode::kInvalidSuperframe, "two PANs share cell " + to_string(cell));
    }
  }

  // PANs visited in lattice order so that vertex order, and with it the
  // canonical coloring, matches the static allocation.
  std::vector<std::size_t> by_lattice(configs.size());
  for (std::size_t p = 0; p < configs.size(); ++p) by_lattice[p] = p;
  std::sort(by_lattice.begin(), by_lattice.end(), [&](std::size_t a, std::size_t b) {
    return lattice.position(configs[a].pan_cell) < lattice.position(configs[b].pan_cell);
  });
  std::map<CellIndex, std::size_t> pan_of;
  for (std::size_t p = 0; p < configs.size(); ++p) pan_of[configs[p].pan_cell] = p;

  const std::size_t available = plan.data_set.size();
  AllocationMatrix out(configs.size(), activity.cycles());
  for (std::size_t t = 0; t < activity.cycles(); ++t) {
    std::vector<CellIndex> active;
    for (std::size_t p : by_lattice) {
      if (activity.active(p, t)) active.push_back(configs[p].pan_cell);
    }
    const auto graph = build_interference_graph(lattice, active, kDataMetricThreshold);
    int cycle_chi = 0;
    for (const auto& component : connected_components(graph)) {
      std::vector<CellIndex> cells;
      for (std::size_t v : component) cells.push_back(graph.vertices()[v]);
      const auto sub = subgraph_on(graph, cells);
      const Coloring coloring = lattice_coloring(sub, ReuseKind::kData, options.solver);
      if (available < static_cast<std::size_t>(coloring.num_colors)) {
        throw Error(ErrorCode::kInsufficientSpectrum, "elementary cycle " + std::to_string(t + 1) + " needs " +
                                                          std::to_string(coloring.num_colors) +
                                                          " data channels, have " + std::to_string(available));
      }
      const int k = channels_per_pan(available, coloring.num_colors);
      const auto partition = partition_channels(plan.data_set, coloring.num_colors, k);
      for (const auto& cell : cells) {
        out.assign(pan_of.at(cell), t, partition.groups[static_cast<std::size_t>(coloring.color_of(cell))],
                   coloring.num_colors);
      }
      cycle_chi = std::max(cycle_chi, coloring.num_colors);
    }
    out.set_cycle_summary(t, cycle_chi, cycle_chi == 0 ? 0 : channels_per_pan(available, cycle_chi));
  }
  return out;
}

}  // namespace hexalloc
