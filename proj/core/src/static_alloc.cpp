#include "hexalloc/static_alloc.hpp"

#include <ostream>
#include <string>

#include "hexalloc/error.hpp"
#include "hexalloc/graph.hpp"

namespace hexalloc {

int channels_per_pan(std::size_t available, int colors) {
  if (colors <= 0) throw Error(ErrorCode::kInvalidArgument, "color count must be positive");
  return static_cast<int>(available / static_cast<std::size_t>(colors));
}

ControlAllocation allocate_control(const Lattice& lattice, const ChannelPlan& plan, const SolverOptions& options) {
  const auto graph = build_interference_graph(lattice, kControlMetricThreshold);
  ControlAllocation out;
  out.coloring = lattice_coloring(graph, ReuseKind::kControl, options);
  if (plan.control_set.size() < static_cast<std::size_t>(out.coloring.num_colors)) {
    throw Error(ErrorCode::kInsufficientSpectrum,
                "control allocation needs " + std::to_string(out.coloring.num_colors) + " channels, domain " +
                    std::string(to_string(plan.domain)) + " offers " + std::to_string(plan.control_set.size()));
  }
  for (const auto& [cell, color] : out.coloring.assignment) {
    out.channels[cell] = plan.control_set[static_cast<std::size_t>(color)];
  }
  return out;
}

StaticDataAllocation allocate_static_data(const Lattice& lattice, const ChannelPlan& plan,
                                          const SolverOptions& options) {
  const auto graph = build_interference_graph(lattice, kDataMetricThreshold);
  StaticDataAllocation out;
  out.coloring = lattice_coloring(graph, ReuseKind::kData, options);
  if (out.coloring.num_colors == 0) return out;
  if (plan.data_set.size() < static_cast<std::size_t>(out.coloring.num_colors)) {
    throw Error(ErrorCode::kInsufficientSpectrum,
                "data allocation needs " + std::to_string(out.coloring.num_colors) + " channels, domain " +
                    std::string(to_string(plan.domain)) + " offers " + std::to_string(plan.data_set.size()));
  }
  out.k_static = channels_per_pan(plan.data_set.size(), out.coloring.num_colors);
  auto partition = partition_channels(plan.data_set, out.coloring.num_colors, out.k_static);
  out.color_groups = std::move(partition.groups);
  out.unassigned = std::move(partition.unassigned);
  for (const auto& [cell, color] : out.coloring.assignment) {
    out.groups[cell] = out.color_groups[static_cast<std::size_t>(color)];
  }
  return out;
}

std::string join_channels(const std::vector<LogicalChannel>& channels) {
  std::string out;
  for (std::size_t k = 0; k < channels.size(); ++k) {
    if (k > 0) out += ';';
    out += to_string(channels[k]);
  }
  return out;
}

void write_static_csv(std::ostream& os, const Lattice& lattice, const StaticAllocation& allocation) {
  os << "i,j,control_phy,control_code,data_channels\n";
  for (const auto& c : lattice.cells()) {
    const auto& cch = allocation.control.channels.at(c);
    os << c.i << ',' << c.j << ',' << cch.phy_channel << ',' << cch.code << ','
       << join_channels(allocation.data.groups.at(c)) << '\n';
  }
}

}  // namespace hexalloc
