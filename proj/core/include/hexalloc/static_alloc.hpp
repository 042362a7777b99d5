#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "hexalloc/coloring.hpp"
#include "hexalloc/lattice.hpp"
#include "hexalloc/spectrum.hpp"

namespace hexalloc {

struct ControlAllocation {
  std::map<CellIndex, LogicalChannel> channels;
  Coloring coloring;
};

/// One control channel per cell: color class k of the threshold-16 graph gets
/// the k-th control channel of the plan. Throws kInsufficientSpectrum when the
/// plan has fewer control channels than colors.
ControlAllocation allocate_control(const Lattice& lattice, const ChannelPlan& plan,
                                   const SolverOptions& options = {});

struct StaticDataAllocation {
  std::map<CellIndex, std::vector<LogicalChannel>> groups;
  Coloring coloring;
  int k_static = 0;                           // floor(|data_set| / colors)
  std::vector<std::vector<LogicalChannel>> color_groups;  // indexed by color
  std::vector<LogicalChannel> unassigned;
};

/// Colors the threshold-12 graph and hands each color class an equal,
/// disjoint slice of the data set. Throws kInsufficientSpectrum when there
/// are fewer data channels than colors.
StaticDataAllocation allocate_static_data(const Lattice& lattice, const ChannelPlan& plan,
                                          const SolverOptions& options = {});

/// floor(available / colors), the number of simultaneous data channels per PAN.
int channels_per_pan(std::size_t available, int colors);

struct StaticAllocation {
  ControlAllocation control;
  StaticDataAllocation data;
};

/// CSV "i,j,control_phy,control_code,data_channels" in lattice order.
/// data_channels is a ';'-separated list of phy:code.
void write_static_csv(std::ostream& os, const Lattice& lattice, const StaticAllocation& allocation);

std::string join_channels(const std::vector<LogicalChannel>& channels);

}  // namespace hexalloc
