#include "hexalloc/static_alloc.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "hexalloc/error.hpp"
#include "hexalloc/graph.hpp"

namespace hexalloc {
namespace {

Lattice fixture() { return Lattice::from_cells(twelve_cell_fixture(), 1.0); }
ChannelPlan plan_for(DomainName name) { return channel_plan(default_domain(name)); }

void expect_proper(const Lattice& lattice, const StaticAllocation& a, const ChannelPlan& plan) {
  const std::set<LogicalChannel> control(plan.control_set.begin(), plan.control_set.end());
  for (const auto& c : lattice.cells()) {
    EXPECT_TRUE(control.contains(a.control.channels.at(c)));
    EXPECT_EQ(static_cast<int>(a.data.groups.at(c).size()), a.data.k_static);
    for (const auto& ch : a.data.groups.at(c)) EXPECT_FALSE(control.contains(ch));
  }
  for (const auto& x : lattice.cells()) {
    for (const auto& y : lattice.cells()) {
      if (x == y) continue;
      const auto m = lattice_metric(x, y);
      if (m < kControlMetricThreshold) EXPECT_NE(a.control.channels.at(x), a.control.channels.at(y));
      if (m < kDataMetricThreshold) {
        const auto& gx = a.data.groups.at(x);
        const auto& gy = a.data.groups.at(y);
        for (const auto& ch : gx) EXPECT_EQ(std::count(gy.begin(), gy.end(), ch), 0);
      }
    }
  }
}

TEST(StaticAllocTest, FixtureEurope) {
  const auto lattice = fixture();
  const auto plan = plan_for(DomainName::kEurope);
  StaticAllocation a{allocate_control(lattice, plan), allocate_static_data(lattice, plan)};
  std::set<LogicalChannel> used;
  for (const auto& [cell, ch] : a.control.channels) used.insert(ch);
  EXPECT_EQ(used.size(), 4u);
  EXPECT_EQ(a.data.coloring.num_colors, 3);
  EXPECT_EQ(a.data.k_static, 4);
  EXPECT_EQ(a.data.unassigned.size(), 2u);
  expect_proper(lattice, a, plan);
}

TEST(StaticAllocTest, KPerDomain) {
  const auto lattice = fixture();
  EXPECT_EQ(allocate_static_data(lattice, plan_for(DomainName::kUS)).k_static, 8);
  EXPECT_EQ(allocate_static_data(lattice, plan_for(DomainName::kJapan)).k_static, 6);
  EXPECT_EQ(allocate_static_data(lattice, plan_for(DomainName::kEurope)).k_static, 4);
  const auto us28 = channel_plan(default_domain(DomainName::kUS), restricted_control_candidates());
  EXPECT_EQ(allocate_static_data(lattice, us28).k_static, 9);
}

TEST(StaticAllocTest, JapanControlSetCannotCoverFixture) {
  const auto plan = plan_for(DomainName::kJapan);
  ASSERT_EQ(plan.control_set.size(), 2u);
  try {
    allocate_control(fixture(), plan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientSpectrum);
  }
}

TEST(StaticAllocTest, SingleCell) {
  const auto lattice = Lattice::build(0, 1.0);
  const auto plan = plan_for(DomainName::kEurope);
  const auto control = allocate_control(lattice, plan);
  EXPECT_EQ(control.channels.size(), 1u);
  EXPECT_EQ(control.coloring.num_colors, 1);
  const auto data = allocate_static_data(lattice, plan);
  EXPECT_EQ(data.k_static, 14);
  EXPECT_TRUE(data.unassigned.empty());
}

TEST(StaticAllocTest, TwoAdjacentCellsGetDistinctControlChannels) {
  const auto lattice = Lattice::from_cells({{0, 0}, {1, 1}}, 1.0);
  const auto control = allocate_control(lattice, plan_for(DomainName::kEurope));
  EXPECT_NE(control.channels.at({0, 0}), control.channels.at({1, 1}));
  EXPECT_EQ(control.coloring.num_colors, 2);
}

TEST(StaticAllocTest, ControlChannelsAreReusedAtReuseDistance) {
  for (int n = 4; n <= 6; ++n) {
    const auto lattice = Lattice::build(n, 1.0);
    const auto control = allocate_control(lattice, plan_for(DomainName::kUS));
    bool reused = false;
    for (const auto& a : lattice.cells()) {
      for (const auto& b : lattice.cells()) {
        if (lattice_metric(a, b) == kControlMetricThreshold && control.channels.at(a) == control.channels.at(b)) {
          reused = true;
        }
      }
    }
    EXPECT_TRUE(reused) << "N=" << n;
  }
}

TEST(StaticAllocTest, PropertiesOverWindowsAndDomains) {
  for (int n = 0; n <= 6; ++n) {
    const auto lattice = Lattice::build(n, 1.0);
    for (auto name : {DomainName::kUS, DomainName::kEurope}) {
      const auto plan = plan_for(name);
      StaticAllocation a{allocate_control(lattice, plan), allocate_static_data(lattice, plan)};
      expect_proper(lattice, a, plan);
      EXPECT_EQ(a.data.k_static * a.data.coloring.num_colors + static_cast<int>(a.data.unassigned.size()),
                static_cast<int>(plan.data_set.size()));
    }
  }
}

TEST(StaticAllocTest, InsufficientDataChannels) {
  const auto plan = channel_plan(custom_domain(DomainName::kCustom, {{4, 7}, {7, 7}, {11, 7}, {15, 7}, {1, 1}, {1, 2}}));
  try {
    allocate_static_data(fixture(), plan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientSpectrum);
  }
}

TEST(StaticAllocTest, ChannelsPerPan) {
  EXPECT_EQ(channels_per_pan(14, 3), 4);
  EXPECT_EQ(channels_per_pan(20, 3), 6);
  EXPECT_EQ(channels_per_pan(24, 3), 8);
  EXPECT_EQ(channels_per_pan(28, 3), 9);
  EXPECT_EQ(channels_per_pan(14, 2), 7);
  EXPECT_THROW(channels_per_pan(14, 0), Error);
}

TEST(StaticAllocTest, CsvRows) {
  const auto lattice = fixture();
  const auto plan = plan_for(DomainName::kEurope);
  StaticAllocation a{allocate_control(lattice, plan), allocate_static_data(lattice, plan)};
  std::ostringstream os;
  write_static_csv(os, lattice, a);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "i,j,control_phy,control_code,data_channels");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4);
    EXPECT_EQ(std::count(line.begin(), line.end(), ';'), 3);
  }
  EXPECT_EQ(rows, 12);
}

}  // namespace
}  // namespace hexalloc
