#include "hexalloc/dynamic_alloc.hpp"

#include <gtest/gtest.h>

#include "config.hpp"
#include "hexalloc/error.hpp"
#include "test_support.hpp"

namespace hexalloc {
namespace {

ChannelPlan europe() { return channel_plan(default_domain(DomainName::kEurope)); }

cli::ScenarioConfig reference_scenario() {
  return cli::load_config(std::string(HEXALLOC_SOURCE_DIR) + "/configs/reference-12pan.json");
}

TEST(DynamicAllocTest, CycleStructureExamples) {
  const std::vector<SuperframeConfig> one{{{0, 0}, 0, 0, 0}};
  EXPECT_EQ(cycle_structure(one), (CycleStructure{1, 1, 1}));
  const std::vector<SuperframeConfig> two{{{0, 0}, 1, 3, 0}, {{1, 1}, 0, 5, 0}};
  EXPECT_EQ(cycle_structure(two), (CycleStructure{32, 1, 32}));
  const std::vector<SuperframeConfig> coarse{{{0, 0}, 2, 3, 0}, {{1, 1}, 3, 4, 0}};
  EXPECT_EQ(cycle_structure(coarse), (CycleStructure{16, 4, 4}));
}

TEST(DynamicAllocTest, ReferenceScenarioCycleStructure) {
  const auto cfg = reference_scenario();
  EXPECT_EQ(cycle_structure(cfg.superframes), (CycleStructure{32, 1, 32}));
}

TEST(DynamicAllocTest, InvalidSuperframes) {
  auto code_of = [](std::vector<SuperframeConfig> cfgs) {
    try {
      cycle_structure(cfgs);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code_of({}), ErrorCode::kInvalidSuperframe);
  EXPECT_EQ(code_of({{{0, 0}, 3, 2, 0}}), ErrorCode::kInvalidSuperframe);
  EXPECT_EQ(code_of({{{0, 0}, 0, 15, 0}}), ErrorCode::kInvalidSuperframe);
  EXPECT_EQ(code_of({{{0, 0}, 0, 2, -1}}), ErrorCode::kInvalidSuperframe);
}

TEST(DynamicAllocTest, ActivityPatterns) {
  const std::vector<SuperframeConfig> cfgs{{{0, 0}, 1, 2, 0}, {{1, 1}, 0, 3, 0}, {{2, 2}, 2, 2, 0}};
  const auto structure = cycle_structure(cfgs);
  ASSERT_EQ(structure.u_cycles, 8);
  const auto act = activity_matrix(cfgs, structure);
  std::vector<std::size_t> on;
  for (std::size_t t = 0; t < 8; ++t) {
    if (act.active(0, t)) on.push_back(t);
  }
  EXPECT_EQ(on, (std::vector<std::size_t>{0, 1, 4, 5}));
  EXPECT_EQ(act.row_count(2), 8u);  // SO == BO
  EXPECT_EQ(act.row_count(1), 1u);
}

TEST(DynamicAllocTest, ActivityPhase) {
  const std::vector<SuperframeConfig> cfgs{{{0, 0}, 1, 2, 3}, {{1, 1}, 0, 3, 0}};
  const auto structure = cycle_structure(cfgs);
  const auto act = activity_matrix(cfgs, structure);
  std::vector<std::size_t> on;
  for (std::size_t t = 0; t < 8; ++t) {
    if (act.active(0, t)) on.push_back(t);
  }
  EXPECT_EQ(on, (std::vector<std::size_t>{0, 3, 4, 7}));

  const std::vector<SuperframeConfig> misaligned{{{0, 0}, 1, 2, 1}, {{1, 1}, 1, 3, 0}};
  EXPECT_THROW(activity_matrix(misaligned, cycle_structure(misaligned)), Error);
}

TEST(DynamicAllocTest, ActivityRowCounts) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = testing::random_scenario(rng);
    const auto structure = cycle_structure(s.configs);
    const auto act = activity_matrix(s.configs, structure);
    for (std::size_t p = 0; p < s.configs.size(); ++p) {
      const auto expected = (s.configs[p].superframe_duration() / structure.sd_min) *
                            (structure.bi_maj / s.configs[p].beacon_interval());
      EXPECT_EQ(act.row_count(p), static_cast<std::size_t>(expected));
    }
  }
}

TEST(DynamicAllocTest, AllFixturePansActive) {
  const auto lattice = Lattice::from_cells(twelve_cell_fixture(), 1.0);
  std::vector<SuperframeConfig> cfgs;
  for (const auto& c : lattice.cells()) cfgs.push_back({c, 2, 2, 0});
  const auto alloc = allocate_dynamic(lattice, cfgs, europe());
  ASSERT_EQ(alloc.cycles(), 1u);
  for (std::size_t p = 0; p < cfgs.size(); ++p) EXPECT_EQ(alloc.k(p, 0), 4);
  EXPECT_EQ(alloc.per_cycle_chi()[0], 3);
  EXPECT_EQ(alloc.per_cycle_k()[0], 4);
}

TEST(DynamicAllocTest, GrantsFollowActiveComponents) {
  const auto lattice = Lattice::from_cells(twelve_cell_fixture(), 1.0);
  // Cycle 0: everyone; cycle 1: (0,0), (1,1) interfering; cycle 2: only (0,0);
  // cycle 3: (0,0) and (2,4), metric 28.
  const std::vector<SuperframeConfig> cfgs{
      {{0, 0}, 2, 2, 0}, {{1, 1}, 1, 2, 0}, {{2, 4}, 0, 2, 0}, {{2, 6}, 0, 2, 0},
  };
  std::vector<SuperframeConfig> shifted = cfgs;
  shifted[2].phase = 3;
  shifted[3].phase = 0;
  const auto alloc = allocate_dynamic(lattice, shifted, europe());
  ASSERT_EQ(alloc.cycles(), 4u);
  // cycle 0: (0,0),(1,1) pair and (2,6) alone
  EXPECT_EQ(alloc.k(0, 0), 7);
  EXPECT_EQ(alloc.k(1, 0), 7);
  EXPECT_EQ(alloc.k(3, 0), 14);
  EXPECT_TRUE(testing::disjoint(alloc.channels(0, 0), alloc.channels(1, 0)));
  // cycle 1: the interfering pair only
  EXPECT_EQ(alloc.k(0, 1), 7);
  EXPECT_EQ(alloc.k(1, 1), 7);
  // cycle 2: single PAN
  EXPECT_EQ(alloc.k(0, 2), 14);
  EXPECT_EQ(alloc.channels(0, 2), europe().data_set);
  // cycle 3: two distant PANs both get everything
  EXPECT_EQ(alloc.k(0, 3), 14);
  EXPECT_EQ(alloc.k(2, 3), 14);
  EXPECT_EQ(alloc.k(1, 3), 0);
  EXPECT_TRUE(alloc.channels(1, 3).empty());
}

TEST(DynamicAllocTest, ReferenceScenarioGrants) {
  const auto cfg = reference_scenario();
  const auto alloc = allocate_dynamic(cfg.lattice, cfg.superframes, cfg.plan());
  auto grants = [&](std::size_t cycle_1based) {
    std::set<int> out;
    for (std::size_t p = 0; p < alloc.pans(); ++p) {
      if (alloc.k(p, cycle_1based - 1) > 0) out.insert(alloc.k(p, cycle_1based - 1));
    }
    return out;
  };
  for (std::size_t t : {1, 2, 17, 18}) EXPECT_EQ(grants(t), std::set<int>{4}) << "cycle " << t;
  for (std::size_t t : {3, 4, 9, 25}) EXPECT_EQ(grants(t), std::set<int>{7}) << "cycle " << t;
  for (std::size_t t : {5, 6, 7, 8, 10, 19, 20, 26}) EXPECT_EQ(grants(t), std::set<int>{14}) << "cycle " << t;
  EXPECT_EQ(alloc.k(10, 4), 14);  // PAN 11 alone in cycle 5
  EXPECT_EQ(alloc.k(2, 18), 14);  // PAN 3 alone in cycle 19
  EXPECT_EQ(alloc.k(5, 9), 14);   // PANs 6 and 10 in cycle 10
  EXPECT_EQ(alloc.k(9, 9), 14);
}

TEST(DynamicAllocTest, RejectsBadPans) {
  const auto lattice = Lattice::build(1, 1.0);
  const std::vector<SuperframeConfig> outside{{{2, 2}, 0, 0, 0}};
  try {
    allocate_dynamic(lattice, outside, europe());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInLattice);
  }
  const std::vector<SuperframeConfig> twice{{{0, 0}, 0, 0, 0}, {{0, 0}, 1, 1, 0}};
  EXPECT_THROW(allocate_dynamic(lattice, twice, europe()), Error);
}

TEST(DynamicAllocTest, RandomScenarioProperties) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_scenario(rng);
    const auto failures = testing::dynamic_property_violations(s);
    EXPECT_TRUE(failures.empty()) << "trial " << trial << ": " << failures.front();
  }
}

TEST(DynamicAllocTest, AlwaysOnReducesToStatic) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto failures = testing::all_active_violations(rng);
    EXPECT_TRUE(failures.empty()) << "trial " << trial << ": " << failures.front();
  }
}

}  // namespace
}  // namespace hexalloc
