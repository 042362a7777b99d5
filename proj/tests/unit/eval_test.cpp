#include "hexalloc/eval.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "config.hpp"
#include "hexalloc/error.hpp"
#include "test_support.hpp"

namespace hexalloc {
namespace {

// McNaughton wrap-around: fills channels slot by slot in request order and
// reports whether every request fits within `horizon` slots without running
// on two channels in the same slot.
bool wraparound_fits(const std::vector<int>& requests, int channels, std::int64_t horizon) {
  std::vector<std::vector<int>> grid(channels, std::vector<int>(horizon, -1));
  int ch = 0;
  std::int64_t slot = 0;
  for (std::size_t r = 0; r < requests.size(); ++r) {
    for (int n = 0; n < requests[r]; ++n) {
      if (ch >= channels) return false;
      grid[ch][slot] = static_cast<int>(r);
      if (++slot == horizon) {
        slot = 0;
        ++ch;
      }
    }
  }
  for (std::int64_t t = 0; t < horizon; ++t) {
    std::set<int> seen;
    for (int c = 0; c < channels; ++c) {
      if (grid[c][t] >= 0 && !seen.insert(grid[c][t]).second) return false;
    }
  }
  return true;
}

std::int64_t oracle_makespan(const std::vector<int>& requests, int channels) {
  const int total = std::accumulate(requests.begin(), requests.end(), 0);
  for (std::int64_t t = 1; t <= total; ++t) {
    if (wraparound_fits(requests, channels, t)) return t;
  }
  return total;
}

TEST(EvalTest, MakespanExamples) {
  const std::vector<int> eight(8, 3);
  EXPECT_EQ(makespan(eight, 1), 24);
  EXPECT_EQ(makespan(eight, 4), 6);
  EXPECT_EQ(makespan(eight, 7), 4);
  EXPECT_EQ(makespan(eight, 14), 3);
  EXPECT_EQ(makespan(eight, 100), 3);
  const std::vector<int> lopsided{10, 1, 1};
  EXPECT_EQ(makespan(lopsided, 3), 10);
}

TEST(EvalTest, MakespanMatchesWraparoundSchedule) {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> count(1, 9);
  std::uniform_int_distribution<int> chans(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> req(count(rng));
    for (auto& r : req) r = len(rng);
    const int c = chans(rng);
    EXPECT_EQ(makespan(req, c), oracle_makespan(req, c)) << "trial " << trial;
  }
}

TEST(EvalTest, MakespanErrors) {
  const std::vector<int> req{1, 2};
  EXPECT_THROW(makespan(req, 0), Error);
  const std::vector<int> bad{1, 0};
  EXPECT_THROW(makespan(bad, 2), Error);
}

TEST(EvalTest, DelayDecrease) {
  EXPECT_DOUBLE_EQ(delay_decrease_percent(24, 6), 75.0);
  EXPECT_NEAR(delay_decrease_percent(24, 4), 83.333333, 1e-6);
  EXPECT_DOUBLE_EQ(delay_decrease_percent(24, 3), 87.5);
  EXPECT_DOUBLE_EQ(delay_decrease_percent(24, 24), 0.0);
  try {
    delay_decrease_percent(6, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrdering);
  }
  EXPECT_THROW(delay_decrease_percent(6, 0), Error);
}

TEST(EvalTest, RequestScenario) {
  RequestScenario s;
  s.per_pan[2] = {5, 5};
  EXPECT_EQ(s.for_pan(0), std::vector<int>(8, 3));
  EXPECT_EQ(s.for_pan(2), (std::vector<int>{5, 5}));
  EXPECT_NO_THROW(s.validate());
  s.per_pan[1] = {};
  EXPECT_THROW(s.validate(), Error);
}

TEST(EvalTest, SchemeNames) {
  EXPECT_EQ(to_string(Scheme::kSingle), "single");
  EXPECT_EQ(to_string(Scheme::kStatic), "static");
  EXPECT_EQ(to_string(Scheme::kDynamic), "dynamic");
}

TEST(EvalTest, ReportedMaxima) {
  EXPECT_EQ(reported_maxima(DomainName::kEurope)->static_max, 4);
  EXPECT_EQ(reported_maxima(DomainName::kEurope)->dynamic_max, 14);
  EXPECT_EQ(reported_maxima(DomainName::kUS)->dynamic_max, 28);
  EXPECT_FALSE(reported_maxima(DomainName::kCustom).has_value());
}

TEST(EvalTest, ReferenceScenario) {
  const auto cfg = cli::load_config(std::string(HEXALLOC_SOURCE_DIR) + "/configs/reference-12pan.json");
  const auto ev = compare_schemes(cfg.lattice, cfg.superframes, cfg.plan(), cfg.workload);
  ASSERT_EQ(ev.reports.size(), 3u);
  EXPECT_EQ(ev.k_static, 4);
  EXPECT_EQ(ev.structure.u_cycles, 32);

  const auto& single = ev.reports[0];
  const auto& fixed = ev.reports[1];
  const auto& dynamic = ev.reports[2];
  ASSERT_FALSE(single.rows.empty());
  for (const auto& row : single.rows) {
    EXPECT_EQ(row.channels, 1);
    EXPECT_EQ(row.makespan, 24);
    EXPECT_DOUBLE_EQ(row.delay_decrease_percent, 0.0);
  }
  for (const auto& row : fixed.rows) {
    EXPECT_EQ(row.makespan, 6);
    EXPECT_DOUBLE_EQ(row.delay_decrease_percent, 75.0);
  }
  std::set<std::int64_t> dyn;
  for (const auto& row : dynamic.rows) {
    dyn.insert(row.makespan);
    EXPECT_EQ(row.channels, ev.dynamic.k(row.pan, row.cycle));
    EXPECT_DOUBLE_EQ(row.delay_decrease_percent, delay_decrease_percent(24, row.makespan));
  }
  EXPECT_EQ(dyn, (std::set<std::int64_t>{3, 4, 6}));
  EXPECT_EQ(fixed.max_channels, 4);
  EXPECT_EQ(dynamic.max_channels, 14);
  EXPECT_EQ(single.rows.size(), dynamic.rows.size());
}

TEST(EvalTest, DynamicNeverSlowerThanStatic) {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = testing::random_scenario(rng);
    const auto ev = compare_schemes(s.lattice, s.configs, s.plan, RequestScenario{});
    ASSERT_EQ(ev.reports[1].rows.size(), ev.reports[2].rows.size());
    for (std::size_t r = 0; r < ev.reports[1].rows.size(); ++r) {
      EXPECT_LE(ev.reports[2].rows[r].makespan, ev.reports[1].rows[r].makespan);
      EXPECT_LE(ev.reports[1].rows[r].makespan, ev.reports[0].rows[r].makespan);
    }
  }
}

}  // namespace
}  // namespace hexalloc
