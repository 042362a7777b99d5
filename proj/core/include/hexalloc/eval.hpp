#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hexalloc/dynamic_alloc.hpp"
#include "hexalloc/lattice.hpp"
#include "hexalloc/spectrum.hpp"

namespace hexalloc {

/// Slot requests served by each active PAN in one elementary cycle.
struct RequestScenario {
  std::vector<int> default_requests = std::vector<int>(8, 3);
  std::map<std::size_t, std::vector<int>> per_pan;  // 0-based PAN index

  const std::vector<int>& for_pan(std::size_t pan) const;
  /// Throws kInvalidArgument on an empty list or a non-positive slot count.
  void validate() const;
};

/// Slots needed to serve `requests` on `num_channels` channels. Requests
/// split freely across channels, but none finishes faster than its own length:
/// max(longest request, ceil(total / num_channels)).
std::int64_t makespan(std::span<const int> requests, int num_channels);

/// 100 * (baseline - improved) / baseline. Throws kOrdering when
/// improved > baseline and kInvalidArgument when improved <= 0.
double delay_decrease_percent(std::int64_t baseline, std::int64_t improved);

enum class Scheme { kSingle, kStatic, kDynamic };
std::string_view to_string(Scheme scheme);

struct SchemeRow {
  std::size_t pan = 0;     // 0-based index into the superframe list
  std::size_t cycle = 0;   // 0-based elementary cycle
  int channels = 0;
  std::int64_t makespan = 0;
  double delay_decrease_percent = 0.0;  // vs. the single-channel makespan
};

struct SchemeReport {
  Scheme scheme = Scheme::kSingle;
  std::vector<SchemeRow> rows;              // active (pan, cycle) pairs only
  std::vector<int> max_channels_per_pan;    // over the major cycle
  int max_channels = 0;
};

/// Reference values for the largest per-PAN grant (static, dynamic), shown
/// next to the computed maxima.
struct ReportedMaxima {
  int static_max = 0;
  int dynamic_max = 0;
};
std::optional<ReportedMaxima> reported_maxima(DomainName domain);

struct Evaluation {
  CycleStructure structure;
  int k_static = 0;
  AllocationMatrix dynamic;
  std::vector<SchemeReport> reports;  // single, static, dynamic
};

/// Single channel, static (k_static everywhere) and dynamic (per-cycle grant)
/// makespans for every active PAN and elementary cycle.
Evaluation compare_schemes(const Lattice& lattice, std::span<const SuperframeConfig> configs,
                           const ChannelPlan& plan, const RequestScenario& scenario,
                           const SolverOptions& options = {});

}  // namespace hexalloc
