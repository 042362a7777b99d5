#include "hexalloc/eval.hpp"

#include <algorithm>
#include <numeric>

#include "hexalloc/error.hpp"
#include "hexalloc/static_alloc.hpp"

namespace hexalloc {

const std::vector<int>& RequestScenario::for_pan(std::size_t pan) const {
  auto it = per_pan.find(pan);
  return it == per_pan.end() ? default_requests : it->second;
}

void RequestScenario::validate() const {
  auto check = [](const std::vector<int>& requests, const std::string& who) {
    if (requests.empty()) throw Error(ErrorCode::kInvalidArgument, who + ": request list is empty");
    for (int r : requests) {
      if (r <= 0) throw Error(ErrorCode::kInvalidArgument, who + ": slot counts must be positive");
    }
  };
  check(default_requests, "default workload");
  for (const auto& [pan, requests] : per_pan) check(requests, "PAN " + std::to_string(pan + 1));
}

std::int64_t makespan(std::span<const int> requests, int num_channels) {
  if (num_channels < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one channel");
  if (requests.empty()) throw Error(ErrorCode::kInvalidArgument, "request list is empty");
  std::int64_t total = 0;
  std::int64_t longest = 0;
  for (int r : requests) {
    if (r <= 0) throw Error(ErrorCode::kInvalidArgument, "slot counts must be positive");
    total += r;
    longest = std::max<std::int64_t>(longest, r);
  }
  const std::int64_t spread = (total + num_channels - 1) / num_channels;
  return std::max(longest, spread);
}

double delay_decrease_percent(std::int64_t baseline, std::int64_t improved) {
  if (improved <= 0) throw Error(ErrorCode::kInvalidArgument, "improved delay must be positive");
  if (improved > baseline) {
    throw Error(ErrorCode::kOrdering, "improved delay " + std::to_string(improved) + " exceeds baseline " +
                                          std::to_string(baseline));
  }
  return 100.0 * static_cast<double>(baseline - improved) / static_cast<double>(baseline);
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kSingle: return "single";
    case Scheme::kStatic: return "static";
    case Scheme::kDynamic: return "dynamic";
  }
  return "single";
}

std::optional<ReportedMaxima> reported_maxima(DomainName domain) {
  switch (domain) {
    case DomainName::kUS: return ReportedMaxima{8, 28};
    case DomainName::kEurope: return ReportedMaxima{4, 14};
    case DomainName::kJapan: return ReportedMaxima{6, 18};
    case DomainName::kCustom: break;
  }
  return std::nullopt;
}

Evaluation compare_schemes(const Lattice& lattice, std::span<const SuperframeConfig> configs,
                           const ChannelPlan& plan, const RequestScenario& scenario, const SolverOptions& options) {
  scenario.validate();
  for (const auto& [pan, requests] : scenario.per_pan) {
    if (pan >= configs.size()) {
      throw Error(ErrorCode::kInvalidArgument, "workload names PAN " + std::to_string(pan + 1) + " but only " +
                                                   std::to_string(configs.size()) + " are configured");
    }
  }

  Evaluation out;
  out.structure = cycle_structure(configs);
  out.k_static = allocate_static_data(lattice, plan, options).k_static;
  out.dynamic = allocate_dynamic(lattice, configs, plan, {options, std::nullopt});

  for (Scheme scheme : {Scheme::kSingle, Scheme::kStatic, Scheme::kDynamic}) {
    SchemeReport report;
    report.scheme = scheme;
    report.max_channels_per_pan.assign(configs.size(), 0);
    for (std::size_t p = 0; p < configs.size(); ++p) {
      const auto& requests = scenario.for_pan(p);
      const std::int64_t baseline = makespan(requests, 1);
      for (std::size_t t = 0; t < out.dynamic.cycles(); ++t) {
        const int dyn = out.dynamic.k(p, t);
        if (dyn == 0) continue;  // inactive
        SchemeRow row{p, t, 0, 0, 0.0};
        switch (scheme) {
          case Scheme::kSingle: row.channels = 1; break;
          case Scheme::kStatic: row.channels = out.k_static; break;
          case Scheme::kDynamic: row.channels = dyn; break;
        }
        row.makespan = makespan(requests, row.channels);
        row.delay_decrease_percent = delay_decrease_percent(baseline, row.makespan);
        report.max_channels_per_pan[p] = std::max(report.max_channels_per_pan[p], row.channels);
        report.rows.push_back(row);
      }
    }
    report.max_channels = report.max_channels_per_pan.empty()
                              ? 0
                              : *std::max_element(report.max_channels_per_pan.begin(),
                                                  report.max_channels_per_pan.end());
    out.reports.push_back(std::move(report));
  }
  return out;
}

}  // namespace hexalloc
