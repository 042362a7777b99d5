#include "hexalloc/spectrum.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hexalloc/error.hpp"

namespace hexalloc {
namespace {

constexpr std::array<LogicalChannel, 8> kControlCandidates = {{
    {4, 7}, {4, 8}, {7, 7}, {7, 8}, {11, 7}, {11, 8}, {15, 7}, {15, 8},
}};

constexpr std::array<LogicalChannel, 4> kRestrictedControlCandidates = {{
    {4, 7}, {7, 7}, {11, 7}, {15, 7},
}};

// Preamble code pair used on each physical channel (index = phy channel).
constexpr std::array<int, 16> kFirstCode = {1, 1, 3, 5, 7, 3, 5, 7, 1, 3, 5, 7, 1, 3, 5, 7};

std::vector<LogicalChannel> channels_for(std::initializer_list<int> phys) {
  std::vector<LogicalChannel> out;
  for (int phy : phys) {
    const int first = kFirstCode[static_cast<std::size_t>(phy)];
    out.push_back({phy, first});
    out.push_back({phy, first + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(const LogicalChannel& ch) {
  return std::to_string(ch.phy_channel) + ":" + std::to_string(ch.code);
}

bool is_valid(const LogicalChannel& ch) {
  return ch.phy_channel >= 0 && ch.phy_channel <= 15 && ch.code >= 1 && ch.code <= 8;
}

std::string_view to_string(DomainName name) {
  switch (name) {
    case DomainName::kUS: return "US";
    case DomainName::kEurope: return "Europe";
    case DomainName::kJapan: return "Japan";
    case DomainName::kCustom: return "custom";
  }
  return "custom";
}

std::optional<DomainName> parse_domain_name(std::string_view text) {
  if (text == "US") return DomainName::kUS;
  if (text == "Europe") return DomainName::kEurope;
  if (text == "Japan") return DomainName::kJapan;
  if (text == "custom") return DomainName::kCustom;
  return std::nullopt;
}

RegulatoryDomain default_domain(DomainName name) {
  switch (name) {
    case DomainName::kUS:
      return {name, channels_for({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15})};
    case DomainName::kEurope:
      // Control on 4 and 7 only; seven low/high band channels for data.
      return {name, channels_for({4, 5, 6, 7, 8, 9, 10, 12, 13})};
    case DomainName::kJapan:
      return {name, channels_for({0, 1, 2, 3, 8, 9, 10, 11, 12, 13, 14})};
    case DomainName::kCustom:
      break;
  }
  throw Error(ErrorCode::kInvalidDomainTable, "no built-in table for a custom domain");
}

RegulatoryDomain custom_domain(DomainName name, std::vector<LogicalChannel> channels) {
  for (const auto& ch : channels) {
    if (!is_valid(ch)) {
      throw Error(ErrorCode::kInvalidDomainTable, "channel " + to_string(ch) + " out of range");
    }
  }
  std::sort(channels.begin(), channels.end());
  if (std::adjacent_find(channels.begin(), channels.end()) != channels.end()) {
    throw Error(ErrorCode::kInvalidDomainTable, "duplicate channel in table");
  }
  if (channels.empty()) {
    throw Error(ErrorCode::kInvalidDomainTable, "channel table is empty");
  }
  return {name, std::move(channels)};
}

std::span<const LogicalChannel> control_candidates() { return kControlCandidates; }

std::span<const LogicalChannel> restricted_control_candidates() { return kRestrictedControlCandidates; }

ChannelPlan channel_plan(const RegulatoryDomain& domain, std::span<const LogicalChannel> candidates) {
  const std::set<LogicalChannel> control(candidates.begin(), candidates.end());
  ChannelPlan plan;
  plan.domain = domain.name;
  std::vector<LogicalChannel> sorted = domain.total_channels;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& ch : sorted) {
    (control.contains(ch) ? plan.control_set : plan.data_set).push_back(ch);
  }
  if (plan.control_set.empty()) {
    throw Error(ErrorCode::kInvalidDomainTable,
                "domain " + std::string(to_string(domain.name)) + " has no control-capable channel");
  }
  return plan;
}

ChannelPartition partition_channels(std::span<const LogicalChannel> channels, int k_groups, int group_size) {
  if (k_groups <= 0 || group_size <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "group count and size must be positive");
  }
  const std::set<LogicalChannel> distinct(channels.begin(), channels.end());
  if (distinct.size() != channels.size()) {
    throw Error(ErrorCode::kInvalidArgument, "channel list contains duplicates");
  }
  const std::size_t needed = static_cast<std::size_t>(k_groups) * static_cast<std::size_t>(group_size);
  if (needed > channels.size()) {
    throw Error(ErrorCode::kCapacity, std::to_string(k_groups) + " groups of " + std::to_string(group_size) +
                                          " need " + std::to_string(needed) + " channels, have " +
                                          std::to_string(channels.size()));
  }
  ChannelPartition out;
  auto it = channels.begin();
  for (int g = 0; g < k_groups; ++g) {
    out.groups.emplace_back(it, it + group_size);
    it += group_size;
  }
  out.unassigned.assign(it, channels.end());
  return out;
}

}  // namespace hexalloc
