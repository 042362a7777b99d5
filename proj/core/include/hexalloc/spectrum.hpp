#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hexalloc {

/// Physical UWB channel paired with a preamble sequence code. Two logical
/// channels interfere only when both members are equal.
struct LogicalChannel {
  int phy_channel = 0;  // 0..15
  int code = 1;         // 1..8

  friend constexpr auto operator<=>(const LogicalChannel&, const LogicalChannel&) = default;
};

std::string to_string(const LogicalChannel& ch);
bool is_valid(const LogicalChannel& ch);

enum class DomainName { kUS, kEurope, kJapan, kCustom };

std::string_view to_string(DomainName name);
std::optional<DomainName> parse_domain_name(std::string_view text);

struct RegulatoryDomain {
  DomainName name = DomainName::kCustom;
  std::vector<LogicalChannel> total_channels;  // sorted, unique
};

/// Built-in channel table: 32 (US), 18 (Europe), 22 (Japan) logical channels.
RegulatoryDomain default_domain(DomainName name);

/// Validates and sorts a user-supplied table. Throws kInvalidDomainTable.
RegulatoryDomain custom_domain(DomainName name, std::vector<LogicalChannel> channels);

/// Channels eligible for control traffic: the overlapping physical channels
/// 4, 7, 11 and 15 under sequence codes 7 and 8.
std::span<const LogicalChannel> control_candidates();

/// Code-7-only subset of control_candidates(). Using it on the US table leaves
/// 28 data channels instead of 24.
std::span<const LogicalChannel> restricted_control_candidates();

struct ChannelPlan {
  DomainName domain = DomainName::kCustom;
  std::vector<LogicalChannel> control_set;  // sorted
  std::vector<LogicalChannel> data_set;     // sorted
};

/// Splits a domain into control (domain ∩ candidates) and data (the rest).
/// Throws kInvalidDomainTable when no control channel survives.
ChannelPlan channel_plan(const RegulatoryDomain& domain,
                         std::span<const LogicalChannel> candidates = control_candidates());

struct ChannelPartition {
  std::vector<std::vector<LogicalChannel>> groups;
  std::vector<LogicalChannel> unassigned;
};

/// Cuts `channels` into `k_groups` consecutive runs of `group_size`, in input
/// order. Throws kCapacity if there are not enough channels.
ChannelPartition partition_channels(std::span<const LogicalChannel> channels, int k_groups, int group_size);

}  // namespace hexalloc
