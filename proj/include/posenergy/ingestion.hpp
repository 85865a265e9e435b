#pragma once

#include "posenergy/adjustments.hpp"
#include "posenergy/model.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace posenergy {

enum class ThroughputUnit { PerSecond, PerHour, PerDay };

/// Transactions per `unit` to transactions per second (86,400 s per day,
/// 3,600 s per hour).
double to_tps(double value, ThroughputUnit unit) noexcept;

/// Result of reading an observations file. Rows that carry both
/// `nonvote_per_day` and `total_per_day` also produce a vote ratio record;
/// such rows may leave `validators` empty, in which case they produce only
/// the vote ratio record.
struct SnapshotSet {
    std::vector<NetworkObservation> observations;
    std::vector<std::pair<NetworkId, VoteRatioRecord>> vote_ratios;
};

inline constexpr std::string_view observations_header =
    "network,date,validators,tps,nonvote_per_day,total_per_day,provenance";

/// Parses `network,date,validators,tps[,nonvote_per_day,total_per_day,provenance]`.
///
/// `tps` is transactions per second unless suffixed with `/s`, `/h` or
/// `/day`, e.g. `309222640/day`. Dates are ISO-8601, or day/month/year
/// slash dates resolved inside [2015-01-01, 2035-12-31]. An empty input
/// yields an empty set. Throws ParseError (with line number) and
/// DuplicateError on a repeated (network, date).
SnapshotSet parse_snapshots(std::istream& in, const std::string& source = "<observations>");
SnapshotSet load_snapshots(const std::filesystem::path& path);

/// Writes the canonical full-width form; `parse_snapshots` reads it back
/// unchanged.
void write_snapshots(std::ostream& out, const SnapshotSet& set);

/// Sorted by (network, date). Identical rows collapse (the lexicographically
/// smallest provenance is kept); rows that disagree on validators or
/// throughput for the same (network, date) raise ConflictError naming both.
std::vector<NetworkObservation> merge(std::span<const std::vector<NetworkObservation>> sets);

/// Observations for one network, in input order.
std::vector<NetworkObservation> observations_for(std::span<const NetworkObservation> observations,
                                                 const NetworkId& network);

/// `network,lower_w,upper_w,source`
std::map<NetworkId, ValidatorPowerBounds> parse_bounds(std::istream& in,
                                                       const std::string& source = "<bounds>");
std::map<NetworkId, ValidatorPowerBounds> load_bounds(const std::filesystem::path& path);

/// `network,max_tps,source`, joined with bounds. Throws MissingDataError
/// when a profile names a network without bounds.
std::map<NetworkId, NetworkProfile> parse_profiles(std::istream& in,
                                                   const std::map<NetworkId, ValidatorPowerBounds>& bounds,
                                                   const std::string& source = "<profiles>");
std::map<NetworkId, NetworkProfile> load_profiles(const std::filesystem::path& path,
                                                  const std::map<NetworkId, ValidatorPowerBounds>& bounds);

/// Published reference figures used to flag internally inconsistent rows:
/// `network,global_kw,kwh_per_tx`.
struct PublishedRow {
    NetworkId network;
    double global_kw;
    double kwh_per_tx;
};
std::vector<PublishedRow> load_published(const std::filesystem::path& path);
std::vector<PublishedRow> parse_published(std::istream& in, const std::string& source = "<published>");

} // namespace posenergy
