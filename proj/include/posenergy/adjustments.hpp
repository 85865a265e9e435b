#pragma once

#include "posenergy/date.hpp"

#include <cstdint>
#include <span>

namespace posenergy {

/// One day of vote/nonvote transaction counts for a network whose headline
/// throughput includes consensus vote transactions.
struct VoteRatioRecord {
    Date date;
    std::uint64_t nonvote_tx_per_day;
    std::uint64_t total_tx_per_day;
    double reported_tps;

    void validate() const;
};

/// Share of the day's transactions that are not votes.
double nonvote_ratio(const VoteRatioRecord& rec);

/// Reported throughput scaled down to nonvote traffic.
double adjust_tps(double reported_tps, double ratio);

/// Postulated maximum throughput times the unweighted mean of per-record
/// ratios. Throws InsufficientDataError when `records` is empty.
double adjusted_max_tps(double postulated_max, std::span<const VoteRatioRecord> records);

} // namespace posenergy
