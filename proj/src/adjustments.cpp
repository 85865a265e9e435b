#include "posenergy/adjustments.hpp"

#include "posenergy/errors.hpp"

#include <cmath>

namespace posenergy {

void VoteRatioRecord::validate() const {
    if (total_tx_per_day == 0) {
        throw DomainError(date.iso() + ": total transactions per day is zero");
    }
    if (nonvote_tx_per_day > total_tx_per_day) {
        throw InvalidArgument(date.iso() + ": nonvote count exceeds total count");
    }
    if (!std::isfinite(reported_tps) || reported_tps < 0.0) {
        throw InvalidArgument(date.iso() + ": reported throughput must be >= 0");
    }
}

double nonvote_ratio(const VoteRatioRecord& rec) {
    rec.validate();
    return static_cast<double>(rec.nonvote_tx_per_day) / static_cast<double>(rec.total_tx_per_day);
}

double adjust_tps(double reported_tps, double ratio) {
    if (!(ratio >= 0.0 && ratio <= 1.0)) {
        throw InvalidArgument("nonvote ratio must lie in [0, 1]");
    }
    if (!(reported_tps >= 0.0)) {
        throw InvalidArgument("reported throughput must be >= 0");
    }
    return reported_tps * ratio;
}

double adjusted_max_tps(double postulated_max, std::span<const VoteRatioRecord> records) {
    if (records.empty()) {
        throw InsufficientDataError("adjusted_max_tps needs at least one vote ratio record");
    }
    double sum = 0.0;
    for (const auto& rec : records) {
        sum += nonvote_ratio(rec);
    }
    return postulated_max * (sum / static_cast<double>(records.size()));
}

} // namespace posenergy
