#pragma once

#include "posenergy/model.hpp"
#include "posenergy/regression.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace posenergy {

inline constexpr double default_l_min = 0.01;
inline constexpr std::size_t default_grid_points = 200;

/// Point estimate at the latest observation, at the optimistic, average and
/// pessimistic per-validator power.
struct ContemporaryEstimate {
    NetworkId network;
    Date date;
    double global_kw_lower;
    double global_kw_mid;
    double global_kw_upper;
    double kwh_per_tx_lower;
    double kwh_per_tx_mid;
    double kwh_per_tx_upper;
    double tps;
    std::uint64_t validators;
};

struct BandPoint {
    double tps;
    double kwh_per_tx_lower;
    double kwh_per_tx_upper;
    /// False where the fitted validator count drops below one.
    bool physical;
};

struct ConsumptionBand {
    NetworkId network;
    std::vector<BandPoint> points;
};

/// Throws DomainError on zero throughput and InvalidArgument when the
/// observation and bounds name different networks.
ContemporaryEstimate contemporary_estimate(const NetworkObservation& obs,
                                           const ValidatorPowerBounds& bounds);

/// Evaluates the fitted per-transaction energy over `grid`. Predicted
/// validator counts below one are flagged non-physical and evaluated at
/// max(prediction, 0).
ConsumptionBand consumption_band(const RegressionFit& fit, const NetworkProfile& profile,
                                 std::span<const double> grid);

/// `n_points` log-spaced throughputs from `l_min` to `profile.max_tps`,
/// both endpoints exact.
std::vector<double> default_grid(const NetworkProfile& profile, std::size_t n_points,
                                 double l_min = default_l_min);

/// Latest non-synthetic observation, or nullptr when there is none.
const NetworkObservation* latest_observation(std::span<const NetworkObservation> observations);

} // namespace posenergy
