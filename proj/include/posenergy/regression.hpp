#pragma once

#include "posenergy/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace posenergy {

/// Affine validator model N_val(l) = k + lambda * l.
///
/// The published model is typeset as a product of k and lambda*l, but the
/// tabulated coefficients (a capped network with k = 297, lambda = 0) only
/// make sense as an intercept plus slope, so that is what is fitted.
struct RegressionFit {
    NetworkId network;
    double k;
    double lambda;
    double r2;
    std::size_t n_points;
    bool origin_included;
};

/// The (tps = 0, validators = 0) row appended when the origin assumption is on.
NetworkObservation origin_observation(const NetworkObservation& like);

/// Observations plus the synthetic origin row when `include_origin`.
std::vector<NetworkObservation> regression_rows(std::span<const NetworkObservation> observations,
                                                bool include_origin);

/// Ordinary least squares of validators on throughput, using centered sums.
/// The origin enters as one ordinary row, not as a constraint.
///
/// Throws InsufficientDataError with fewer than two rows,
/// DegenerateVarianceError when every throughput coincides (variance below
/// 1e-12 * max_tps^2), and InvalidArgument when rows mix networks.
RegressionFit fit_affine(std::span<const NetworkObservation> observations, bool include_origin);

/// 1 - SS_res / SS_tot over the rows the fit was built from (the origin row
/// is re-added when `fit.origin_included`). 1 when both sums vanish; clamped
/// to [0, 1].
double r_squared(const RegressionFit& fit, std::span<const NetworkObservation> observations);

/// Raw affine prediction; may be negative.
inline double predict_validators(const RegressionFit& fit, double tps) noexcept {
    return fit.k + fit.lambda * tps;
}

} // namespace posenergy
