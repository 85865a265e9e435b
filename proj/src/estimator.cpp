#include "posenergy/estimator.hpp"

#include "posenergy/errors.hpp"
#include "posenergy/units.hpp"

#include <algorithm>
#include <cmath>

namespace posenergy {

ContemporaryEstimate contemporary_estimate(const NetworkObservation& obs,
                                           const ValidatorPowerBounds& bounds) {
    if (obs.network != bounds.network) {
        throw InvalidArgument("observation for " + obs.network.str() + " paired with bounds for " +
                              bounds.network.str());
    }
    obs.validate();
    bounds.validate();
    if (!(obs.tps > 0.0)) {
        throw DomainError(obs.network.str() + " " + obs.date.iso() +
                          ": zero throughput, per-transaction energy is undefined");
    }
    const double n = static_cast<double>(obs.validators);
    ContemporaryEstimate est{obs.network, obs.date, 0, 0, 0, 0, 0, 0, obs.tps, obs.validators};
    est.global_kw_lower = global_power_kw(n, bounds.lower_w);
    est.global_kw_upper = global_power_kw(n, bounds.upper_w);
    est.global_kw_mid = 0.5 * (est.global_kw_lower + est.global_kw_upper);
    est.kwh_per_tx_lower = energy_per_tx_kwh(n, bounds.lower_w, obs.tps);
    est.kwh_per_tx_upper = energy_per_tx_kwh(n, bounds.upper_w, obs.tps);
    est.kwh_per_tx_mid = 0.5 * (est.kwh_per_tx_lower + est.kwh_per_tx_upper);
    return est;
}

ConsumptionBand consumption_band(const RegressionFit& fit, const NetworkProfile& profile,
                                 std::span<const double> grid) {
    profile.validate();
    if (fit.network != profile.network) {
        throw InvalidArgument("fit for " + fit.network.str() + " paired with profile for " +
                              profile.network.str());
    }
    if (grid.empty()) {
        throw DomainError(profile.network.str() + ": empty throughput grid");
    }
    ConsumptionBand band{profile.network, {}};
    band.points.reserve(grid.size());
    double previous = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double l = grid[i];
        if (!(l > 0.0 && l <= profile.max_tps)) {
            throw DomainError(profile.network.str() + ": grid value " + std::to_string(l) +
                              " outside (0, " + std::to_string(profile.max_tps) + "]");
        }
        if (i > 0 && !(l > previous)) {
            throw DomainError(profile.network.str() + ": grid must be strictly increasing");
        }
        previous = l;

        const double predicted = predict_validators(fit, l);
        const bool physical = predicted >= 1.0;
        // Validators per unit throughput, k/l + lambda; exactly lambda when k = 0.
        const double per_tps = predicted > 0.0 ? std::max(fit.k / l + fit.lambda, 0.0) : 0.0;
        band.points.push_back({l, per_tps * profile.bounds.lower_w / joules_per_kwh,
                               per_tps * profile.bounds.upper_w / joules_per_kwh, physical});
    }
    return band;
}

std::vector<double> default_grid(const NetworkProfile& profile, std::size_t n_points, double l_min) {
    if (n_points < 2 || !(l_min > 0.0) || !(l_min < profile.max_tps) || !std::isfinite(profile.max_tps)) {
        throw InvalidArgument(profile.network.str() + ": grid needs n_points >= 2 and 0 < l_min < max_tps");
    }
    const double lo = std::log10(l_min);
    const double hi = std::log10(profile.max_tps);
    const double step = (hi - lo) / static_cast<double>(n_points - 1);
    std::vector<double> grid(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        grid[i] = std::pow(10.0, lo + step * static_cast<double>(i));
    }
    grid.front() = l_min;
    grid.back() = profile.max_tps;
    return grid;
}

const NetworkObservation* latest_observation(std::span<const NetworkObservation> observations) {
    const NetworkObservation* latest = nullptr;
    for (const auto& obs : observations) {
        if (obs.synthetic) {
            continue;
        }
        if (latest == nullptr || latest->date < obs.date) {
            latest = &obs;
        }
    }
    return latest;
}

} // namespace posenergy
