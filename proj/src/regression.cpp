#include "posenergy/regression.hpp"

#include "posenergy/errors.hpp"

#include <algorithm>
#include <cmath>

namespace posenergy {

NetworkObservation origin_observation(const NetworkObservation& like) {
    NetworkObservation origin{like.network, like.date, 0, 0.0, true, "origin assumption"};
    return origin;
}

std::vector<NetworkObservation> regression_rows(std::span<const NetworkObservation> observations,
                                                bool include_origin) {
    std::vector<NetworkObservation> rows(observations.begin(), observations.end());
    if (include_origin && !rows.empty()) {
        rows.push_back(origin_observation(rows.front()));
    }
    return rows;
}

RegressionFit fit_affine(std::span<const NetworkObservation> observations, bool include_origin) {
    auto rows = regression_rows(observations, include_origin);
    if (rows.size() < 2) {
        throw InsufficientDataError("affine fit needs at least two observations, got " +
                                    std::to_string(rows.size()));
    }
    const NetworkId& network = rows.front().network;
    double max_tps = 0.0;
    double sum_x = 0.0;
    double sum_y = 0.0;
    for (const auto& row : rows) {
        if (row.network != network) {
            throw InvalidArgument("fit_affine got observations for both " + network.str() + " and " +
                                  row.network.str());
        }
        row.validate();
        max_tps = std::max(max_tps, row.tps);
        sum_x += row.tps;
        sum_y += static_cast<double>(row.validators);
    }
    const double n = static_cast<double>(rows.size());
    const double mean_x = sum_x / n;
    const double mean_y = sum_y / n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& row : rows) {
        const double dx = row.tps - mean_x;
        sxx += dx * dx;
        sxy += dx * (static_cast<double>(row.validators) - mean_y);
    }
    if (!(sxx / n >= 1e-12 * max_tps * max_tps) || sxx == 0.0) {
        throw DegenerateVarianceError(network.str() + ": all throughput values coincide");
    }

    RegressionFit fit{network, 0.0, 0.0, 0.0, rows.size(), include_origin};
    fit.lambda = sxy / sxx;
    fit.k = mean_y - fit.lambda * mean_x;
    fit.r2 = r_squared(fit, observations);
    return fit;
}

double r_squared(const RegressionFit& fit, std::span<const NetworkObservation> observations) {
    auto rows = regression_rows(observations, fit.origin_included);
    if (rows.empty()) {
        return 1.0;
    }
    double mean_y = 0.0;
    double max_abs_y = 0.0;
    for (const auto& row : rows) {
        mean_y += static_cast<double>(row.validators);
        max_abs_y = std::max(max_abs_y, static_cast<double>(row.validators));
    }
    mean_y /= static_cast<double>(rows.size());

    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (const auto& row : rows) {
        const double y = static_cast<double>(row.validators);
        const double resid = y - predict_validators(fit, row.tps);
        ss_res += resid * resid;
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    // Rounding floor relative to the data scale.
    const double floor = 1e-24 * static_cast<double>(rows.size()) * std::max(1.0, max_abs_y * max_abs_y);
    if (ss_tot <= floor) {
        return ss_res <= floor ? 1.0 : 0.0;
    }
    if (ss_res <= floor) {
        return 1.0;
    }
    return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}

} // namespace posenergy
