#include "posenergy/model.hpp"

#include "posenergy/errors.hpp"
#include "posenergy/units.hpp"

#include <algorithm>
#include <cmath>

namespace posenergy {

NetworkId::NetworkId(std::string name) : name_(std::move(name)) {
    if (name_.empty()) {
        throw InvalidArgument("network id must not be empty");
    }
    bool ok = std::all_of(name_.begin(), name_.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    });
    if (!ok) {
        throw InvalidArgument("network id '" + name_ + "' must be lowercase ASCII");
    }
}

void NetworkObservation::validate() const {
    if (!std::isfinite(tps) || tps < 0.0) {
        throw InvalidArgument(network.str() + " " + date.iso() + ": throughput must be >= 0");
    }
}

void ValidatorPowerBounds::validate() const {
    if (!(std::isfinite(lower_w) && std::isfinite(upper_w) && lower_w > 0.0 && lower_w <= upper_w)) {
        throw InvalidArgument(network.str() + ": power bounds need 0 < lower_w <= upper_w");
    }
}

void NetworkProfile::validate() const {
    bounds.validate();
    if (bounds.network != network) {
        throw InvalidArgument("profile for " + network.str() + " carries bounds for " +
                              bounds.network.str());
    }
    if (!(std::isfinite(max_tps) && max_tps > 0.0)) {
        throw InvalidArgument(network.str() + ": max_tps must be > 0");
    }
}

double global_power_kw(double validators, double watts_per_validator) noexcept {
    return validators * watts_per_validator / 1000.0;
}

double energy_per_tx_kwh(double validators, double watts_per_validator, double tps) {
    if (!(tps > 0.0)) {
        throw DomainError("energy per transaction is undefined at throughput " + std::to_string(tps));
    }
    return validators * watts_per_validator / (tps * joules_per_kwh);
}

} // namespace posenergy
