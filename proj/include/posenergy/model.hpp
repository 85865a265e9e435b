#pragma once

#include "posenergy/date.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace posenergy {

/// Short lowercase identifier of a network ("algorand", "hedera").
class NetworkId {
public:
    explicit NetworkId(std::string name);

    const std::string& str() const noexcept { return name_; }

    auto operator<=>(const NetworkId&) const = default;

private:
    std::string name_;
};

/// One dated (validator count, throughput) measurement. `synthetic` marks
/// the injected zero-throughput/zero-validator point.
struct NetworkObservation {
    NetworkId network;
    Date date;
    std::uint64_t validators = 0;
    double tps = 0.0;
    bool synthetic = false;
    std::string provenance;

    /// Throws InvalidArgument on negative or non-finite throughput.
    void validate() const;

    bool same_values(const NetworkObservation& other) const noexcept {
        return validators == other.validators && tps == other.tps && synthetic == other.synthetic;
    }
};

/// Per-validator power draw range in watts.
struct ValidatorPowerBounds {
    NetworkId network;
    double lower_w;
    double upper_w;
    std::string source_note;

    void validate() const;
    double mid_w() const noexcept { return 0.5 * (lower_w + upper_w); }
};

struct NetworkProfile {
    NetworkId network;
    ValidatorPowerBounds bounds;
    double max_tps;

    void validate() const;
};

/// N_val * p, in kW.
double global_power_kw(double validators, double watts_per_validator) noexcept;

/// N_val * p / l converted to kWh per transaction. Throws DomainError when
/// tps <= 0.
double energy_per_tx_kwh(double validators, double watts_per_validator, double tps);

} // namespace posenergy
