#include "posenergy/units.hpp"

#include "posenergy/errors.hpp"

#include <cmath>

namespace posenergy {

namespace {

// Watts for power units, joules for energy units.
double base_factor(EnergyUnit unit) noexcept {
    switch (unit) {
    case EnergyUnit::W:
        return 1.0;
    case EnergyUnit::kW:
        return 1e3;
    case EnergyUnit::J:
        return 1.0;
    case EnergyUnit::kWh:
        return joules_per_kwh;
    case EnergyUnit::GJ:
        return 1e9;
    case EnergyUnit::TWh:
        return 1e9 * joules_per_kwh;
    }
    return 1.0;
}

} // namespace

Dimension dimension_of(EnergyUnit unit) noexcept {
    return unit == EnergyUnit::W || unit == EnergyUnit::kW ? Dimension::Power : Dimension::Energy;
}

std::string_view unit_symbol(EnergyUnit unit) noexcept {
    switch (unit) {
    case EnergyUnit::W:
        return "W";
    case EnergyUnit::kW:
        return "kW";
    case EnergyUnit::kWh:
        return "kWh";
    case EnergyUnit::J:
        return "J";
    case EnergyUnit::GJ:
        return "GJ";
    case EnergyUnit::TWh:
        return "TWh";
    }
    return "?";
}

std::optional<EnergyUnit> parse_unit(std::string_view symbol) noexcept {
    for (auto unit : {EnergyUnit::W, EnergyUnit::kW, EnergyUnit::kWh, EnergyUnit::J, EnergyUnit::GJ,
                      EnergyUnit::TWh}) {
        if (unit_symbol(unit) == symbol) {
            return unit;
        }
    }
    return std::nullopt;
}

EnergyQuantity::EnergyQuantity(double value, EnergyUnit unit) : value_(value), unit_(unit) {
    if (!std::isfinite(value) || value < 0.0) {
        throw InvalidArgument("energy quantity must be finite and non-negative");
    }
}

EnergyQuantity convert(const EnergyQuantity& q, EnergyUnit target) {
    if (dimension_of(q.unit()) != dimension_of(target)) {
        throw UnitError("cannot convert " + std::string(unit_symbol(q.unit())) + " to " +
                        std::string(unit_symbol(target)));
    }
    if (q.unit() == target) {
        return q;
    }
    return EnergyQuantity(q.value() * base_factor(q.unit()) / base_factor(target), target);
}

} // namespace posenergy
