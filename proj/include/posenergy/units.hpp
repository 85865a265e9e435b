#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace posenergy {

enum class EnergyUnit { W, kW, kWh, J, GJ, TWh };

enum class Dimension { Power, Energy };

inline constexpr double joules_per_kwh = 3.6e6;
inline constexpr double seconds_per_year = 365.0 * 86400.0;

Dimension dimension_of(EnergyUnit unit) noexcept;
std::string_view unit_symbol(EnergyUnit unit) noexcept;
std::optional<EnergyUnit> parse_unit(std::string_view symbol) noexcept;

/// An energy or power amount in its declared unit. The value is kept in that
/// unit verbatim, so writing it back out reproduces the input.
class EnergyQuantity {
public:
    EnergyQuantity(double value, EnergyUnit unit);

    double value() const noexcept { return value_; }
    EnergyUnit unit() const noexcept { return unit_; }

private:
    double value_;
    EnergyUnit unit_;
};

/// Exact factor conversion. Throws UnitError across dimensions.
EnergyQuantity convert(const EnergyQuantity& q, EnergyUnit target);

} // namespace posenergy
