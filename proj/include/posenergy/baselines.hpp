#pragma once

#include "posenergy/units.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace posenergy {

/// Annual energy plus throughput of a non-PoS reference system.
struct BaselineRecord {
    std::string name;
    int period_year;
    EnergyQuantity annual_energy;
    double tps;

    void validate() const;
};

/// Annual energy in kWh spread over a 365-day year.
double per_second_energy_kwh(const BaselineRecord& rec);

/// Throws DomainError when tps <= 0.
double baseline_per_tx_kwh(const BaselineRecord& rec);

/// Average power draw in kW (the per-second kWh figure times 3600).
double baseline_average_kw(const BaselineRecord& rec);

/// Reads the key-value baseline file:
///
///     [bitcoin-lower]
///     year = 2022
///     amount = 50.41
///     unit = TWh
///     tps = 2.56
///
/// Section names become record names. `#` and `;` start comments.
std::vector<BaselineRecord> parse_baselines(std::istream& in, const std::string& source = "<baselines>");
std::vector<BaselineRecord> load_baselines(const std::filesystem::path& path);

/// Looks up a record by name; throws MissingDataError.
const BaselineRecord& find_baseline(const std::vector<BaselineRecord>& records, const std::string& name);

/// The published contemporary table lists 2,927 kWh/tx for Bitcoin, which
/// does not follow from the lower/upper inputs (their midpoint is ~1,143).
inline constexpr double published_bitcoin_table_kwh_per_tx = 2927.0;

} // namespace posenergy
