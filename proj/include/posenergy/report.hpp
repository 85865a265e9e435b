#pragma once

#include "posenergy/baselines.hpp"
#include "posenergy/estimator.hpp"
#include "posenergy/ingestion.hpp"
#include "posenergy/regression.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace posenergy {

enum class OutputFormat { Text, Csv, Svg };

/// Baseline section names expected in the baselines file.
inline constexpr const char* visa_baseline = "visa";
inline constexpr const char* bitcoin_lower_baseline = "bitcoin-lower";
inline constexpr const char* bitcoin_upper_baseline = "bitcoin-upper";

// ---- fit summary -----------------------------------------------------------

/// One fit per network (sorted by id), or just `only` when given. Throws
/// MissingDataError("no observations for network ...") on an empty match.
std::vector<RegressionFit> fit_networks(std::span<const NetworkObservation> observations,
                                        const std::optional<NetworkId>& only, bool include_origin);

/// Columns: network, k, lambda, r2, n_points, origin_included.
std::string format_fit_summary(std::span<const RegressionFit> fits, OutputFormat format);

// ---- contemporary table ----------------------------------------------------

struct BaselineRow {
    std::string name;
    double kw_lower;
    double kw_mid;
    double kw_upper;
    double kwh_per_tx_lower;
    double kwh_per_tx_mid;
    double kwh_per_tx_upper;
    double tps;
};

/// A published global-power figure that the inputs cannot reproduce.
struct ErratumFlag {
    NetworkId network;
    double published_kw;
    double computed_kw;
    double relative_deviation;
};

struct ComparisonTable {
    std::vector<ContemporaryEstimate> networks;
    std::vector<BaselineRow> baselines;
    std::vector<ErratumFlag> errata;
    std::vector<std::string> notes;
};

/// Relative tolerance on published global power before a row is flagged.
inline constexpr double erratum_tolerance = 0.005;

/// Mid global power compared against published figures; rows outside
/// `tolerance` are returned.
std::vector<ErratumFlag> check_published(std::span<const ContemporaryEstimate> estimates,
                                         std::span<const PublishedRow> published,
                                         double tolerance = erratum_tolerance);

/// Bitcoin (lower, midpoint, upper) and Visa rows.
std::vector<BaselineRow> baseline_rows(const std::vector<BaselineRecord>& baselines);

/// Contemporary estimate at each network's latest observation. Throws
/// MissingDataError naming a network that has observations but no bounds.
ComparisonTable build_table(std::span<const NetworkObservation> observations,
                            const std::map<NetworkId, ValidatorPowerBounds>& bounds,
                            const std::vector<BaselineRecord>& baselines,
                            std::span<const PublishedRow> published = {},
                            const std::optional<NetworkId>& only = std::nullopt);

/// kW with 2 decimals, kWh/tx with 6 significant digits.
std::string format_table(const ComparisonTable& table, OutputFormat format);

// ---- extrapolation chart ---------------------------------------------------

struct ChartSpec {
    /// Empty selects every network that has both observations and a profile.
    std::vector<NetworkId> networks;
    bool include_baselines = true;
    bool include_origin = true;
    double l_min = default_l_min;
    std::size_t n_points = default_grid_points;

    void validate() const;
};

struct ChartSeries {
    RegressionFit fit;
    ConsumptionBand band;
    /// Latest observation, drawn as the (lower, upper) marker pair.
    std::optional<ContemporaryEstimate> latest;
};

struct ChartData {
    std::vector<ChartSeries> series;
    /// Bitcoin lower/upper at its throughput and the Visa point.
    std::optional<BaselineRow> bitcoin;
    std::optional<BaselineRow> visa;
};

ChartData build_chart(const ChartSpec& spec, std::span<const NetworkObservation> observations,
                      const std::map<NetworkId, NetworkProfile>& profiles,
                      const std::vector<BaselineRecord>& baselines);

/// `network,tps,lower,upper,physical`, 10 significant digits. Baselines, when
/// present, follow as `bitcoin` and `visa` rows.
std::string chart_csv(const ChartData& chart);

inline constexpr int chart_width = 1200;
inline constexpr int chart_height = 800;

/// Log-log SVG: one shaded band per network (physical points only), the
/// latest-observation marker pair, a Bitcoin bar and a Visa point.
std::string chart_svg(const ChartData& chart, int width = chart_width, int height = chart_height);

} // namespace posenergy
