#include "posenergy/report.hpp"

#include "posenergy/errors.hpp"
#include "posenergy/text.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace posenergy {

namespace {

std::vector<NetworkId> networks_in(std::span<const NetworkObservation> observations) {
    std::set<NetworkId> ids;
    for (const auto& obs : observations) {
        ids.insert(obs.network);
    }
    return {ids.begin(), ids.end()};
}

std::string pad(std::string s, std::size_t width, bool left = false) {
    if (s.size() >= width) {
        return s;
    }
    std::string fill(width - s.size(), ' ');
    return left ? s + fill : fill + s;
}

std::string kw(double v) { return format_fixed(v, 2); }
std::string per_tx(double v) { return format_significant(v, 6); }

} // namespace

std::vector<RegressionFit> fit_networks(std::span<const NetworkObservation> observations,
                                        const std::optional<NetworkId>& only, bool include_origin) {
    std::vector<NetworkId> ids;
    if (only) {
        ids.push_back(*only);
    } else {
        ids = networks_in(observations);
    }
    std::vector<RegressionFit> fits;
    for (const auto& id : ids) {
        auto rows = observations_for(observations, id);
        if (rows.empty()) {
            throw MissingDataError("no observations for network " + id.str());
        }
        fits.push_back(fit_affine(rows, include_origin));
    }
    if (fits.empty()) {
        throw MissingDataError("no observations for network (empty dataset)");
    }
    return fits;
}

std::string format_fit_summary(std::span<const RegressionFit> fits, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "network,k,lambda,r2,n_points,origin_included\n";
        for (const auto& f : fits) {
            out << f.network.str() << ',' << format_significant(f.k, 10) << ',' << format_significant(f.lambda, 10)
                << ',' << format_significant(f.r2, 10) << ',' << f.n_points << ',' << (f.origin_included ? 1 : 0)
                << '\n';
        }
        return out.str();
    }
    out << pad("network", 12, true) << pad("k", 14) << pad("lambda", 14) << pad("R2", 10) << pad("points", 8)
        << pad("origin", 8) << '\n';
    for (const auto& f : fits) {
        out << pad(f.network.str(), 12, true) << pad(format_significant(f.k, 6), 14)
            << pad(format_significant(f.lambda, 6), 14) << pad(format_fixed(f.r2, 4), 10)
            << pad(std::to_string(f.n_points), 8) << pad(f.origin_included ? "yes" : "no", 8) << '\n';
    }
    return out.str();
}

std::vector<ErratumFlag> check_published(std::span<const ContemporaryEstimate> estimates,
                                         std::span<const PublishedRow> published, double tolerance) {
    std::vector<ErratumFlag> flags;
    for (const auto& est : estimates) {
        for (const auto& row : published) {
            if (row.network != est.network || !(row.global_kw > 0.0)) {
                continue;
            }
            const double dev = std::abs(est.global_kw_mid - row.global_kw) / row.global_kw;
            if (dev > tolerance) {
                flags.push_back({est.network, row.global_kw, est.global_kw_mid, dev});
            }
        }
    }
    return flags;
}

std::vector<BaselineRow> baseline_rows(const std::vector<BaselineRecord>& baselines) {
    std::vector<BaselineRow> rows;
    const auto has = [&](const char* name) {
        return std::any_of(baselines.begin(), baselines.end(), [&](const auto& b) { return b.name == name; });
    };
    if (has(bitcoin_lower_baseline) && has(bitcoin_upper_baseline)) {
        const auto& lo = find_baseline(baselines, bitcoin_lower_baseline);
        const auto& hi = find_baseline(baselines, bitcoin_upper_baseline);
        BaselineRow row{"bitcoin", baseline_average_kw(lo), 0.0, baseline_average_kw(hi),
                        baseline_per_tx_kwh(lo), 0.0, baseline_per_tx_kwh(hi), lo.tps};
        row.kw_mid = 0.5 * (row.kw_lower + row.kw_upper);
        row.kwh_per_tx_mid = 0.5 * (row.kwh_per_tx_lower + row.kwh_per_tx_upper);
        rows.push_back(row);
    }
    if (has(visa_baseline)) {
        const auto& visa = find_baseline(baselines, visa_baseline);
        const double p = baseline_average_kw(visa);
        const double e = baseline_per_tx_kwh(visa);
        rows.push_back({"visa", p, p, p, e, e, e, visa.tps});
    }
    return rows;
}

ComparisonTable build_table(std::span<const NetworkObservation> observations,
                            const std::map<NetworkId, ValidatorPowerBounds>& bounds,
                            const std::vector<BaselineRecord>& baselines, std::span<const PublishedRow> published,
                            const std::optional<NetworkId>& only) {
    ComparisonTable table;
    std::vector<NetworkId> ids = only ? std::vector<NetworkId>{*only} : networks_in(observations);
    for (const auto& id : ids) {
        auto rows = observations_for(observations, id);
        const auto* latest = latest_observation(rows);
        if (latest == nullptr) {
            throw MissingDataError("no observations for network " + id.str());
        }
        auto b = bounds.find(id);
        if (b == bounds.end()) {
            throw MissingDataError("no power bounds for network " + id.str());
        }
        table.networks.push_back(contemporary_estimate(*latest, b->second));
    }
    table.baselines = baseline_rows(baselines);
    table.errata = check_published(table.networks, published);

    for (const auto& row : table.baselines) {
        if (row.name == "bitcoin") {
            table.notes.push_back("bitcoin: published contemporary table lists " +
                                  format_significant(published_bitcoin_table_kwh_per_tx, 6) +
                                  " kWh/tx; the lower/upper inputs give a midpoint of " +
                                  per_tx(row.kwh_per_tx_mid) + " kWh/tx");
        }
    }
    for (const auto& flag : table.errata) {
        table.notes.push_back("erratum: " + flag.network.str() + " published " + kw(flag.published_kw) +
                              " kW but validators x mean bound give " + kw(flag.computed_kw) + " kW (" +
                              format_fixed(100.0 * flag.relative_deviation, 1) + "% off)");
    }
    return table;
}

std::string format_table(const ComparisonTable& table, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "network,kw_lower,kw_mid,kw_upper,kwh_per_tx_lower,kwh_per_tx_mid,kwh_per_tx_upper,tps,validators\n";
        for (const auto& e : table.networks) {
            out << e.network.str() << ',' << kw(e.global_kw_lower) << ',' << kw(e.global_kw_mid) << ','
                << kw(e.global_kw_upper) << ',' << per_tx(e.kwh_per_tx_lower) << ',' << per_tx(e.kwh_per_tx_mid)
                << ',' << per_tx(e.kwh_per_tx_upper) << ',' << format_significant(e.tps, 10) << ','
                << e.validators << '\n';
        }
        for (const auto& b : table.baselines) {
            out << b.name << ',' << kw(b.kw_lower) << ',' << kw(b.kw_mid) << ',' << kw(b.kw_upper) << ','
                << per_tx(b.kwh_per_tx_lower) << ',' << per_tx(b.kwh_per_tx_mid) << ','
                << per_tx(b.kwh_per_tx_upper) << ',' << format_significant(b.tps, 10) << ",\n";
        }
        for (const auto& note : table.notes) {
            out << "# " << note << '\n';
        }
        return out.str();
    }

    out << pad("network", 12, true) << pad("kW lower", 16) << pad("kW mid", 16) << pad("kW upper", 16)
        << pad("kWh/tx lower", 14) << pad("kWh/tx mid", 14) << pad("kWh/tx upper", 14) << pad("tps", 10)
        << pad("validators", 12) << '\n';
    for (const auto& e : table.networks) {
        out << pad(e.network.str(), 12, true) << pad(kw(e.global_kw_lower), 16) << pad(kw(e.global_kw_mid), 16)
            << pad(kw(e.global_kw_upper), 16) << pad(per_tx(e.kwh_per_tx_lower), 14)
            << pad(per_tx(e.kwh_per_tx_mid), 14) << pad(per_tx(e.kwh_per_tx_upper), 14)
            << pad(format_significant(e.tps, 6), 10) << pad(std::to_string(e.validators), 12) << '\n';
    }
    for (const auto& b : table.baselines) {
        out << pad(b.name, 12, true) << pad(kw(b.kw_lower), 16) << pad(kw(b.kw_mid), 16) << pad(kw(b.kw_upper), 16)
            << pad(per_tx(b.kwh_per_tx_lower), 14) << pad(per_tx(b.kwh_per_tx_mid), 14)
            << pad(per_tx(b.kwh_per_tx_upper), 14) << pad(format_significant(b.tps, 6), 10) << pad("n/a", 12)
            << '\n';
    }
    if (!table.notes.empty()) {
        out << '\n';
        for (const auto& note : table.notes) {
            out << "note: " << note << '\n';
        }
    }
    return out.str();
}

void ChartSpec::validate() const {
    if (n_points < 2) {
        throw InvalidArgument("chart needs at least two grid points");
    }
    if (!(l_min > 0.0) || !std::isfinite(l_min)) {
        throw InvalidArgument("chart l_min must be > 0");
    }
}

ChartData build_chart(const ChartSpec& spec, std::span<const NetworkObservation> observations,
                      const std::map<NetworkId, NetworkProfile>& profiles,
                      const std::vector<BaselineRecord>& baselines) {
    spec.validate();
    std::vector<NetworkId> ids = spec.networks;
    if (ids.empty()) {
        for (const auto& id : networks_in(observations)) {
            if (profiles.contains(id)) {
                ids.push_back(id);
            }
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    ChartData chart;
    for (const auto& id : ids) {
        auto profile = profiles.find(id);
        if (profile == profiles.end()) {
            throw MissingDataError("no profile (max throughput and bounds) for network " + id.str());
        }
        auto rows = observations_for(observations, id);
        if (rows.empty()) {
            throw MissingDataError("no observations for network " + id.str());
        }
        auto fit = fit_affine(rows, spec.include_origin);
        auto grid = default_grid(profile->second, spec.n_points, spec.l_min);
        ChartSeries series{fit, consumption_band(fit, profile->second, grid), std::nullopt};
        const auto* latest = latest_observation(rows);
        if (latest != nullptr && latest->tps > 0.0) {
            series.latest = contemporary_estimate(*latest, profile->second.bounds);
        }
        chart.series.push_back(std::move(series));
    }
    if (spec.include_baselines) {
        for (auto& row : baseline_rows(baselines)) {
            if (row.name == "bitcoin") {
                chart.bitcoin = row;
            } else if (row.name == "visa") {
                chart.visa = row;
            }
        }
    }
    return chart;
}

std::string chart_csv(const ChartData& chart) {
    std::ostringstream out;
    out << "network,tps,lower,upper,physical\n";
    for (const auto& s : chart.series) {
        for (const auto& p : s.band.points) {
            out << s.band.network.str() << ',' << format_significant(p.tps, 10) << ','
                << format_significant(p.kwh_per_tx_lower, 10) << ',' << format_significant(p.kwh_per_tx_upper, 10)
                << ',' << (p.physical ? 1 : 0) << '\n';
        }
    }
    if (chart.bitcoin) {
        out << "bitcoin," << format_significant(chart.bitcoin->tps, 10) << ','
            << format_significant(chart.bitcoin->kwh_per_tx_lower, 10) << ','
            << format_significant(chart.bitcoin->kwh_per_tx_upper, 10) << ",1\n";
    }
    if (chart.visa) {
        out << "visa," << format_significant(chart.visa->tps, 10) << ','
            << format_significant(chart.visa->kwh_per_tx_mid, 10) << ','
            << format_significant(chart.visa->kwh_per_tx_mid, 10) << ",1\n";
    }
    return out.str();
}

} // namespace posenergy
