#include "posenergy/adjustments.hpp"
#include "posenergy/baselines.hpp"
#include "posenergy/errors.hpp"
#include "posenergy/fetch.hpp"
#include "posenergy/ingestion.hpp"
#include "posenergy/report.hpp"
#include "posenergy/text.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef POSENERGY_DATA_DIR
#define POSENERGY_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace posenergy;

namespace {

struct Options {
    std::string observations = POSENERGY_DATA_DIR "/observations.csv";
    std::string bounds = POSENERGY_DATA_DIR "/bounds.csv";
    std::string profiles = POSENERGY_DATA_DIR "/profiles.csv";
    std::string baselines = POSENERGY_DATA_DIR "/baselines.ini";
    std::string published = POSENERGY_DATA_DIR "/published_contemporary.csv";
    std::vector<std::string> networks;
    bool no_origin = false;
    bool no_baselines = false;
    double l_min = default_l_min;
    std::size_t points = default_grid_points;
    std::string format;
    std::string out;
    double max_tps = 0.0;
    std::string fetchers;
    std::string date;
    std::size_t parallel = 4;
};

OutputFormat parse_format(const std::string& text, OutputFormat fallback) {
    if (text.empty()) {
        return fallback;
    }
    if (text == "text") {
        return OutputFormat::Text;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "svg") {
        return OutputFormat::Svg;
    }
    throw InvalidArgument("unknown format '" + text + "'");
}

void emit(const Options& opt, const std::string& content) {
    if (opt.out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
        throw Error("cannot write " + opt.out);
    }
    file << content;
}

std::optional<NetworkId> single_network(const Options& opt) {
    if (opt.networks.empty()) {
        return std::nullopt;
    }
    if (opt.networks.size() > 1) {
        throw InvalidArgument("this command takes at most one --network");
    }
    return NetworkId(opt.networks.front());
}

std::vector<NetworkObservation> load_observations(const Options& opt) {
    auto set = load_snapshots(opt.observations);
    std::vector<NetworkObservation> sets[] = {std::move(set.observations)};
    return merge(sets);
}

int run_fit(const Options& opt) {
    auto observations = load_observations(opt);
    auto fits = fit_networks(observations, single_network(opt), !opt.no_origin);
    emit(opt, format_fit_summary(fits, parse_format(opt.format, OutputFormat::Text)));
    return 0;
}

int run_table(const Options& opt) {
    auto observations = load_observations(opt);
    auto bounds = load_bounds(opt.bounds);
    auto baselines = opt.no_baselines ? std::vector<BaselineRecord>{} : load_baselines(opt.baselines);
    std::vector<PublishedRow> published;
    if (!opt.published.empty()) {
        published = load_published(opt.published);
    }
    auto table = build_table(observations, bounds, baselines, published, single_network(opt));
    emit(opt, format_table(table, parse_format(opt.format, OutputFormat::Text)));
    return 0;
}

int run_chart(const Options& opt) {
    auto observations = load_observations(opt);
    auto bounds = load_bounds(opt.bounds);
    auto profiles = load_profiles(opt.profiles, bounds);
    auto baselines = opt.no_baselines ? std::vector<BaselineRecord>{} : load_baselines(opt.baselines);
    ChartSpec spec;
    for (const auto& n : opt.networks) {
        spec.networks.emplace_back(n);
    }
    spec.include_baselines = !opt.no_baselines;
    spec.include_origin = !opt.no_origin;
    spec.l_min = opt.l_min;
    spec.n_points = opt.points;
    auto chart = build_chart(spec, observations, profiles, baselines);
    auto format = parse_format(opt.format, OutputFormat::Svg);
    emit(opt, format == OutputFormat::Svg ? chart_svg(chart) : chart_csv(chart));
    return 0;
}

int run_baseline(const Options& opt) {
    auto baselines = load_baselines(opt.baselines);
    auto format = parse_format(opt.format, OutputFormat::Text);
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        out << "name,year,annual_kwh,kwh_per_second,tps,kwh_per_tx\n";
    }
    for (const auto& rec : baselines) {
        const double annual = convert(rec.annual_energy, EnergyUnit::kWh).value();
        if (format == OutputFormat::Csv) {
            out << rec.name << ',' << rec.period_year << ',' << format_fixed(annual, 2) << ','
                << format_fixed(per_second_energy_kwh(rec), 2) << ',' << format_significant(rec.tps, 10) << ','
                << format_significant(baseline_per_tx_kwh(rec), 6) << '\n';
        } else {
            out << rec.name << " (" << rec.period_year << "): " << format_fixed(annual, 2) << " kWh/yr, "
                << format_fixed(per_second_energy_kwh(rec), 2) << " kWh/s, " << format_significant(rec.tps, 6)
                << " tx/s, " << format_significant(baseline_per_tx_kwh(rec), 6) << " kWh/tx\n";
        }
    }
    emit(opt, out.str());
    return 0;
}

int run_adjust(const Options& opt) {
    auto set = load_snapshots(opt.observations);
    const NetworkId network = single_network(opt).value_or(NetworkId("solana"));
    std::vector<VoteRatioRecord> records;
    for (const auto& [id, rec] : set.vote_ratios) {
        if (id == network) {
            records.push_back(rec);
        }
    }
    if (records.empty()) {
        throw MissingDataError("no vote ratio rows for network " + network.str() + " in " + opt.observations);
    }
    auto format = parse_format(opt.format, OutputFormat::Text);
    std::ostringstream out;
    out << (format == OutputFormat::Csv ? "date,reported_tps,nonvote_per_day,total_per_day,ratio,nonvote_tps\n"
                                        : "date        reported   ratio   nonvote tx/s\n");
    for (const auto& rec : records) {
        const double ratio = nonvote_ratio(rec);
        if (format == OutputFormat::Csv) {
            out << rec.date.iso() << ',' << format_significant(rec.reported_tps, 10) << ',' << rec.nonvote_tx_per_day
                << ',' << rec.total_tx_per_day << ',' << format_fixed(ratio, 6) << ','
                << format_fixed(adjust_tps(rec.reported_tps, ratio), 2) << '\n';
        } else {
            char line[128];
            std::snprintf(line, sizeof line, "%s %9.2f %7.3f %14.1f\n", rec.date.iso().c_str(), rec.reported_tps,
                          ratio, adjust_tps(rec.reported_tps, ratio));
            out << line;
        }
    }
    const double mean = adjusted_max_tps(1.0, records);
    if (format == OutputFormat::Csv) {
        out << "# mean_ratio," << format_fixed(mean, 6) << '\n';
    } else {
        out << "mean ratio: " << format_fixed(mean, 6) << '\n';
    }
    if (opt.max_tps > 0.0) {
        const double adjusted = adjusted_max_tps(opt.max_tps, records);
        out << (format == OutputFormat::Csv ? "# adjusted_max_tps," : "adjusted max throughput: ")
            << format_fixed(adjusted, 1) << '\n';
    }
    emit(opt, out.str());
    return 0;
}

int run_fetch(const Options& opt) {
    auto specs = load_fetchers(opt.fetchers);
    HttplibTransport transport;
    const Date at = Date::parse_iso(opt.date);
    auto report = fetch_all(specs, at, transport, opt.parallel);
    std::ostringstream out;
    write_snapshots(out, SnapshotSet{report.observations, {}});
    emit(opt, out.str());
    for (const auto& err : report.errors) {
        std::cerr << "error: " << err << '\n';
    }
    return report.errors.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Throughput-controlled energy estimates for proof-of-stake networks"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App* cmd, const std::string& formats) {
        cmd->add_option("--format", opt.format, "Output format: " + formats);
        cmd->add_option("--out", opt.out, "Write to this path instead of stdout");
    };
    auto add_observations = [&](CLI::App* cmd) {
        cmd->add_option("--observations", opt.observations, "Observations CSV")->capture_default_str();
    };

    auto* fit = app.add_subcommand("fit", "Fit validators = k + lambda * tps per network");
    add_observations(fit);
    fit->add_option("--network", opt.networks, "Restrict to one network");
    fit->add_flag("--no-origin", opt.no_origin, "Do not add the zero-throughput/zero-validator row");
    add_output(fit, "text|csv");

    auto* table = app.add_subcommand("table", "Contemporary estimates at each network's latest observation");
    add_observations(table);
    table->add_option("--bounds", opt.bounds, "Validator power bounds CSV")->capture_default_str();
    table->add_option("--baselines", opt.baselines, "Baseline key-value file")->capture_default_str();
    table->add_option("--published", opt.published, "Published reference table for erratum checks (\"\" to skip)")
        ->capture_default_str();
    table->add_option("--network", opt.networks, "Restrict to one network");
    table->add_flag("--no-baselines", opt.no_baselines, "Omit Bitcoin and Visa rows");
    add_output(table, "text|csv");

    auto* chart = app.add_subcommand("chart", "Extrapolated per-transaction energy bands");
    add_observations(chart);
    chart->add_option("--bounds", opt.bounds, "Validator power bounds CSV")->capture_default_str();
    chart->add_option("--profiles", opt.profiles, "Max-throughput profiles CSV")->capture_default_str();
    chart->add_option("--baselines", opt.baselines, "Baseline key-value file")->capture_default_str();
    chart->add_option("--network", opt.networks, "Networks to draw (repeatable; default all)");
    chart->add_flag("--no-origin", opt.no_origin, "Do not add the zero-throughput/zero-validator row");
    chart->add_flag("--no-baselines", opt.no_baselines, "Omit Bitcoin and Visa");
    chart->add_option("--lmin", opt.l_min, "Lowest throughput on the grid")->capture_default_str();
    chart->add_option("--points", opt.points, "Grid points per network")->capture_default_str();
    add_output(chart, "svg|csv");

    auto* baseline = app.add_subcommand("baseline", "Bitcoin and Visa reference figures");
    baseline->add_option("--baselines", opt.baselines, "Baseline key-value file")->capture_default_str();
    add_output(baseline, "text|csv");

    auto* adjust = app.add_subcommand("adjust-solana", "Nonvote throughput correction");
    adjust->add_option("--observations", opt.observations, "CSV with nonvote_per_day/total_per_day columns")
        ->required();
    adjust->add_option("--network", opt.networks, "Network (default solana)");
    adjust->add_option("--max-tps", opt.max_tps, "Postulated maximum throughput to scale by the mean ratio");
    add_output(adjust, "text|csv");

    auto* fetch = app.add_subcommand("fetch", "Query explorer endpoints and write an observations CSV");
    fetch->add_option("--fetchers", opt.fetchers, "Fetcher JSON config")->required();
    fetch->add_option("--date", opt.date, "Observation date (YYYY-MM-DD)")->required();
    fetch->add_option("--parallel", opt.parallel, "Maximum concurrent requests")->capture_default_str();
    fetch->add_option("--out", opt.out, "Write to this path instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fit) {
            return run_fit(opt);
        }
        if (*table) {
            return run_table(opt);
        }
        if (*chart) {
            return run_chart(opt);
        }
        if (*baseline) {
            return run_baseline(opt);
        }
        if (*adjust) {
            return run_adjust(opt);
        }
        if (*fetch) {
            return run_fetch(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
