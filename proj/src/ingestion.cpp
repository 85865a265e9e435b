#include "posenergy/ingestion.hpp"

#include "posenergy/errors.hpp"
#include "posenergy/text.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

namespace posenergy {

namespace {

const Date date_window_begin(2015, 1, 1);
const Date date_window_end(2035, 12, 31);

struct CsvRow {
    std::size_t line;
    std::vector<std::string> cells;
};

/// Reads a headed CSV. Blank lines and `#` comment lines are skipped. The
/// header must start with `required` and may continue with any prefix of
/// `optional`. Returns no rows for an empty input.
std::vector<CsvRow> read_table(std::istream& in, const std::string& source,
                               const std::vector<std::string>& required,
                               const std::vector<std::string>& optional, std::size_t& width) {
    std::vector<CsvRow> rows;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    width = required.size();
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto cells = split_csv_record(line);
        for (auto& cell : cells) {
            cell = std::string(trim(cell));
        }
        if (!have_header) {
            bool ok = cells.size() >= required.size() && cells.size() <= required.size() + optional.size();
            for (std::size_t i = 0; ok && i < cells.size(); ++i) {
                const auto& expected = i < required.size() ? required[i] : optional[i - required.size()];
                ok = cells[i] == expected;
            }
            if (!ok) {
                std::string expected;
                for (const auto& col : required) {
                    expected += (expected.empty() ? "" : ",") + col;
                }
                throw ParseError(source, line_no, "expected header starting with '" + expected + "'");
            }
            width = cells.size();
            have_header = true;
            continue;
        }
        if (cells.size() != width) {
            throw ParseError(source, line_no,
                             "expected " + std::to_string(width) + " cells, got " + std::to_string(cells.size()));
        }
        rows.push_back({line_no, std::move(cells)});
    }
    return rows;
}

NetworkId parse_network(const std::string& source, std::size_t line, const std::string& cell) {
    try {
        return NetworkId(cell);
    } catch (const Error& e) {
        throw ParseError(source, line, e.what());
    }
}

double parse_number(const std::string& source, std::size_t line, const std::string& cell, const char* what) {
    auto v = parse_double(cell);
    if (!v) {
        throw ParseError(source, line, std::string(what) + " '" + cell + "' is not a number");
    }
    return *v;
}

double parse_throughput(const std::string& source, std::size_t line, const std::string& cell) {
    std::string_view text = cell;
    ThroughputUnit unit = ThroughputUnit::PerSecond;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto suffix = trim(text.substr(slash + 1));
        if (suffix == "s") {
            unit = ThroughputUnit::PerSecond;
        } else if (suffix == "h" || suffix == "hour") {
            unit = ThroughputUnit::PerHour;
        } else if (suffix == "d" || suffix == "day") {
            unit = ThroughputUnit::PerDay;
        } else {
            throw ParseError(source, line, "unknown throughput unit '/" + std::string(suffix) + "'");
        }
        text = text.substr(0, slash);
    }
    auto value = parse_double(text);
    if (!value || *value < 0.0) {
        throw ParseError(source, line, "throughput '" + cell + "' must be a non-negative number");
    }
    return to_tps(*value, unit);
}

} // namespace

double to_tps(double value, ThroughputUnit unit) noexcept {
    switch (unit) {
    case ThroughputUnit::PerSecond:
        return value;
    case ThroughputUnit::PerHour:
        return value / 3600.0;
    case ThroughputUnit::PerDay:
        return value / 86400.0;
    }
    return value;
}

SnapshotSet parse_snapshots(std::istream& in, const std::string& source) {
    std::size_t width = 0;
    auto rows = read_table(in, source, {"network", "date", "validators", "tps"},
                           {"nonvote_per_day", "total_per_day", "provenance"}, width);
    SnapshotSet set;
    for (const auto& row : rows) {
        const auto& c = row.cells;
        auto network = parse_network(source, row.line, c[0]);
        Date date = [&] {
            try {
                return normalize_date(c[1], date_window_begin, date_window_end);
            } catch (const Error& e) {
                throw ParseError(source, row.line, e.what());
            }
        }();
        const double tps = parse_throughput(source, row.line, c[3]);

        const bool has_nonvote = width > 4 && !c[4].empty();
        const bool has_total = width > 5 && !c[5].empty();
        if (has_nonvote != has_total) {
            throw ParseError(source, row.line, "nonvote_per_day and total_per_day must be given together");
        }
        if (has_nonvote) {
            auto nonvote = parse_uint(c[4]);
            auto total = parse_uint(c[5]);
            if (!nonvote || !total) {
                throw ParseError(source, row.line, "vote counts must be non-negative integers");
            }
            VoteRatioRecord rec{date, *nonvote, *total, tps};
            try {
                rec.validate();
            } catch (const Error& e) {
                throw ParseError(source, row.line, e.what());
            }
            set.vote_ratios.emplace_back(network, rec);
        }

        if (c[2].empty() && has_nonvote) {
            continue;
        }
        auto validators = parse_uint(c[2]);
        if (!validators) {
            throw ParseError(source, row.line, "validators '" + c[2] + "' must be a non-negative integer");
        }
        NetworkObservation obs{network, date, *validators, tps, false, width > 6 ? c[6] : std::string()};
        for (const auto& existing : set.observations) {
            if (existing.network == obs.network && existing.date == obs.date) {
                throw DuplicateError(source + ":" + std::to_string(row.line) + ": duplicate observation for " +
                                     obs.network.str() + " on " + obs.date.iso());
            }
        }
        set.observations.push_back(std::move(obs));
    }
    return set;
}

SnapshotSet load_snapshots(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataError("cannot open observations file " + path.string());
    }
    return parse_snapshots(in, path.string());
}

void write_snapshots(std::ostream& out, const SnapshotSet& set) {
    out << observations_header << '\n';
    std::vector<bool> vote_used(set.vote_ratios.size(), false);
    for (const auto& obs : set.observations) {
        if (obs.synthetic) {
            continue;
        }
        std::string nonvote;
        std::string total;
        for (std::size_t i = 0; i < set.vote_ratios.size(); ++i) {
            const auto& [network, rec] = set.vote_ratios[i];
            if (!vote_used[i] && network == obs.network && rec.date == obs.date && rec.reported_tps == obs.tps) {
                nonvote = std::to_string(rec.nonvote_tx_per_day);
                total = std::to_string(rec.total_tx_per_day);
                vote_used[i] = true;
                break;
            }
        }
        out << obs.network.str() << ',' << obs.date.iso() << ',' << obs.validators << ','
            << format_exact(obs.tps) << ',' << nonvote << ',' << total << ',' << csv_field(obs.provenance)
            << '\n';
    }
    for (std::size_t i = 0; i < set.vote_ratios.size(); ++i) {
        if (vote_used[i]) {
            continue;
        }
        const auto& [network, rec] = set.vote_ratios[i];
        out << network.str() << ',' << rec.date.iso() << ",," << format_exact(rec.reported_tps) << ','
            << rec.nonvote_tx_per_day << ',' << rec.total_tx_per_day << ",\n";
    }
}

std::vector<NetworkObservation> merge(std::span<const std::vector<NetworkObservation>> sets) {
    std::vector<NetworkObservation> all;
    for (const auto& set : sets) {
        all.insert(all.end(), set.begin(), set.end());
    }
    auto key = [](const NetworkObservation& o) { return std::tie(o.network, o.date); };
    std::stable_sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
        if (key(a) != key(b)) {
            return key(a) < key(b);
        }
        return a.provenance < b.provenance;
    });

    std::vector<NetworkObservation> out;
    for (auto& obs : all) {
        if (!out.empty() && key(out.back()) == key(obs)) {
            if (!out.back().same_values(obs)) {
                const auto& prev = out.back();
                throw ConflictError("conflicting observations for " + obs.network.str() + " on " +
                                    obs.date.iso() + ": (" + std::to_string(prev.validators) +
                                    " validators, " + format_exact(prev.tps) + " tps) vs (" +
                                    std::to_string(obs.validators) + " validators, " + format_exact(obs.tps) +
                                    " tps)");
            }
            continue;
        }
        out.push_back(std::move(obs));
    }
    return out;
}

std::vector<NetworkObservation> observations_for(std::span<const NetworkObservation> observations,
                                                 const NetworkId& network) {
    std::vector<NetworkObservation> out;
    std::copy_if(observations.begin(), observations.end(), std::back_inserter(out),
                 [&](const auto& o) { return o.network == network; });
    return out;
}

std::map<NetworkId, ValidatorPowerBounds> parse_bounds(std::istream& in, const std::string& source) {
    std::size_t width = 0;
    auto rows = read_table(in, source, {"network", "lower_w", "upper_w"}, {"source"}, width);
    std::map<NetworkId, ValidatorPowerBounds> out;
    for (const auto& row : rows) {
        const auto& c = row.cells;
        ValidatorPowerBounds b{parse_network(source, row.line, c[0]),
                               parse_number(source, row.line, c[1], "lower_w"),
                               parse_number(source, row.line, c[2], "upper_w"), width > 3 ? c[3] : ""};
        try {
            b.validate();
        } catch (const Error& e) {
            throw ParseError(source, row.line, e.what());
        }
        if (!out.emplace(b.network, b).second) {
            throw DuplicateError(source + ":" + std::to_string(row.line) + ": duplicate bounds for " +
                                 b.network.str());
        }
    }
    return out;
}

std::map<NetworkId, ValidatorPowerBounds> load_bounds(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataError("cannot open bounds file " + path.string());
    }
    return parse_bounds(in, path.string());
}

std::map<NetworkId, NetworkProfile> parse_profiles(std::istream& in,
                                                   const std::map<NetworkId, ValidatorPowerBounds>& bounds,
                                                   const std::string& source) {
    std::size_t width = 0;
    auto rows = read_table(in, source, {"network", "max_tps"}, {"source"}, width);
    std::map<NetworkId, NetworkProfile> out;
    for (const auto& row : rows) {
        auto network = parse_network(source, row.line, row.cells[0]);
        auto it = bounds.find(network);
        if (it == bounds.end()) {
            throw MissingDataError(source + ":" + std::to_string(row.line) + ": no power bounds for network " +
                                   network.str());
        }
        NetworkProfile profile{network, it->second, parse_number(source, row.line, row.cells[1], "max_tps")};
        try {
            profile.validate();
        } catch (const Error& e) {
            throw ParseError(source, row.line, e.what());
        }
        if (!out.emplace(network, profile).second) {
            throw DuplicateError(source + ":" + std::to_string(row.line) + ": duplicate profile for " +
                                 network.str());
        }
    }
    return out;
}

std::map<NetworkId, NetworkProfile> load_profiles(const std::filesystem::path& path,
                                                  const std::map<NetworkId, ValidatorPowerBounds>& bounds) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataError("cannot open profiles file " + path.string());
    }
    return parse_profiles(in, bounds, path.string());
}

std::vector<PublishedRow> parse_published(std::istream& in, const std::string& source) {
    std::size_t width = 0;
    auto rows = read_table(in, source, {"network", "global_kw", "kwh_per_tx"}, {}, width);
    std::vector<PublishedRow> out;
    for (const auto& row : rows) {
        out.push_back({parse_network(source, row.line, row.cells[0]),
                       parse_number(source, row.line, row.cells[1], "global_kw"),
                       parse_number(source, row.line, row.cells[2], "kwh_per_tx")});
    }
    return out;
}

std::vector<PublishedRow> load_published(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataError("cannot open published table " + path.string());
    }
    return parse_published(in, path.string());
}

} // namespace posenergy
