#include "posenergy/baselines.hpp"

#include "posenergy/errors.hpp"
#include "posenergy/text.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>

namespace posenergy {

void BaselineRecord::validate() const {
    if (name.empty()) {
        throw InvalidArgument("baseline record needs a name");
    }
    if (dimension_of(annual_energy.unit()) != Dimension::Energy || !(annual_energy.value() > 0.0)) {
        throw InvalidArgument(name + ": annual energy must be a positive energy amount");
    }
    if (!(std::isfinite(tps) && tps > 0.0)) {
        throw DomainError(name + ": baseline throughput must be > 0");
    }
}

double per_second_energy_kwh(const BaselineRecord& rec) {
    rec.validate();
    return convert(rec.annual_energy, EnergyUnit::kWh).value() / seconds_per_year;
}

double baseline_per_tx_kwh(const BaselineRecord& rec) {
    return per_second_energy_kwh(rec) / rec.tps;
}

double baseline_average_kw(const BaselineRecord& rec) {
    return per_second_energy_kwh(rec) * 3600.0;
}

std::vector<BaselineRecord> parse_baselines(std::istream& in, const std::string& source) {
    struct Pending {
        std::size_t line;
        std::map<std::string, std::string> values;
    };
    std::vector<std::pair<std::string, Pending>> sections;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (auto pos = line.find_first_of("#;"); pos != std::string_view::npos) {
            line = trim(line.substr(0, pos));
        }
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw ParseError(source, line_no, "malformed section header");
            }
            sections.push_back({std::string(trim(line.substr(1, line.size() - 2))), {line_no, {}}});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(source, line_no, "expected key = value");
        }
        if (sections.empty()) {
            throw ParseError(source, line_no, "key outside of a [section]");
        }
        auto key = std::string(trim(line.substr(0, eq)));
        auto value = std::string(trim(line.substr(eq + 1)));
        if (!sections.back().second.values.emplace(key, value).second) {
            throw ParseError(source, line_no, "duplicate key '" + key + "'");
        }
    }

    std::vector<BaselineRecord> records;
    for (const auto& [name, pending] : sections) {
        auto field = [&](const char* key) -> const std::string& {
            auto it = pending.values.find(key);
            if (it == pending.values.end()) {
                throw ParseError(source, pending.line, "[" + name + "] is missing '" + key + "'");
            }
            return it->second;
        };
        auto number = [&](const char* key) {
            auto v = parse_double(field(key));
            if (!v) {
                throw ParseError(source, pending.line, "[" + name + "] '" + key + "' is not a number");
            }
            return *v;
        };
        auto unit = parse_unit(field("unit"));
        if (!unit) {
            throw ParseError(source, pending.line, "[" + name + "] unknown unit '" + field("unit") + "'");
        }
        try {
            BaselineRecord rec{name, static_cast<int>(number("year")), EnergyQuantity(number("amount"), *unit),
                               number("tps")};
            rec.validate();
            records.push_back(std::move(rec));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(source, pending.line, e.what());
        }
    }
    return records;
}

std::vector<BaselineRecord> load_baselines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataError("cannot open baselines file " + path.string());
    }
    return parse_baselines(in, path.string());
}

const BaselineRecord& find_baseline(const std::vector<BaselineRecord>& records, const std::string& name) {
    for (const auto& rec : records) {
        if (rec.name == name) {
            return rec;
        }
    }
    throw MissingDataError("no baseline named '" + name + "'");
}

} // namespace posenergy
