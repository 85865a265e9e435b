#include "posenergy/fetch.hpp"

#include "posenergy/errors.hpp"
#include "posenergy/text.hpp"

#include "httplib.h"
#include "json.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace posenergy {

using nlohmann::json;

namespace {

std::pair<std::string, std::string> split_url(const std::string& url) {
    auto scheme = url.find("://");
    if (scheme == std::string::npos) {
        throw NetworkError("malformed URL '" + url + "'");
    }
    auto path_start = url.find('/', scheme + 3);
    if (path_start == std::string::npos) {
        return {url, "/"};
    }
    return {url.substr(0, path_start), url.substr(path_start)};
}

ThroughputUnit parse_throughput_unit(const std::string& text) {
    if (text == "per-second") {
        return ThroughputUnit::PerSecond;
    }
    if (text == "per-hour") {
        return ThroughputUnit::PerHour;
    }
    if (text == "per-day") {
        return ThroughputUnit::PerDay;
    }
    throw InvalidArgument("unknown throughput unit '" + text + "' (per-second | per-hour | per-day)");
}

} // namespace

std::string HttplibTransport::get(const std::string& url, std::chrono::milliseconds timeout) {
    auto [host, path] = split_url(url);
    httplib::Client client(host);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) {
        throw NetworkError("GET " + url + " failed: " + httplib::to_string(res.error()));
    }
    if (res->status < 200 || res->status >= 300) {
        throw NetworkError("GET " + url + " returned HTTP " + std::to_string(res->status));
    }
    return res->body;
}

double select_number(const std::string& json_text, const std::string& path) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) {
        throw SchemaDriftError("response is not valid JSON");
    }
    const json* node = &doc;
    std::stringstream segments(path);
    std::string segment;
    while (std::getline(segments, segment, '.')) {
        if (node->is_object()) {
            auto it = node->find(segment);
            if (it == node->end()) {
                throw SchemaDriftError("field '" + path + "' is absent (missing '" + segment + "')");
            }
            node = &*it;
        } else if (node->is_array()) {
            auto index = parse_uint(segment);
            if (!index || *index >= node->size()) {
                throw SchemaDriftError("field '" + path + "' is absent (bad index '" + segment + "')");
            }
            node = &(*node)[*index];
        } else {
            throw SchemaDriftError("field '" + path + "' is absent ('" + segment + "' below a scalar)");
        }
    }
    if (node->is_number()) {
        return node->get<double>();
    }
    if (node->is_string()) {
        if (auto v = parse_double(node->get<std::string>())) {
            return *v;
        }
    }
    throw SchemaDriftError("field '" + path + "' is not numeric");
}

NetworkObservation fetch_observation(const FetcherSpec& spec, const Date& at, HttpTransport& transport) {
    const std::string body = transport.get(spec.url, spec.timeout);
    const double validators = select_number(body, spec.validators.path);
    const double tps = to_tps(select_number(body, spec.throughput.path), spec.throughput.unit);
    if (!(validators >= 0.0) || !(tps >= 0.0)) {
        throw SchemaDriftError(spec.network.str() + ": negative metric in response from " + spec.url);
    }
    NetworkObservation obs{spec.network, at, static_cast<std::uint64_t>(std::llround(validators)), tps, false,
                           "fetched from " + spec.url};
    return obs;
}

FetchReport fetch_all(std::span<const FetcherSpec> specs, const Date& at, HttpTransport& transport,
                      std::size_t max_parallel) {
    std::vector<std::optional<NetworkObservation>> results(specs.size());
    std::vector<std::string> errors(specs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                results[i] = fetch_observation(specs[i], at, transport);
            } catch (const std::exception& e) {
                errors[i] = specs[i].network.str() + ": " + e.what();
            }
        }
    };
    const std::size_t n_workers = std::max<std::size_t>(1, std::min(max_parallel, specs.size()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < n_workers; ++i) {
            pool.emplace_back(worker);
        }
    }

    FetchReport report;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!errors[i].empty()) {
            report.errors.push_back(errors[i]);
            continue;
        }
        std::vector<NetworkObservation> sets[] = {report.observations, {*results[i]}};
        try {
            report.observations = merge(sets);
        } catch (const ConflictError& e) {
            report.errors.push_back(specs[i].network.str() + ": " + e.what());
        }
    }
    return report;
}

std::vector<FetcherSpec> parse_fetchers(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
        throw InvalidArgument("fetcher config must be a JSON array");
    }
    std::vector<FetcherSpec> specs;
    for (const auto& entry : doc) {
        try {
            auto mapping = [&](const char* key) {
                const auto& m = entry.at(key);
                MetricMapping out{m.at("path").get<std::string>(), ThroughputUnit::PerSecond};
                if (m.contains("unit")) {
                    out.unit = parse_throughput_unit(m.at("unit").get<std::string>());
                }
                return out;
            };
            FetcherSpec spec{NetworkId(entry.at("network").get<std::string>()), entry.at("url").get<std::string>(),
                             mapping("validators"), mapping("throughput")};
            if (entry.contains("timeout_s")) {
                spec.timeout = std::chrono::milliseconds(
                    static_cast<long long>(std::llround(entry.at("timeout_s").get<double>() * 1000.0)));
            }
            specs.push_back(std::move(spec));
        } catch (const json::exception& e) {
            throw InvalidArgument(std::string("bad fetcher entry: ") + e.what());
        }
    }
    return specs;
}

std::vector<FetcherSpec> load_fetchers(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw MissingDataError("cannot open fetcher config " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_fetchers(buf.str());
}

} // namespace posenergy
