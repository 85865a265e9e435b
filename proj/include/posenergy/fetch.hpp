#pragma once

#include "posenergy/ingestion.hpp"
#include "posenergy/model.hpp"

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace posenergy {

/// Minimal GET transport so fetchers can be exercised without the network.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;

    /// Returns the response body for a 2xx status. Throws NetworkError on
    /// connection failure, timeout or non-2xx status.
    virtual std::string get(const std::string& url, std::chrono::milliseconds timeout) = 0;
};

/// cpp-httplib backed transport. Safe to share between threads: every call
/// opens its own client.
class HttplibTransport final : public HttpTransport {
public:
    std::string get(const std::string& url, std::chrono::milliseconds timeout) override;
};

struct MetricMapping {
    /// Dotted path into the JSON document, e.g. `data.stats.txs_24h` or
    /// `result.0.count`.
    std::string path;
    ThroughputUnit unit = ThroughputUnit::PerSecond;
};

struct FetcherSpec {
    NetworkId network;
    std::string url;
    MetricMapping validators;
    MetricMapping throughput;
    std::chrono::milliseconds timeout{30000};
};

/// Resolves a dotted path in a JSON document; numeric segments index arrays.
/// Numbers and numeric strings are accepted. Throws SchemaDriftError when the
/// document is not JSON or the path is absent or not numeric.
double select_number(const std::string& json_text, const std::string& path);

/// One GET, then field selection and throughput normalization. The
/// observation's provenance records the endpoint.
NetworkObservation fetch_observation(const FetcherSpec& spec, const Date& at, HttpTransport& transport);

struct FetchReport {
    /// Merged, so ordered by (network, date) regardless of completion order.
    std::vector<NetworkObservation> observations;
    /// One message per failed fetcher; failures never abort the batch.
    std::vector<std::string> errors;
};

/// Runs every fetcher with at most `max_parallel` requests in flight.
FetchReport fetch_all(std::span<const FetcherSpec> specs, const Date& at, HttpTransport& transport,
                      std::size_t max_parallel = 4);

/// JSON list of fetchers:
///
///     [{"network": "hedera", "url": "http://...", "timeout_s": 30,
///       "validators": {"path": "nodes.count"},
///       "throughput": {"path": "stats.tx_24h", "unit": "per-day"}}]
std::vector<FetcherSpec> parse_fetchers(const std::string& json_text);
std::vector<FetcherSpec> load_fetchers(const std::filesystem::path& path);

} // namespace posenergy
