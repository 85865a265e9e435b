#include "posenergy/errors.hpp"
#include "posenergy/fetch.hpp"

#include "httplib.h"

#include <gtest/gtest.h>

#include <map>
#include <mutex>
#include <thread>

namespace posenergy {
namespace {

using namespace std::chrono_literals;

class LocalExplorer : public ::testing::Test {
protected:
    httplib::Server server;
    std::thread thread;
    int port = 0;

    void SetUp() override {
        server.Get("/hedera", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(R"({"data": {"nodes": 26, "stats": {"tx_24h": 49114080}}})", "application/json");
        });
        server.Get("/array", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(R"({"result": [{"count": "1209"}, {"count": 7}], "tps": 4.2})", "application/json");
        });
        server.Get("/renamed", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(R"({"data": {"validator_count": 26}})", "application/json");
        });
        server.Get("/slow", [](const httplib::Request&, httplib::Response& res) {
            std::this_thread::sleep_for(1500ms);
            res.set_content("{}", "application/json");
        });
        server.Get("/missing", [](const httplib::Request&, httplib::Response& res) { res.status = 404; });
        port = server.bind_to_any_port("127.0.0.1");
        ASSERT_GT(port, 0);
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }

    void TearDown() override {
        server.stop();
        thread.join();
    }

    std::string url(const std::string& path) const { return "http://127.0.0.1:" + std::to_string(port) + path; }

    FetcherSpec hedera() const {
        return {NetworkId("hedera"), url("/hedera"), {"data.nodes"}, {"data.stats.tx_24h", ThroughputUnit::PerDay}};
    }
};

TEST_F(LocalExplorer, PerDayMappingIsNormalized) {
    HttplibTransport transport;
    auto obs = fetch_observation(hedera(), Date(2023, 1, 15), transport);
    EXPECT_EQ(obs.validators, 26u);
    EXPECT_DOUBLE_EQ(obs.tps, 49114080.0 / 86400.0);
    EXPECT_EQ(obs.provenance, "fetched from " + url("/hedera"));
}

TEST_F(LocalExplorer, ArrayIndexAndNumericString) {
    HttplibTransport transport;
    FetcherSpec spec{NetworkId("cardano"), url("/array"), {"result.0.count"}, {"tps"}};
    auto obs = fetch_observation(spec, Date(2023, 1, 15), transport);
    EXPECT_EQ(obs.validators, 1209u);
    EXPECT_DOUBLE_EQ(obs.tps, 4.2);
}

TEST_F(LocalExplorer, MissingFieldIsSchemaDrift) {
    HttplibTransport transport;
    auto spec = hedera();
    spec.url = url("/renamed");
    EXPECT_THROW(fetch_observation(spec, Date(2023, 1, 15), transport), SchemaDriftError);
}

TEST_F(LocalExplorer, TimeoutIsNetworkError) {
    HttplibTransport transport;
    auto spec = hedera();
    spec.url = url("/slow");
    spec.timeout = 200ms;
    EXPECT_THROW(fetch_observation(spec, Date(2023, 1, 15), transport), NetworkError);
}

TEST_F(LocalExplorer, HttpErrorStatus) {
    HttplibTransport transport;
    auto spec = hedera();
    spec.url = url("/missing");
    EXPECT_THROW(fetch_observation(spec, Date(2023, 1, 15), transport), NetworkError);
}

TEST(SelectNumber, Paths) {
    EXPECT_EQ(select_number(R"({"a": {"b": [1, {"c": 2.5}]}})", "a.b.1.c"), 2.5);
    EXPECT_EQ(select_number(R"({"a": "12"})", "a"), 12);
    EXPECT_THROW(select_number("not json", "a"), SchemaDriftError);
    EXPECT_THROW(select_number(R"({"a": "x"})", "a"), SchemaDriftError);
    EXPECT_THROW(select_number(R"({"a": [1]})", "a.3"), SchemaDriftError);
    EXPECT_THROW(select_number(R"({"a": 1})", "a.b"), SchemaDriftError);
}

// Serves canned bodies and finishes in reverse order of submission.
class CannedTransport : public HttpTransport {
public:
    std::map<std::string, std::string> bodies;

    std::string get(const std::string& url, std::chrono::milliseconds) override {
        std::this_thread::sleep_for(std::chrono::milliseconds(10 * static_cast<int>(url.size() % 5)));
        auto it = bodies.find(url);
        if (it == bodies.end()) {
            throw NetworkError("GET " + url + " failed: connection refused");
        }
        return it->second;
    }
};

TEST(FetchAll, FailuresAreNonFatalAndOrderIsDeterministic) {
    CannedTransport transport;
    transport.bodies["u/tezos"] = R"({"v": 400, "t": 0.9})";
    transport.bodies["u/algorand"] = R"({"v": 1227, "t": 8.7})";
    transport.bodies["u/near"] = R"({"v": 100})";
    std::vector<FetcherSpec> specs = {
        {NetworkId("tezos"), "u/tezos", {"v"}, {"t"}},
        {NetworkId("flow"), "u/flow", {"v"}, {"t"}},
        {NetworkId("algorand"), "u/algorand", {"v"}, {"t"}},
        {NetworkId("near"), "u/near", {"v"}, {"t"}},
    };
    for (std::size_t parallel : {1u, 2u, 8u}) {
        auto report = fetch_all(specs, Date(2023, 1, 15), transport, parallel);
        ASSERT_EQ(report.observations.size(), 2u);
        EXPECT_EQ(report.observations[0].network.str(), "algorand");
        EXPECT_EQ(report.observations[1].network.str(), "tezos");
        ASSERT_EQ(report.errors.size(), 2u);
        EXPECT_EQ(report.errors[0].rfind("flow:", 0), 0u);
        EXPECT_EQ(report.errors[1].rfind("near:", 0), 0u);
    }
}

TEST(ParseFetchers, ReadsConfig) {
    auto specs = parse_fetchers(R"([{"network": "hedera", "url": "http://x/y", "timeout_s": 2.5,
        "validators": {"path": "n"}, "throughput": {"path": "t", "unit": "per-hour"}}])");
    ASSERT_EQ(specs.size(), 1u);
    EXPECT_EQ(specs[0].timeout, 2500ms);
    EXPECT_EQ(specs[0].throughput.unit, ThroughputUnit::PerHour);
    EXPECT_EQ(parse_fetchers("[]").size(), 0u);
    auto defaulted = parse_fetchers(R"([{"network": "x", "url": "u", "validators": {"path": "n"},
        "throughput": {"path": "t"}}])");
    EXPECT_EQ(defaulted[0].timeout, 30000ms);
    EXPECT_THROW(parse_fetchers("{}"), InvalidArgument);
    EXPECT_THROW(parse_fetchers(R"([{"network": "x"}])"), InvalidArgument);
    EXPECT_THROW(parse_fetchers(R"([{"network": "x", "url": "u", "validators": {"path": "n"},
        "throughput": {"path": "t", "unit": "weekly"}}])"), InvalidArgument);
}

} // namespace
} // namespace posenergy
