#include "posenergy/errors.hpp"
#include "posenergy/ingestion.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

namespace posenergy {
namespace {

SnapshotSet parse(const std::string& text) {
    std::istringstream in(text);
    return parse_snapshots(in, "test.csv");
}

NetworkObservation obs(const char* network, Date date, std::uint64_t validators, double tps) {
    return {NetworkId(network), date, validators, tps, false, ""};
}

TEST(LoadSnapshots, MinimalRow) {
    auto set = parse("network,date,validators,tps\nhedera,2023-01-15,26,568.45\n");
    ASSERT_EQ(set.observations.size(), 1u);
    const auto& o = set.observations[0];
    EXPECT_EQ(o.network.str(), "hedera");
    EXPECT_EQ(o.date, Date(2023, 1, 15));
    EXPECT_EQ(o.validators, 26u);
    EXPECT_DOUBLE_EQ(o.tps, 568.45);
    EXPECT_FALSE(o.synthetic);
}

TEST(LoadSnapshots, PerDayThroughput) {
    auto set = parse("network,date,validators,tps\nsolana,2022-12-11,2000,309222640/day\n");
    EXPECT_NEAR(set.observations[0].tps, 3579, 1);
    EXPECT_DOUBLE_EQ(set.observations[0].tps, 309222640.0 / 86400.0);
    auto hourly = parse("network,date,validators,tps\nsolana,2022-12-11,2000,7200/h\n");
    EXPECT_DOUBLE_EQ(hourly.observations[0].tps, 2.0);
}

TEST(LoadSnapshots, EmptyInput) {
    EXPECT_TRUE(parse("").observations.empty());
    EXPECT_TRUE(parse("network,date,validators,tps\n").observations.empty());
}

TEST(LoadSnapshots, VoteColumns) {
    auto set = parse(
        "network,date,validators,tps,nonvote_per_day,total_per_day,provenance\n"
        "solana,14/9/21,,1734,31436549,166730469,archive\n"
        "solana,2023-01-15,2512,493,,,\"nonvote, solana.fm\"\n"
        "solana,2022-03-30,1800,2227,26040310,179416101,both\n");
    ASSERT_EQ(set.vote_ratios.size(), 2u);
    EXPECT_EQ(set.vote_ratios[0].second.date, Date(2021, 9, 14));
    EXPECT_EQ(set.vote_ratios[0].second.reported_tps, 1734);
    ASSERT_EQ(set.observations.size(), 2u);
    EXPECT_EQ(set.observations[0].provenance, "nonvote, solana.fm");
    EXPECT_EQ(set.observations[1].validators, 1800u);
}

TEST(LoadSnapshots, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.row();
        }
        return 0;
    };
    EXPECT_EQ(line_of("network,date,tps\n"), 1u);
    EXPECT_EQ(line_of("network,date,validators,tps\nx,2023-01-01,1,1\nx,2023-01-02,a,1\n"), 3u);
    EXPECT_EQ(line_of("network,date,validators,tps\nX,2023-01-01,1,1\n"), 2u);
    EXPECT_EQ(line_of("network,date,validators,tps\nx,2023-02-30,1,1\n"), 2u);
    EXPECT_EQ(line_of("network,date,validators,tps\nx,2023-01-01,1,-1\n"), 2u);
    EXPECT_EQ(line_of("network,date,validators,tps\nx,2023-01-01,1,5/week\n"), 2u);
    EXPECT_EQ(line_of("network,date,validators,tps\nx,2023-01-01,1\n"), 2u);
    EXPECT_EQ(line_of("network,date,validators,tps,nonvote_per_day,total_per_day\nx,2023-01-01,1,1,5,\n"), 2u);
    EXPECT_EQ(line_of("network,date,validators,tps,nonvote_per_day,total_per_day\nx,2023-01-01,1,1,6,5\n"), 2u);
}

TEST(LoadSnapshots, DuplicateNetworkDate) {
    EXPECT_THROW(parse("network,date,validators,tps\nx,2023-01-01,1,1\nx,2023-01-01,1,1\n"), DuplicateError);
}

TEST(Merge, CollapsesIdenticalRows) {
    std::vector<NetworkObservation> a = {obs("x", Date(2023, 1, 1), 5, 1.5)};
    std::vector<NetworkObservation> sets[] = {a, a};
    EXPECT_EQ(merge(sets).size(), 1u);
}

TEST(Merge, ConflictNamesBothValues) {
    std::vector<NetworkObservation> sets[] = {{obs("x", Date(2023, 1, 1), 5, 1.5)},
                                              {obs("x", Date(2023, 1, 1), 6, 1.5)}};
    try {
        merge(sets);
        FAIL();
    } catch (const ConflictError& e) {
        std::string what = e.what();
        EXPECT_NE(what.find("5 validators"), std::string::npos);
        EXPECT_NE(what.find("6 validators"), std::string::npos);
    }
}

TEST(Merge, DisjointSetsConcatenateSorted) {
    std::vector<NetworkObservation> sets[] = {
        {obs("tezos", Date(2023, 1, 1), 400, 0.9), obs("algorand", Date(2023, 1, 1), 1200, 8)},
        {obs("algorand", Date(2022, 1, 1), 1100, 5)}};
    auto out = merge(sets);
    ASSERT_EQ(out.size(), 3u);
    EXPECT_EQ(out[0].network.str(), "algorand");
    EXPECT_EQ(out[0].date, Date(2022, 1, 1));
    EXPECT_EQ(out[1].date, Date(2023, 1, 1));
    EXPECT_EQ(out[2].network.str(), "tezos");
}

bool same(const std::vector<NetworkObservation>& a, const std::vector<NetworkObservation>& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
        return x.network == y.network && x.date == y.date && x.same_values(y) && x.provenance == y.provenance;
    });
}

class RandomSets : public ::testing::Test {
protected:
    std::mt19937_64 rng{99};

    // Draws from a shared pool so sets overlap without conflicting.
    std::vector<NetworkObservation> pool() {
        std::vector<NetworkObservation> out;
        const char* names[] = {"algorand", "hedera", "tezos", "near"};
        std::uniform_real_distribution<double> tps(0, 1000);
        for (const char* n : names) {
            for (unsigned d = 1; d <= 6; ++d) {
                out.push_back(obs(n, Date(2022, d, 1), rng() % 5000, tps(rng)));
                out.back().provenance = "src " + std::to_string(d);
            }
        }
        return out;
    }

    std::vector<NetworkObservation> sample(const std::vector<NetworkObservation>& from) {
        std::vector<NetworkObservation> out;
        for (const auto& o : from) {
            if (rng() % 2) {
                out.push_back(o);
            }
        }
        std::shuffle(out.begin(), out.end(), rng);
        return out;
    }
};

TEST_F(RandomSets, MergeIsCommutativeAndAssociative) {
    for (int trial = 0; trial < 50; ++trial) {
        auto p = pool();
        auto a = sample(p), b = sample(p), c = sample(p);
        std::vector<NetworkObservation> ab[] = {a, b};
        std::vector<NetworkObservation> ba[] = {b, a};
        EXPECT_TRUE(same(merge(ab), merge(ba)));

        std::vector<NetworkObservation> left_inner[] = {a, b};
        std::vector<NetworkObservation> left[] = {merge(left_inner), c};
        std::vector<NetworkObservation> right_inner[] = {b, c};
        std::vector<NetworkObservation> right[] = {a, merge(right_inner)};
        EXPECT_TRUE(same(merge(left), merge(right)));
    }
}

TEST_F(RandomSets, SerializeRoundTrip) {
    for (int trial = 0; trial < 50; ++trial) {
        auto p = pool();
        std::vector<NetworkObservation> sets[] = {sample(p)};
        SnapshotSet canonical{merge(sets), {}};
        canonical.vote_ratios.emplace_back(NetworkId("solana"), VoteRatioRecord{Date(2022, 3, 30), 26040310, 179416101, 2227});
        std::ostringstream out;
        write_snapshots(out, canonical);
        auto again = parse(out.str());
        std::vector<NetworkObservation> again_sets[] = {again.observations};
        EXPECT_TRUE(same(canonical.observations, merge(again_sets)));
        ASSERT_EQ(again.vote_ratios.size(), 1u);
        EXPECT_EQ(again.vote_ratios[0].second.nonvote_tx_per_day, 26040310u);

        std::ostringstream twice;
        write_snapshots(twice, SnapshotSet{merge(again_sets), again.vote_ratios});
        EXPECT_EQ(out.str(), twice.str());
    }
}

TEST(ThroughputNormalization, ExactDivisors) {
    EXPECT_EQ(to_tps(86400, ThroughputUnit::PerDay), 1.0);
    EXPECT_EQ(to_tps(3600, ThroughputUnit::PerHour), 1.0);
    EXPECT_EQ(to_tps(7, ThroughputUnit::PerSecond), 7.0);
}

TEST(Bounds, ParseAndDuplicates) {
    std::istringstream in("network,lower_w,upper_w,source\nhedera,168.10,328.00,\"R730, ML350\"\n");
    auto b = parse_bounds(in);
    EXPECT_DOUBLE_EQ(b.at(NetworkId("hedera")).upper_w, 328.0);
    EXPECT_EQ(b.at(NetworkId("hedera")).source_note, "R730, ML350");

    std::istringstream dup("network,lower_w,upper_w\nx,1,2\nx,1,2\n");
    EXPECT_THROW(parse_bounds(dup), DuplicateError);
    std::istringstream inverted("network,lower_w,upper_w\nx,3,2\n");
    EXPECT_THROW(parse_bounds(inverted), ParseError);
}

TEST(Profiles, RequireBounds) {
    std::istringstream bin("network,lower_w,upper_w\nx,1,2\n");
    auto bounds = parse_bounds(bin);
    std::istringstream ok("network,max_tps,source\nx,100,doc\n");
    EXPECT_EQ(parse_profiles(ok, bounds).at(NetworkId("x")).max_tps, 100);
    std::istringstream missing("network,max_tps\ny,100\n");
    EXPECT_THROW(parse_profiles(missing, bounds), MissingDataError);
}

} // namespace
} // namespace posenergy
