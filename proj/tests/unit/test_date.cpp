#include "posenergy/date.hpp"
#include "posenergy/errors.hpp"

#include <gtest/gtest.h>

namespace posenergy {
namespace {

const Date window_begin(2021, 1, 1);
const Date window_end(2023, 6, 30);

TEST(Date, IsoRoundTrip) {
    EXPECT_EQ(Date::parse_iso("2023-01-15").iso(), "2023-01-15");
    EXPECT_EQ(Date::parse_iso("2024-02-29"), Date(2024, 2, 29));
}

TEST(Date, RejectsInvalid) {
    EXPECT_THROW(Date::parse_iso("2023-02-29"), InvalidArgument);
    EXPECT_THROW(Date::parse_iso("2023-13-01"), InvalidArgument);
    EXPECT_THROW(Date::parse_iso("2023-1-15"), InvalidArgument);
    EXPECT_THROW(Date::parse_iso("15/01/2023"), InvalidArgument);
}

TEST(Date, Ordering) {
    EXPECT_LT(Date(2022, 12, 31), Date(2023, 1, 1));
    EXPECT_LT(Date(2023, 1, 1), Date(2023, 1, 2));
}

TEST(NormalizeDate, DayFirstByDefault) {
    EXPECT_EQ(normalize_date("14/9/21", window_begin, window_end), Date(2021, 9, 14));
    EXPECT_EQ(normalize_date("2/5/22", window_begin, window_end), Date(2022, 5, 2));
    EXPECT_EQ(normalize_date("11/10/22", window_begin, window_end), Date(2022, 10, 11));
}

TEST(NormalizeDate, FallsBackToMonthFirst) {
    EXPECT_EQ(normalize_date("9/26/22", window_begin, window_end), Date(2022, 9, 26));
}

TEST(NormalizeDate, WindowDecides) {
    // Day-first would be 2023-12-01, outside the window; month-first is 2023-01-12.
    EXPECT_EQ(normalize_date("1/12/23", window_begin, window_end), Date(2023, 1, 12));
}

TEST(NormalizeDate, IsoPassesThrough) {
    EXPECT_EQ(normalize_date("2022-07-28", window_begin, window_end), Date(2022, 7, 28));
}

TEST(NormalizeDate, Rejects) {
    EXPECT_THROW(normalize_date("31/31/22", window_begin, window_end), InvalidArgument);
    EXPECT_THROW(normalize_date("1/1/19", window_begin, window_end), InvalidArgument);
    EXPECT_THROW(normalize_date("yesterday", window_begin, window_end), InvalidArgument);
}

} // namespace
} // namespace posenergy
