#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace posenergy {

/// Proleptic Gregorian calendar date. Always valid once constructed.
class Date {
public:
    Date(int year, unsigned month, unsigned day);

    /// Strict `YYYY-MM-DD`.
    static Date parse_iso(std::string_view text);

    int year() const noexcept { return year_; }
    unsigned month() const noexcept { return month_; }
    unsigned day() const noexcept { return day_; }

    std::string iso() const;

    auto operator<=>(const Date&) const = default;

private:
    int year_;
    unsigned month_;
    unsigned day_;
};

bool is_valid_date(int year, unsigned month, unsigned day) noexcept;

/// Normalizes either an ISO date or a slash date (`D/M/Y` or `M/D/Y`, with
/// two- or four-digit year). Day-first is tried before month-first; a
/// candidate is accepted only if it is a real date inside [window_begin,
/// window_end]. Throws InvalidArgument when neither reading qualifies.
Date normalize_date(std::string_view text, const Date& window_begin, const Date& window_end);

} // namespace posenergy
