#include "posenergy/date.hpp"

#include "posenergy/errors.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <vector>

namespace posenergy {

namespace {

bool is_leap(int year) noexcept {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

std::optional<int> parse_int(std::string_view s) {
    if (s.empty()) {
        return std::nullopt;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

} // namespace

bool is_valid_date(int year, unsigned month, unsigned day) noexcept {
    static constexpr unsigned days_in_month[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (year < 1 || year > 9999 || month < 1 || month > 12 || day < 1) {
        return false;
    }
    unsigned limit = days_in_month[month - 1];
    if (month == 2 && is_leap(year)) {
        limit = 29;
    }
    return day <= limit;
}

Date::Date(int year, unsigned month, unsigned day) : year_(year), month_(month), day_(day) {
    if (!is_valid_date(year, month, day)) {
        throw InvalidArgument("invalid calendar date " + std::to_string(year) + "-" +
                              std::to_string(month) + "-" + std::to_string(day));
    }
}

Date Date::parse_iso(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw InvalidArgument("expected YYYY-MM-DD date, got '" + std::string(text) + "'");
    }
    auto y = parse_int(text.substr(0, 4));
    auto m = parse_int(text.substr(5, 2));
    auto d = parse_int(text.substr(8, 2));
    if (!y || !m || !d || *m < 0 || *d < 0) {
        throw InvalidArgument("expected YYYY-MM-DD date, got '" + std::string(text) + "'");
    }
    return Date(*y, static_cast<unsigned>(*m), static_cast<unsigned>(*d));
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year_, month_, day_);
    return buf;
}

Date normalize_date(std::string_view text, const Date& window_begin, const Date& window_end) {
    if (text.find('-') != std::string_view::npos) {
        return Date::parse_iso(text);
    }
    auto parts = split(text, '/');
    if (parts.size() != 3) {
        throw InvalidArgument("unrecognized date '" + std::string(text) + "'");
    }
    auto a = parse_int(parts[0]);
    auto b = parse_int(parts[1]);
    auto y = parse_int(parts[2]);
    if (!a || !b || !y || *a < 1 || *b < 1) {
        throw InvalidArgument("unrecognized date '" + std::string(text) + "'");
    }
    int year = *y;
    if (parts[2].size() == 2) {
        year += 2000;
    }

    auto accept = [&](int month, int day) -> std::optional<Date> {
        if (!is_valid_date(year, static_cast<unsigned>(month), static_cast<unsigned>(day))) {
            return std::nullopt;
        }
        Date candidate(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
        if (candidate < window_begin || window_end < candidate) {
            return std::nullopt;
        }
        return candidate;
    };

    if (auto day_first = accept(*b, *a)) {
        return *day_first;
    }
    if (auto month_first = accept(*a, *b)) {
        return *month_first;
    }
    throw InvalidArgument("date '" + std::string(text) + "' is not a valid day/month date inside " +
                          window_begin.iso() + ".." + window_end.iso());
}

} // namespace posenergy
