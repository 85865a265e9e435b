#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace posenergy {

std::string_view trim(std::string_view s) noexcept;

/// Whole-string parse; nullopt on trailing garbage or non-finite values.
std::optional<double> parse_double(std::string_view s);
std::optional<std::uint64_t> parse_uint(std::string_view s);

/// Splits one CSV record. Double-quoted fields may contain commas and `""`.
std::vector<std::string> split_csv_record(std::string_view line);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(std::string_view value);

/// `%.{digits}g`.
std::string format_significant(double value, int digits);

/// `%.{decimals}f`.
std::string format_fixed(double value, int decimals);

/// Shortest text that parses back to the same double.
std::string format_exact(double value);

} // namespace posenergy
