#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace finagent {

// Calendar date (proleptic Gregorian) with day-serial arithmetic.
struct Date {
    int year = 0;
    int month = 0; // 1..12
    int day = 0;   // 1..31

    auto operator<=>(const Date&) const = default;

    bool valid() const;

    // Days since 1970-01-01 (negative before).
    std::int64_t serial() const;
    static Date from_serial(std::int64_t days);
    Date plus_days(std::int64_t n) const { return from_serial(serial() + n); }

    std::string iso() const; // YYYY-MM-DD
    static std::optional<Date> parse_iso(std::string_view s);
    static std::optional<Date> parse_compact(std::string_view s); // YYYYMMDD
};

} // namespace finagent
