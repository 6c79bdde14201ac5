#include "finagent/core/dates.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace finagent {

namespace {

constexpr std::array<int, 12> kDaysInMonth = {31, 28, 31, 30, 31, 30,
                                              31, 31, 30, 31, 30, 31};

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    if (m == 2 && is_leap(y)) return 29;
    return kDaysInMonth[static_cast<size_t>(m - 1)];
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

bool Date::valid() const {
    if (month < 1 || month > 12 || day < 1) return false;
    return day <= days_in_month(year, month);
}

// Howard Hinnant's civil-days algorithm.
std::int64_t Date::serial() const {
    const int y = year - (month <= 2);
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy =
        (153u * static_cast<unsigned>(month + (month > 2 ? -3 : 9)) + 2u) / 5u +
        static_cast<unsigned>(day) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date Date::from_serial(std::int64_t days) {
    days += 719468;
    const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(days - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m),
                static_cast<int>(d)};
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::optional<Date> Date::parse_iso(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    Date d;
    if (!parse_int(s.substr(0, 4), d.year) ||
        !parse_int(s.substr(5, 2), d.month) ||
        !parse_int(s.substr(8, 2), d.day)) {
        return std::nullopt;
    }
    if (!d.valid()) return std::nullopt;
    return d;
}

std::optional<Date> Date::parse_compact(std::string_view s) {
    if (s.size() != 8) return std::nullopt;
    Date d;
    if (!parse_int(s.substr(0, 4), d.year) ||
        !parse_int(s.substr(4, 2), d.month) ||
        !parse_int(s.substr(6, 2), d.day)) {
        return std::nullopt;
    }
    if (!d.valid()) return std::nullopt;
    return d;
}

} // namespace finagent
