#include "lgdrate/dates.hpp"

#include <array>
#include <cstdio>

#include "lgdrate/errors.hpp"

namespace lgdrate {

namespace {

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[static_cast<std::size_t>(m - 1)];
}

} // namespace

long Date::serial() const {
    // Howard Hinnant's days-from-civil algorithm.
    long y = year;
    const long m = month;
    const long d = day;
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const long yoe = y - era * 400;
    const long doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const long doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

std::string Date::to_iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

Date Date::parse_iso(const std::string& text) {
    int y = 0, m = 0, d = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &y, &m, &d, &extra) != 3)
        throw ValueError("not an ISO-8601 date: '" + text + "'");
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m))
        throw ValueError("invalid calendar date: '" + text + "'");
    return Date{y, m, d};
}

} // namespace lgdrate
