#pragma once

#include <compare>
#include <string>

namespace lgdrate {

// Calendar date with civil-day arithmetic. Only what yield-curve handling
// needs: ISO-8601 parsing, ordering, and day differences.
struct Date {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..31

    auto operator<=>(const Date&) const = default;

    // Days since 1970-01-01 (may be negative).
    long serial() const;

    std::string to_iso() const;

    // Parses "YYYY-MM-DD"; throws ValueError on malformed input.
    static Date parse_iso(const std::string& text);
};

inline long operator-(const Date& a, const Date& b) {
    return a.serial() - b.serial();
}

} // namespace lgdrate
