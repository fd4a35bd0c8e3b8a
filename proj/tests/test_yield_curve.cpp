#include <doctest.h>

#include "lgdrate/errors.hpp"
#include "lgdrate/yield_curve.hpp"

using namespace lgdrate;

namespace {

YieldCurve two_tenor_curve() {
    return YieldCurve({{Date{2008, 3, 10}, 3, 0.06}, {Date{2008, 3, 10}, 6, 0.08}});
}

} // namespace

TEST_CASE("linear interpolation between bracketing tenors") {
    const YieldCurve curve = two_tenor_curve();
    const Date d{2008, 3, 10};
    CHECK(interpolate_rate(curve, d, 4.5) == doctest::Approx(0.07).epsilon(1e-14));
    CHECK(interpolate_rate(curve, d, 3.0) == doctest::Approx(0.06).epsilon(1e-14));
    CHECK(interpolate_rate(curve, d, 6.0) == doctest::Approx(0.08).epsilon(1e-14));
    // Flat extrapolation on both sides.
    CHECK(interpolate_rate(curve, d, 12.0) == doctest::Approx(0.08).epsilon(1e-14));
    CHECK(interpolate_rate(curve, d, 1.0) == doctest::Approx(0.06).epsilon(1e-14));
}

TEST_CASE("interpolated rate is bounded by the bracketing yields") {
    const YieldCurve curve{{{Date{2009, 1, 5}, 3, 0.05},
                            {Date{2009, 1, 5}, 6, 0.09},
                            {Date{2009, 1, 5}, 12, 0.07}}};
    for (double tenor = 1.0; tenor <= 14.0; tenor += 0.25) {
        const double r = interpolate_rate(curve, Date{2009, 1, 5}, tenor);
        CHECK(r >= 0.05 - 1e-15);
        CHECK(r <= 0.09 + 1e-15);
    }
}

TEST_CASE("missing trading day falls back within seven calendar days") {
    const YieldCurve curve = two_tenor_curve(); // only 2008-03-10
    CHECK(interpolate_rate(curve, Date{2008, 3, 14}, 4.5) ==
          doctest::Approx(0.07).epsilon(1e-14));
    CHECK(interpolate_rate(curve, Date{2008, 3, 17}, 4.5) ==
          doctest::Approx(0.07).epsilon(1e-14));
    CHECK_THROWS_AS(interpolate_rate(curve, Date{2008, 3, 18}, 4.5), NoCurveData);
    CHECK_THROWS_AS(interpolate_rate(curve, Date{2008, 3, 9}, 4.5), NoCurveData);
}

TEST_CASE("a single tenor cannot be interpolated") {
    const YieldCurve curve{{{Date{2008, 3, 10}, 3, 0.06}}};
    CHECK_THROWS_AS(interpolate_rate(curve, Date{2008, 3, 10}, 3.0), NoCurveData);
}

TEST_CASE("mean risk-free over a reference period") {
    SUBCASE("constant curve averages to itself") {
        std::vector<CurveObservation> obs;
        for (int day = 1; day <= 20; ++day) {
            obs.push_back({Date{2008, 5, day}, 3, 0.0637});
            obs.push_back({Date{2008, 5, day}, 6, 0.0637});
        }
        const YieldCurve curve{std::move(obs)};
        const double r = mean_risk_free(
            curve, ReferencePeriod{Date{2008, 5, 1}, Date{2008, 5, 31}, 4.67});
        CHECK(r == doctest::Approx(0.0637).epsilon(1e-14));
    }
    SUBCASE("two days average arithmetically") {
        const YieldCurve curve{{{Date{2008, 5, 1}, 3, 0.06},
                                {Date{2008, 5, 1}, 6, 0.06},
                                {Date{2008, 5, 2}, 3, 0.08},
                                {Date{2008, 5, 2}, 6, 0.08}}};
        const double r = mean_risk_free(
            curve, ReferencePeriod{Date{2008, 5, 1}, Date{2008, 5, 2}, 4.0});
        CHECK(r == doctest::Approx(0.07).epsilon(1e-14));
    }
    SUBCASE("period without curve dates") {
        const YieldCurve curve = two_tenor_curve();
        CHECK_THROWS_AS(
            mean_risk_free(curve, ReferencePeriod{Date{2010, 1, 1},
                                                  Date{2010, 2, 1}, 3.0}),
            NoCurveData);
    }
    SUBCASE("dates outside the period are ignored") {
        const YieldCurve curve{{{Date{2008, 5, 1}, 3, 0.06},
                                {Date{2008, 5, 1}, 6, 0.06},
                                {Date{2008, 6, 1}, 3, 0.99},
                                {Date{2008, 6, 1}, 6, 0.99}}};
        const double r = mean_risk_free(
            curve, ReferencePeriod{Date{2008, 5, 1}, Date{2008, 5, 31}, 4.0});
        CHECK(r == doctest::Approx(0.06).epsilon(1e-14));
    }
}

TEST_CASE("date parsing and arithmetic") {
    const Date d = Date::parse_iso("2008-02-29");
    CHECK(d.year == 2008);
    CHECK(d.month == 2);
    CHECK(d.day == 29);
    CHECK(d.to_iso() == "2008-02-29");
    CHECK(Date{2008, 3, 1} - Date{2008, 2, 29} == 1);
    CHECK(Date{2009, 1, 1} - Date{2008, 1, 1} == 366); // 2008 is a leap year
    CHECK_THROWS_AS(Date::parse_iso("2009-02-29"), ValueError);
    CHECK_THROWS_AS(Date::parse_iso("not-a-date"), ValueError);
    CHECK_THROWS_AS(Date::parse_iso("2009-13-01"), ValueError);
}

TEST_CASE("curve construction validation") {
    CHECK_THROWS_AS(YieldCurve({{Date{2008, 1, 1}, 3, 0.05},
                                {Date{2008, 1, 1}, 3, 0.06}}),
                    ValueError); // duplicate tenor
    CHECK_THROWS_AS(YieldCurve({{Date{2008, 1, 1}, 0, 0.05}}), ValueError);
    // Negative yields are data, not errors.
    const YieldCurve curve{{{Date{2020, 4, 1}, 3, -0.005},
                            {Date{2020, 4, 1}, 6, -0.002}}};
    CHECK(interpolate_rate(curve, Date{2020, 4, 1}, 4.5) ==
          doctest::Approx(-0.0035).epsilon(1e-14));
}
