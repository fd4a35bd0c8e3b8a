#include "lgdrate/yield_curve.hpp"

#include <algorithm>
#include <cmath>

#include "lgdrate/errors.hpp"

namespace lgdrate {

namespace {
constexpr long kLookbackDays = 7;
} // namespace

YieldCurve::YieldCurve(std::vector<CurveObservation> observations)
    : observations_(std::move(observations)) {
    std::sort(observations_.begin(), observations_.end(),
              [](const CurveObservation& a, const CurveObservation& b) {
                  if (a.date != b.date) return a.date < b.date;
                  return a.tenor_months < b.tenor_months;
              });
    for (std::size_t i = 0; i < observations_.size(); ++i) {
        if (!std::isfinite(observations_[i].yield))
            throw ValueError("yield curve: non-finite yield at " +
                             observations_[i].date.to_iso());
        if (observations_[i].tenor_months <= 0)
            throw ValueError("yield curve: non-positive tenor at " +
                             observations_[i].date.to_iso());
        if (i > 0 && observations_[i].date == observations_[i - 1].date &&
            observations_[i].tenor_months == observations_[i - 1].tenor_months)
            throw ValueError("yield curve: duplicate tenor " +
                             std::to_string(observations_[i].tenor_months) +
                             "m on " + observations_[i].date.to_iso());
    }
}

namespace {

// [first, last) span of observations sharing one date; empty when absent.
std::pair<std::size_t, std::size_t> date_span(
    const std::vector<CurveObservation>& obs, const Date& date) {
    auto lo = std::lower_bound(obs.begin(), obs.end(), date,
                               [](const CurveObservation& o, const Date& d) {
                                   return o.date < d;
                               });
    auto hi = lo;
    while (hi != obs.end() && hi->date == date) ++hi;
    return {static_cast<std::size_t>(lo - obs.begin()),
            static_cast<std::size_t>(hi - obs.begin())};
}

} // namespace

double interpolate_rate(const YieldCurve& curve, const Date& date,
                        double target_tenor_months) {
    const auto& obs = curve.observations();
    if (obs.empty()) throw NoCurveData("yield curve has no observations");

    // Find the date itself or the most recent prior date within the window.
    Date use = date;
    auto [lo, hi] = date_span(obs, use);
    if (lo == hi) {
        auto it = std::lower_bound(obs.begin(), obs.end(), date,
                                   [](const CurveObservation& o, const Date& d) {
                                       return o.date < d;
                                   });
        if (it == obs.begin())
            throw NoCurveData("no curve data on or before " + date.to_iso());
        use = std::prev(it)->date;
        if (date - use > kLookbackDays)
            throw NoCurveData("no curve data within " +
                              std::to_string(kLookbackDays) + " days before " +
                              date.to_iso());
        std::tie(lo, hi) = date_span(obs, use);
    }
    if (hi - lo < 2)
        throw NoCurveData("fewer than two tenors on " + use.to_iso());

    const double t = target_tenor_months;
    if (t <= obs[lo].tenor_months) return obs[lo].yield;         // flat below
    if (t >= obs[hi - 1].tenor_months) return obs[hi - 1].yield; // flat above
    for (std::size_t i = lo + 1; i < hi; ++i) {
        if (t <= obs[i].tenor_months) {
            const double t0 = obs[i - 1].tenor_months;
            const double t1 = obs[i].tenor_months;
            const double w = (t - t0) / (t1 - t0);
            return obs[i - 1].yield + w * (obs[i].yield - obs[i - 1].yield);
        }
    }
    return obs[hi - 1].yield; // unreachable under the checks above
}

double mean_risk_free(const YieldCurve& curve, const ReferencePeriod& period) {
    if (period.end < period.start)
        throw ValueError("reference period end precedes start");
    const auto& obs = curve.observations();
    double sum = 0.0;
    std::size_t days = 0;
    std::size_t i = 0;
    while (i < obs.size()) {
        const Date d = obs[i].date;
        std::size_t j = i;
        while (j < obs.size() && obs[j].date == d) ++j;
        if (d >= period.start && d <= period.end) {
            sum += interpolate_rate(curve, d, period.target_tenor_months);
            ++days;
        }
        i = j;
    }
    if (days == 0)
        throw NoCurveData("no curve dates inside " + period.start.to_iso() +
                          " .. " + period.end.to_iso());
    return sum / static_cast<double>(days);
}

} // namespace lgdrate
