#pragma once

#include <vector>

#include "lgdrate/dates.hpp"

namespace lgdrate {

struct CurveObservation {
    Date date;
    int tenor_months = 0;
    double yield = 0.0; // annual fraction; negative yields allowed
};

// Dated tenor->yield observations for risk-free rate estimation. Linear
// interpolation in tenor, flat extrapolation outside the observed range,
// and a 7-calendar-day fallback to the most recent prior trading date.
class YieldCurve {
public:
    explicit YieldCurve(std::vector<CurveObservation> observations);

    const std::vector<CurveObservation>& observations() const {
        return observations_;
    }

private:
    std::vector<CurveObservation> observations_; // sorted by date, then tenor
};

struct ReferencePeriod {
    Date start;
    Date end; // inclusive
    double target_tenor_months = 0.0;
};

// Annual rate at target_tenor_months on `date` (or the nearest prior date
// within 7 calendar days). Throws NoCurveData when no usable date exists.
double interpolate_rate(const YieldCurve& curve, const Date& date,
                        double target_tenor_months);

// Arithmetic mean of interpolate_rate over all curve dates inside the period.
double mean_risk_free(const YieldCurve& curve, const ReferencePeriod& period);

} // namespace lgdrate
