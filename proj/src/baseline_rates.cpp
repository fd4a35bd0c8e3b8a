#include "lgdrate/baseline_rates.hpp"

#include <cmath>

#include "lgdrate/errors.hpp"

namespace lgdrate {

double contract_rate(const ContractRateSpec& spec, const std::string& grade) {
    auto it = spec.grade_factors.find(grade);
    if (it == spec.grade_factors.end())
        throw UnknownGrade("no grade factor for '" + grade + "'");
    return spec.base_rate + spec.margin + it->second;
}

RoddRate rodd_rate(const std::vector<BondPricePair>& pairs) {
    if (pairs.empty()) throw EmptySample("rodd_rate: no bond price pairs");
    double sum = 0.0;
    for (const BondPricePair& p : pairs) {
        if (!(p.price_at_default > 0.0) || !(p.price_at_resolution > 0.0))
            throw ValueError("rodd_rate: bond prices must be positive");
        if (p.span_months < 1)
            throw ValueError("rodd_rate: resolution span must be >= 1 month");
        const double monthly =
            std::pow(p.price_at_resolution / p.price_at_default,
                     1.0 / p.span_months) -
            1.0;
        sum += std::pow(1.0 + monthly, 12.0) - 1.0;
    }
    const double rate = sum / static_cast<double>(pairs.size());
    return RoddRate{rate, rate < 0.0};
}

namespace {

struct SampleStats {
    double mean = 0.0;
    double sd = 0.0;
};

SampleStats stats_of(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0))};
}

} // namespace

BetaEstimate capm_beta(std::span<const double> market_returns,
                       std::span<const double> instrument_returns) {
    if (market_returns.size() != instrument_returns.size())
        throw DegenerateSeries("capm_beta: series lengths differ");
    if (market_returns.size() < 2)
        throw DegenerateSeries("capm_beta: need at least two observations");

    const SampleStats m = stats_of(market_returns);
    const SampleStats e = stats_of(instrument_returns);
    if (!(m.sd > 0.0))
        throw DegenerateSeries("capm_beta: market returns are constant");
    if (!(e.sd > 0.0)) {
        // Zero covariance: no systematic exposure. Flagged rather than thrown.
        return BetaEstimate{0.0, true};
    }
    double cov = 0.0;
    for (std::size_t i = 0; i < market_returns.size(); ++i)
        cov += (market_returns[i] - m.mean) * (instrument_returns[i] - e.mean);
    cov /= static_cast<double>(market_returns.size() - 1);
    // corr * sd_e / sd_m == cov / sd_m^2
    return BetaEstimate{cov / (m.sd * m.sd), false};
}

double roe_rate(double risk_free, double beta, double expected_market_return) {
    return risk_free + beta * (expected_market_return - risk_free);
}

double me_beta(double asset_correlation, double sigma_instrument,
               double sigma_market) {
    if (!(asset_correlation >= 0.0 && asset_correlation <= 1.0))
        throw NumericalDomain("me_beta: asset correlation outside [0,1]");
    if (!(sigma_market > 0.0))
        throw DegenerateSeries("me_beta: market volatility must be positive");
    return std::sqrt(asset_correlation) * sigma_instrument / sigma_market;
}

double capital_ratio(const WaccInputs& w) {
    if (!(w.expected_lgd >= 0.0 && w.expected_lgd <= w.expected_downturn_lgd &&
          w.expected_downturn_lgd <= 1.0))
        throw ValueError("capital_ratio: need 0 <= E[L] <= E[L|D] <= 1");
    if (w.expected_lgd == 1.0)
        throw DegenerateDenominator("capital_ratio: E[L] = 1");
    return (w.expected_downturn_lgd - w.expected_lgd) / (1.0 - w.expected_lgd);
}

double wacc_rate(const WaccInputs& w) {
    const double e = capital_ratio(w);
    return e * w.expected_equity_return + (1.0 - e) * w.expected_debt_cost;
}

} // namespace lgdrate
