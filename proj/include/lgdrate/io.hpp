#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgdrate/baseline_rates.hpp"
#include "lgdrate/portfolio.hpp"
#include "lgdrate/yield_curve.hpp"

namespace lgdrate {

// loans CSV:  loan_id,default_month,resolution_month,balance_at_default,outcome
// flows CSV:  loan_id,month,net_cash_flow
DefaultedPortfolio ingest(const std::string& loans_path,
                          const std::string& flows_path);

void write_portfolio(const DefaultedPortfolio& portfolio,
                     const std::string& loans_path,
                     const std::string& flows_path);

// curve CSV:  date,tenor_months,yield   (ISO dates, yields as fractions)
YieldCurve read_yield_curve(const std::string& path);

struct ReturnSeries {
    std::vector<double> market;
    std::vector<double> instrument;
};

// returns CSV: date,market_return,instrument_return
ReturnSeries read_return_series(const std::string& path);

// bond CSV: price_at_default,price_at_resolution,span_months
std::vector<BondPricePair> read_bond_pairs(const std::string& path);

} // namespace lgdrate
