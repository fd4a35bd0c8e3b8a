#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace lgdrate {

// Contract-rate decomposition r_i = base + margin + grade factor.
struct ContractRateSpec {
    double base_rate = 0.0;
    double margin = 0.0;
    std::map<std::string, double> grade_factors;
};

double contract_rate(const ContractRateSpec& spec, const std::string& grade);

// Defaulted-bond price pair over one resolution span.
struct BondPricePair {
    double price_at_default = 0.0;
    double price_at_resolution = 0.0;
    int span_months = 0;
};

struct RoddRate {
    double rate = 0.0;    // annualized mean realized return
    bool negative = false; // flagged, not rejected
};

// Return-on-defaulted-debt: per pair the monthly return
// (B_r/B_d)^(1/span) - 1 annualized effectively, then the sample mean.
RoddRate rodd_rate(const std::vector<BondPricePair>& pairs);

struct BetaEstimate {
    double beta = 0.0;
    bool degenerate = false; // constant instrument series => beta 0, flagged
};

// Market beta = corr(r_m, rho_e) * sd(rho_e) / sd(r_m), sample statistics
// with the n-1 denominator.
BetaEstimate capm_beta(std::span<const double> market_returns,
                       std::span<const double> instrument_returns);

// CAPM: r_f + beta * (E[r_m] - r_f).
double roe_rate(double risk_free, double beta, double expected_market_return);

// Defaulted-debt beta sqrt(kappa) * sigma_i / sigma_m.
double me_beta(double asset_correlation, double sigma_instrument,
               double sigma_market);

struct WaccInputs {
    double expected_downturn_lgd = 0.0; // E[L | downturn]
    double expected_lgd = 0.0;          // E[L]
    double expected_equity_return = 0.0;
    double expected_debt_cost = 0.0;
};

// e = (E[L|D] - E[L]) / (1 - E[L]); the EAD cancels.
double capital_ratio(const WaccInputs& w);

// e * E[rho_e] + (1-e) * E[rho_d]; collapses to ROE at e = 1.
double wacc_rate(const WaccInputs& w);

} // namespace lgdrate
