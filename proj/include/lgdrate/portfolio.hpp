#pragma once

#include <cstddef>
#include <vector>

#include "lgdrate/cashflow.hpp"

namespace lgdrate {

// Portfolio recoveries aligned on workout time: by_month[i] is the aggregate
// net flow X_t at t = i+1 months after each loan's default; at_default holds
// flows landing in the default month itself (t = 0, never discounted).
struct RecoveryProfile {
    double at_default = 0.0;
    std::vector<double> by_month;

    int horizon() const { return static_cast<int>(by_month.size()); } // tau_A
    double total() const;
};

// Collection of defaulted loans. Censored loans are retained for reporting
// but excluded from losses and aggregation.
class DefaultedPortfolio {
public:
    DefaultedPortfolio() = default;
    explicit DefaultedPortfolio(std::vector<CashFlowSeries> loans);

    const std::vector<CashFlowSeries>& loans() const { return loans_; }
    std::size_t size() const { return loans_.size(); }
    std::size_t censored_count() const;
    std::size_t resolved_count() const { return loans_.size() - censored_count(); }

    // Max workout period over resolved loans, in months (tau_A).
    int max_workout_months() const;

    RecoveryProfile aggregate_recoveries() const;

private:
    std::vector<CashFlowSeries> loans_; // sorted by loan_id, ids unique
};

// Per-loan l_i(tau_d) over resolved loans, ordered by loan_id. Cure status is
// descriptive; the workout formula governs the value.
std::vector<RealisedLoss> portfolio_losses(const DefaultedPortfolio& portfolio,
                                           const DiscountRate& rate);

struct LossMoments {
    double mean = 0.0;
    double variance = 0.0; // n-1 denominator
    std::size_t count = 0;

    double sd() const;
};

LossMoments loss_moments(const std::vector<RealisedLoss>& losses);

// Loss sample at rate r_f + delta feeding the capital model; optionally
// restricted to written-off loans.
LossMoments portfolio_loss_moments(const DefaultedPortfolio& portfolio,
                                   const DiscountRate& rate,
                                   bool writeoffs_only = false);

} // namespace lgdrate
