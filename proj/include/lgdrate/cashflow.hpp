#pragma once

#include <string>
#include <vector>

namespace lgdrate {

enum class LoanOutcome { WrittenOff, Cured, Censored };

const char* to_string(LoanOutcome outcome);
LoanOutcome outcome_from_string(const std::string& text);

struct CashFlow {
    int month = 0;       // calendar month index
    double amount = 0.0; // net of costs; may be negative
};

// Post-default cash-flow history of one loan. Construction normalizes the
// flow list (sorted, one entry per month, same-month flows summed) and
// enforces:
//   resolution_month >= default_month,
//   balance_at_default > 0,
//   every flow month within [default_month, resolution_month].
class CashFlowSeries {
public:
    CashFlowSeries(std::string loan_id, int default_month, int resolution_month,
                   double balance_at_default, std::vector<CashFlow> flows,
                   LoanOutcome outcome);

    const std::string& loan_id() const { return loan_id_; }
    int default_month() const { return default_month_; }
    int resolution_month() const { return resolution_month_; }
    double balance_at_default() const { return balance_at_default_; }
    const std::vector<CashFlow>& flows() const { return flows_; }
    LoanOutcome outcome() const { return outcome_; }

    int workout_months() const { return resolution_month_ - default_month_; }
    bool resolved() const { return outcome_ != LoanOutcome::Censored; }

private:
    std::string loan_id_;
    int default_month_;
    int resolution_month_;
    double balance_at_default_;
    std::vector<CashFlow> flows_;
    LoanOutcome outcome_;
};

// Annual risk-free rate plus annual risk premium; the composite discount
// rate r_d = r_f + delta is derived, never stored.
struct DiscountRate {
    double risk_free = 0.0;
    double premium = 0.0; // delta >= 0

    double annual() const { return risk_free + premium; }
    double monthly() const; // effective: (1+annual)^(1/12) - 1
};

struct RealisedLoss {
    std::string loan_id;
    int evaluation_month = 0;
    double loss = 0.0; // may be negative on over-recovery
};

// v_m = 1/(1+r_monthly)^m with the annual rate compounded onto the monthly
// grid, i.e. (1+r_annual)^(-m/12). m >= 0.
double discount_factor(const DiscountRate& rate, double months);

// Workout loss l(u) = 1 - (1/B_u) * sum_t X_t v_{t-u}. The default build
// carries only the balance at default, so u must equal the default month;
// other in-range u throw EvaluationTimeOutOfRange.
RealisedLoss realised_loss(const CashFlowSeries& series, int evaluation_month,
                           const DiscountRate& rate);

} // namespace lgdrate
