#include "lgdrate/cashflow.hpp"

#include <algorithm>
#include <cmath>

#include "lgdrate/errors.hpp"

namespace lgdrate {

const char* to_string(LoanOutcome outcome) {
    switch (outcome) {
        case LoanOutcome::WrittenOff: return "written_off";
        case LoanOutcome::Cured: return "cured";
        case LoanOutcome::Censored: return "censored";
    }
    return "unknown";
}

LoanOutcome outcome_from_string(const std::string& text) {
    if (text == "written_off") return LoanOutcome::WrittenOff;
    if (text == "cured") return LoanOutcome::Cured;
    if (text == "censored") return LoanOutcome::Censored;
    throw ValueError("unknown loan outcome '" + text + "'");
}

CashFlowSeries::CashFlowSeries(std::string loan_id, int default_month,
                               int resolution_month, double balance_at_default,
                               std::vector<CashFlow> flows, LoanOutcome outcome)
    : loan_id_(std::move(loan_id)),
      default_month_(default_month),
      resolution_month_(resolution_month),
      balance_at_default_(balance_at_default),
      flows_(std::move(flows)),
      outcome_(outcome) {
    if (default_month_ < 0)
        throw ValueError("loan " + loan_id_ + ": negative default month");
    if (resolution_month_ < default_month_)
        throw ValueError("loan " + loan_id_ + ": resolution before default");
    if (!(balance_at_default_ > 0.0))
        throw BalanceNotPositive("loan " + loan_id_ +
                                 ": balance at default must be > 0");

    std::sort(flows_.begin(), flows_.end(),
              [](const CashFlow& a, const CashFlow& b) { return a.month < b.month; });
    // Merge same-month flows: Eq-style indexing carries one net flow per month.
    std::vector<CashFlow> merged;
    merged.reserve(flows_.size());
    for (const CashFlow& f : flows_) {
        if (f.month < default_month_ || f.month > resolution_month_)
            throw ValueError("loan " + loan_id_ + ": flow month " +
                             std::to_string(f.month) + " outside workout window");
        if (!merged.empty() && merged.back().month == f.month)
            merged.back().amount += f.amount;
        else
            merged.push_back(f);
    }
    flows_ = std::move(merged);
}

double DiscountRate::monthly() const {
    return std::pow(1.0 + annual(), 1.0 / 12.0) - 1.0;
}

double discount_factor(const DiscountRate& rate, double months) {
    if (months < 0.0)
        throw ValueError("discount_factor: negative month count");
    if (rate.premium < 0.0)
        throw ValueError("discount_factor: risk premium must be >= 0");
    if (rate.annual() <= -1.0)
        throw ValueError("discount_factor: composite rate at or below -100%");
    return std::pow(1.0 + rate.annual(), -months / 12.0);
}

RealisedLoss realised_loss(const CashFlowSeries& series, int evaluation_month,
                           const DiscountRate& rate) {
    if (evaluation_month < series.default_month() ||
        evaluation_month > series.resolution_month())
        throw EvaluationTimeOutOfRange(
            "loan " + series.loan_id() + ": evaluation month " +
            std::to_string(evaluation_month) + " outside workout window");
    if (evaluation_month != series.default_month())
        throw EvaluationTimeOutOfRange(
            "loan " + series.loan_id() +
            ": balances after default are not carried; evaluate at the default month");

    const double balance = series.balance_at_default();
    if (!(balance > 0.0))
        throw BalanceNotPositive("loan " + series.loan_id() +
                                 ": balance not positive");

    double pv = 0.0;
    for (const CashFlow& f : series.flows())
        pv += f.amount * discount_factor(rate, f.month - evaluation_month);
    return RealisedLoss{series.loan_id(), evaluation_month, 1.0 - pv / balance};
}

} // namespace lgdrate
