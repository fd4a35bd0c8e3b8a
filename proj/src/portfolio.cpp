#include "lgdrate/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lgdrate/errors.hpp"

namespace lgdrate {

double RecoveryProfile::total() const {
    return at_default +
           std::accumulate(by_month.begin(), by_month.end(), 0.0);
}

DefaultedPortfolio::DefaultedPortfolio(std::vector<CashFlowSeries> loans)
    : loans_(std::move(loans)) {
    std::sort(loans_.begin(), loans_.end(),
              [](const CashFlowSeries& a, const CashFlowSeries& b) {
                  return a.loan_id() < b.loan_id();
              });
    for (std::size_t i = 1; i < loans_.size(); ++i)
        if (loans_[i].loan_id() == loans_[i - 1].loan_id())
            throw IntegrityError("duplicate loan_id '" + loans_[i].loan_id() + "'");
}

std::size_t DefaultedPortfolio::censored_count() const {
    return static_cast<std::size_t>(
        std::count_if(loans_.begin(), loans_.end(), [](const CashFlowSeries& l) {
            return l.outcome() == LoanOutcome::Censored;
        }));
}

int DefaultedPortfolio::max_workout_months() const {
    int tau = 0;
    for (const CashFlowSeries& loan : loans_)
        if (loan.resolved()) tau = std::max(tau, loan.workout_months());
    return tau;
}

RecoveryProfile DefaultedPortfolio::aggregate_recoveries() const {
    RecoveryProfile profile;
    profile.by_month.assign(static_cast<std::size_t>(max_workout_months()), 0.0);
    for (const CashFlowSeries& loan : loans_) {
        if (!loan.resolved()) continue;
        for (const CashFlow& f : loan.flows()) {
            const int t = f.month - loan.default_month();
            if (t == 0)
                profile.at_default += f.amount;
            else
                profile.by_month[static_cast<std::size_t>(t - 1)] += f.amount;
        }
    }
    return profile;
}

std::vector<RealisedLoss> portfolio_losses(const DefaultedPortfolio& portfolio,
                                           const DiscountRate& rate) {
    std::vector<RealisedLoss> losses;
    losses.reserve(portfolio.resolved_count());
    for (const CashFlowSeries& loan : portfolio.loans()) {
        if (!loan.resolved()) continue;
        // realised_loss tags its errors with the loan id already.
        losses.push_back(realised_loss(loan, loan.default_month(), rate));
    }
    return losses;
}

double LossMoments::sd() const { return std::sqrt(variance); }

LossMoments loss_moments(const std::vector<RealisedLoss>& losses) {
    LossMoments m;
    m.count = losses.size();
    if (m.count == 0) return m;
    double sum = 0.0;
    for (const RealisedLoss& l : losses) sum += l.loss;
    m.mean = sum / static_cast<double>(m.count);
    if (m.count < 2) return m;
    double ss = 0.0;
    for (const RealisedLoss& l : losses) {
        const double d = l.loss - m.mean;
        ss += d * d;
    }
    m.variance = ss / static_cast<double>(m.count - 1);
    return m;
}

LossMoments portfolio_loss_moments(const DefaultedPortfolio& portfolio,
                                   const DiscountRate& rate,
                                   bool writeoffs_only) {
    std::vector<RealisedLoss> losses;
    losses.reserve(portfolio.resolved_count());
    for (const CashFlowSeries& loan : portfolio.loans()) {
        if (!loan.resolved()) continue;
        if (writeoffs_only && loan.outcome() != LoanOutcome::WrittenOff) continue;
        losses.push_back(realised_loss(loan, loan.default_month(), rate));
    }
    return loss_moments(losses);
}

} // namespace lgdrate
