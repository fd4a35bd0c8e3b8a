#include "lgdrate/coc_solver.hpp"

#include <cmath>
#include <string>

#include "lgdrate/errors.hpp"

namespace lgdrate {

void SolverConfig::validate() const {
    if (!(coc_rate >= 0.0 && coc_rate <= 1.0))
        throw NumericalDomain("solver: coc_rate outside [0,1]");
    if (!(tolerance > 0.0)) throw NumericalDomain("solver: tolerance must be > 0");
    if (max_iterations < 1)
        throw NumericalDomain("solver: max_iterations must be >= 1");
    if (initial_delta < 0.0)
        throw NumericalDomain("solver: initial delta must be >= 0");
    if (!(delta_upper_bound > 0.0))
        throw NumericalDomain("solver: delta upper bound must be > 0");
    if (risk_free <= -1.0)
        throw NumericalDomain("solver: risk-free rate at or below -100%");
}

double risk_margin(const EcVector& ec, double coc_rate, double risk_free) {
    double total = 0.0;
    for (int t = 1; t <= ec.horizon(); ++t)
        total += coc_rate * ec.amounts[static_cast<std::size_t>(t - 1)] *
                 std::pow(1.0 + risk_free, -t / 12.0);
    return total;
}

double discounted_recoveries(const RecoveryProfile& recoveries, double delta,
                             double risk_free) {
    const double rate = 1.0 + risk_free + delta;
    double total = recoveries.at_default;
    for (int t = 1; t <= recoveries.horizon(); ++t)
        total += recoveries.by_month[static_cast<std::size_t>(t - 1)] *
                 std::pow(rate, -t / 12.0);
    return total;
}

namespace {

// Inner solve of the non-circular step: the delta >= 0 with Y(delta) = target.
// Y is strictly decreasing, so bisection on [0, upper] to 1e-10 finds the
// minimizer of the squared objective exactly.
double solve_inner(const RecoveryProfile& recoveries, double risk_free,
                   double target, double upper) {
    constexpr double delta_tol = 1e-10;
    double lo = 0.0;
    double f_lo = discounted_recoveries(recoveries, lo, risk_free) - target;
    if (f_lo <= 0.0) return 0.0; // Y(0) already at or below target
    double hi = upper;
    const double f_hi = discounted_recoveries(recoveries, hi, risk_free) - target;
    if (f_hi > 0.0)
        throw NoRootInBracket(
            "inner solve: Y(upper bound) still above the target price; "
            "raise delta_upper_bound");
    while (hi - lo > delta_tol) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid =
            discounted_recoveries(recoveries, mid, risk_free) - target;
        if (f_mid > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

CocSolution solve_delta(const DefaultedPortfolio& portfolio,
                        const SolverConfig& config, const EcProvider& provider) {
    config.validate();
    const RecoveryProfile recoveries = portfolio.aggregate_recoveries();
    const double y0 = discounted_recoveries(recoveries, 0.0, config.risk_free);
    if (!(y0 > 0.0))
        throw McpNonPositive("solve_delta: baseline discounted recoveries Y(0) = " +
                             std::to_string(y0) + " is not positive");

    CocSolution sol;
    sol.bepv = y0;
    double delta_star = config.initial_delta;
    bool tolerance_met = false;

    for (int iter = 0; iter < config.max_iterations; ++iter) {
        EcVector ec = provider(delta_star);
        const double margin = risk_margin(ec, config.coc_rate, config.risk_free);
        const double mcp = y0 - margin;
        if (!(mcp > 0.0))
            throw McpNonPositive(
                "solve_delta: risk margin " + std::to_string(margin) +
                " exhausts the baseline value " + std::to_string(y0));

        const double delta_i = solve_inner(recoveries, config.risk_free, mcp,
                                           config.delta_upper_bound);
        const double residual = std::fabs(delta_star - delta_i);
        sol.iterations.push_back(SolverIteration{delta_i, margin, residual});

        delta_star = delta_i;
        if (tolerance_met || residual <= config.tolerance) {
            if (!tolerance_met && residual > 0.0 &&
                iter + 1 < config.max_iterations) {
                // One verification pass: recompute the margin at the final
                // delta so the returned pair satisfies the fixed point.
                tolerance_met = true;
                continue;
            }
            sol.converged = true;
            sol.delta_star = delta_star;
            sol.discount_rate = config.risk_free + delta_star;
            sol.risk_margin = margin;
            sol.mcp = mcp;
            sol.ec = std::move(ec);
            double ec_pv = 0.0;
            for (int t = 1; t <= sol.ec.horizon(); ++t)
                ec_pv += sol.ec.amounts[static_cast<std::size_t>(t - 1)] *
                         std::pow(1.0 + config.risk_free, -t / 12.0);
            sol.ec_to_mcp = ec_pv / mcp;
            return sol;
        }
    }

    // Max iterations reached: hand back the trace with the flag down.
    sol.converged = false;
    sol.delta_star = delta_star;
    sol.discount_rate = config.risk_free + delta_star;
    if (!sol.iterations.empty()) {
        sol.risk_margin = sol.iterations.back().risk_margin;
        sol.mcp = y0 - sol.risk_margin;
    }
    return sol;
}

EcProvider make_ec_provider(const DefaultedPortfolio& portfolio,
                            const EcConfig& config, double risk_free) {
    return [&portfolio, config, risk_free](double delta) {
        return ec_vector(portfolio, delta, config, risk_free);
    };
}

LossSummary implied_lgd_at_solution(const DefaultedPortfolio& portfolio,
                                    const CocSolution& solution,
                                    double risk_free) {
    const DiscountRate rate{risk_free, solution.delta_star};
    const LossMoments m = portfolio_loss_moments(portfolio, rate);
    return LossSummary{m.mean, m.sd(), m.count};
}

} // namespace lgdrate
