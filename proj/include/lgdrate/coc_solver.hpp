#pragma once

#include <functional>
#include <vector>

#include "lgdrate/econ_capital.hpp"
#include "lgdrate/portfolio.hpp"

namespace lgdrate {

struct SolverConfig {
    double coc_rate = 0.07;        // c in [0,1]
    double risk_free = 0.0;        // annual fraction
    double tolerance = 1e-4;       // convergence on |delta_i - delta*|
    int max_iterations = 100;
    double initial_delta = 0.05;
    double delta_upper_bound = 5.0; // root bracket for the inner solve

    void validate() const;
};

struct SolverIteration {
    double delta = 0.0;       // delta_i after the inner solve
    double risk_margin = 0.0; // R* used in this iteration
    double residual = 0.0;    // phi = |delta* - delta_i|
};

struct CocSolution {
    double delta_star = 0.0;
    double discount_rate = 0.0; // r_f + delta*
    double risk_margin = 0.0;
    double bepv = 0.0;          // Y(0)
    double mcp = 0.0;           // Y(0) - R*
    double ec_to_mcp = 0.0;     // PV of capital vector / MCP
    EcVector ec;                // capital vector at convergence
    std::vector<SolverIteration> iterations;
    bool converged = false;
};

using EcProvider = std::function<EcVector(double delta)>;

// R(C) = sum_t c * C_t / (1+r_f)^(t/12), t in months.
double risk_margin(const EcVector& ec, double coc_rate, double risk_free);

// Y(delta) = X_0 + sum_t X_t / (1+r_f+delta)^(t/12); strictly decreasing in
// delta whenever a positive flow sits at t >= 1.
double discounted_recoveries(const RecoveryProfile& recoveries, double delta,
                             double risk_free);

// Fixed-point iteration: C* = provider(delta*), R* = risk_margin(C*), then
// the inner solve picks delta_i with Y(delta_i) = Y(0) - R* by monotone
// bisection (the argmin of the squared objective), until |delta*-delta_i|
// falls under the tolerance. Non-convergence is reported via the flag with
// the trace intact; McpNonPositive / NoRootInBracket are thrown.
CocSolution solve_delta(const DefaultedPortfolio& portfolio,
                        const SolverConfig& config, const EcProvider& provider);

// Default provider: the Tasche capital vector recomputed at each delta.
EcProvider make_ec_provider(const DefaultedPortfolio& portfolio,
                            const EcConfig& config, double risk_free);

struct LossSummary {
    double mean = 0.0;
    double sd = 0.0;
    std::size_t count = 0;
};

// Per-loan losses recomputed at the converged r_d.
LossSummary implied_lgd_at_solution(const DefaultedPortfolio& portfolio,
                                    const CocSolution& solution,
                                    double risk_free);

} // namespace lgdrate
