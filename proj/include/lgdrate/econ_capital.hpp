#pragma once

#include <vector>

#include "lgdrate/beta_dist.hpp"
#include "lgdrate/portfolio.hpp"

namespace lgdrate {

// Single-factor loss model: W = sqrt(k) V_m + sqrt(1-k) Z and
// L' = 1(W >= q_{1-p}) F_D^{-1}((Phi(W)-1+p)/p), F_D the fitted beta.
struct TascheParams {
    double pd = 1.0;                // p in (0,1]
    double asset_correlation = 0.15; // kappa in [0,1)
    double confidence = 0.999;      // alpha in (0,1)
    BetaLossFit loss_fit;

    void validate() const; // throws NumericalDomain on violations
};

// E[L' | V_m = Phi^{-1}(alpha)]: Gauss-Legendre 5-point quadrature of the
// conditional-loss integral, composited over geometrically graded panels
// until 1e-9 relative convergence (the loss quantile has endpoint
// singularities a single panel cannot resolve). kappa = 0 is the
// independence limit where the integral collapses to p * E[F_D^{-1}] = p*mu.
double conditional_loss(const TascheParams& params);

struct UnexpectedLossRate {
    double rate = 0.0;  // conditional loss minus p*mu, floored at zero
    bool floored = false;
};

UnexpectedLossRate unexpected_loss_rate(const TascheParams& params);

// How the per-unit rate becomes a currency capital vector.
enum class EcMode {
    AnnualPosting, // capital posted at run-off year starts t = 1, 13, 25, ...
    Monthly        // capital carried every month of the run-off
};

struct EcConfig {
    double pd = 1.0;
    double asset_correlation = 0.15;
    double confidence = 0.999;
    EcMode mode = EcMode::AnnualPosting;
    bool writeoffs_only = false; // loss sample for the fit
};

struct EcVector {
    std::vector<double> amounts; // C_t, amounts[i] <-> month t = i+1
    std::vector<double> basis;   // exposure basis per period
    double ul_rate = 0.0;
    bool ul_floored = false;

    int horizon() const { return static_cast<int>(amounts.size()); }
};

// C_t = ul_rate x remaining-recovery present value, where the basis at t
// discounts each outstanding end-of-month flow X_s (s >= t) by s-t+1 months
// at r_f. The loss fit is recomputed from per-loan losses at r_f + delta.
EcVector ec_vector(const DefaultedPortfolio& portfolio, double delta,
                   const EcConfig& config, double risk_free);

} // namespace lgdrate
