#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: the conditional-loss integral is evaluated by adaptive Simpson in
// the systematic-factor variable (not the quantile-space Gauss-Legendre rule
// the library uses), and delta* is recovered by grid search over the full
// squared objective rather than fixed-point iteration.

#include "lgdrate/coc_solver.hpp"
#include "lgdrate/econ_capital.hpp"

namespace lgdrate::testing {

// Adaptive Simpson evaluation of
//   integral_a^inf phi(z) F_D^{-1}((Phi(sqrt(k) q_a + sqrt(1-k) z) - 1 + p)/p) dz
// to ~1e-9 relative accuracy.
double conditional_loss_oracle(const TascheParams& params);

// argmin over delta in [0, upper] of ([Y(0) - R(C(delta))] - Y(delta))^2,
// located on a coarse grid and refined in stages down to `step`. Equivalent
// to the exhaustive grid for the unimodal objectives this model produces;
// the coarse pass asserts unimodality.
double grid_search_delta(const DefaultedPortfolio& portfolio,
                         const SolverConfig& config, const EcProvider& provider,
                         double step = 1e-6);

} // namespace lgdrate::testing
