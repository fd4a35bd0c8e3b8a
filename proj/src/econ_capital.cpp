#include "lgdrate/econ_capital.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lgdrate/errors.hpp"
#include "lgdrate/normal.hpp"

namespace lgdrate {

void TascheParams::validate() const {
    if (!(pd > 0.0 && pd <= 1.0))
        throw NumericalDomain("tasche: pd outside (0,1]");
    if (!(asset_correlation >= 0.0 && asset_correlation < 1.0))
        throw NumericalDomain("tasche: asset correlation outside [0,1)");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw NumericalDomain("tasche: confidence outside (0,1)");
    if (!(loss_fit.shape_a > 0.0 && loss_fit.shape_b > 0.0))
        throw NumericalDomain("tasche: invalid beta fit");
}

namespace {

// Standard 5-point Gauss-Legendre rule on [-1,1]; the symmetric weight set
// (w_4 = w_2, w_5 = w_1).
constexpr double kNodes[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                              0.5384693101056831, 0.9061798459386640};
constexpr double kWeights[5] = {0.23692688505618909, 0.47862867049936647,
                                128.0 / 225.0, 0.47862867049936647,
                                0.23692688505618909};

struct CondIntegrand {
    double a, b, sqrt_k, sqrt_1k, p, shift; // shift = sqrt(k) * Phi^{-1}(alpha)

    // Integrand over the loss quantile level q in (0,1):
    //   [phi((x - shift)/sqrt(1-k)) / phi(x)] * F_D^{-1}(q),
    // with x = Phi^{-1}(p q + 1 - p). Written on log scale; the density
    // ratio under- and over-flows for tail q otherwise.
    double operator()(double q) const {
        const double u = p * q + (1.0 - p);
        if (u <= 0.0 || u >= 1.0) return 0.0;
        const double x = normal_inverse_cdf(u);
        const double z = (x - shift) / sqrt_1k;
        const double log_ratio = 0.5 * (x * x - z * z);
        const double quantile = beta_inverse_cdf(q, a, b);
        if (quantile <= 0.0) return 0.0;
        return std::exp(log_ratio + std::log(quantile));
    }
};

double gl5(const CondIntegrand& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += kWeights[i] * f(mid + half * kNodes[i]);
    return half * sum;
}

// Composite rule over panels graded geometrically into both endpoints of
// (0,1) at edges 2^-j and 1-2^-j. Deepening the grading only splits the two
// panels touching the endpoints, so each refinement is incremental: the
// interior chain is extended and the endpoint caps recomputed.
double graded_composite_gl5(const CondIntegrand& f) {
    constexpr double rel_tol = 3e-9;
    constexpr int level_step = 8;
    constexpr int max_level = 46;

    double interior = gl5(f, 0.25, 0.375) + gl5(f, 0.375, 0.5) +
                      gl5(f, 0.5, 0.625) + gl5(f, 0.625, 0.75);
    int chain_level = 2; // edges down to 2^-chain_level are in `interior`
    double prev = 0.0;
    bool have_prev = false;
    for (int level = level_step; level <= max_level; level += level_step) {
        for (int j = chain_level + 1; j <= level; ++j) {
            const double e = std::ldexp(1.0, -j);
            interior += gl5(f, e, 2.0 * e);
            interior += gl5(f, 1.0 - 2.0 * e, 1.0 - e);
        }
        chain_level = level;
        const double cap = std::ldexp(1.0, -level);
        const double total =
            interior + gl5(f, 0.0, cap) + gl5(f, 1.0 - cap, 1.0);
        if (have_prev && std::fabs(total - prev) <= rel_tol * std::fabs(total))
            return total;
        prev = total;
        have_prev = true;
    }
    return prev;
}

} // namespace

double conditional_loss(const TascheParams& params) {
    params.validate();
    const double p = params.pd;
    const double k = params.asset_correlation;
    const double mu = params.loss_fit.fitted_mean();

    // Independence limit: conditioning on V_m has no effect and the integral
    // is exactly the unconditional expectation p * E[F_D^{-1}] = p * mu.
    if (k == 0.0) return p * mu;

    CondIntegrand f{params.loss_fit.shape_a,
                    params.loss_fit.shape_b,
                    std::sqrt(k),
                    std::sqrt(1.0 - k),
                    p,
                    std::sqrt(k) * normal_inverse_cdf(params.confidence)};

    return p / f.sqrt_1k * graded_composite_gl5(f);
}

UnexpectedLossRate unexpected_loss_rate(const TascheParams& params) {
    const double conditional = conditional_loss(params);
    const double expected = params.pd * params.loss_fit.fitted_mean();
    const double raw = conditional - expected;
    if (raw < 0.0) return UnexpectedLossRate{0.0, true};
    return UnexpectedLossRate{raw, false};
}

EcVector ec_vector(const DefaultedPortfolio& portfolio, double delta,
                   const EcConfig& config, double risk_free) {
    if (delta < 0.0) throw NumericalDomain("ec_vector: negative delta");

    const RecoveryProfile recoveries = portfolio.aggregate_recoveries();
    const int tau = recoveries.horizon();
    bool any_flow = recoveries.at_default != 0.0;
    for (double x : recoveries.by_month) any_flow = any_flow || x != 0.0;
    if (!any_flow) throw EmptyRecoveries("ec_vector: all recovery flows are zero");

    const LossMoments moments = portfolio_loss_moments(
        portfolio, DiscountRate{risk_free, delta}, config.writeoffs_only);
    if (moments.count < 2)
        throw EmptySample("ec_vector: fewer than two losses in the fit sample");

    TascheParams params{config.pd, config.asset_correlation, config.confidence,
                        fit_beta(moments.mean, moments.variance)};
    const UnexpectedLossRate ul = unexpected_loss_rate(params);

    const double monthly_factor = 1.0 / std::pow(1.0 + risk_free, 1.0 / 12.0);

    EcVector ec;
    ec.ul_rate = ul.rate;
    ec.ul_floored = ul.floored;
    ec.amounts.assign(static_cast<std::size_t>(tau), 0.0);
    ec.basis.assign(static_cast<std::size_t>(tau), 0.0);

    // basis[t] = sum_{s>=t} X_s / (1+r_f)^((s-t+1)/12): value at the start of
    // month t of the recoveries still outstanding, flows at month ends.
    double pv = 0.0;
    for (int t = tau; t >= 1; --t) {
        pv = (pv + recoveries.by_month[static_cast<std::size_t>(t - 1)]) *
             monthly_factor;
        ec.basis[static_cast<std::size_t>(t - 1)] = std::max(pv, 0.0);
    }

    switch (config.mode) {
        case EcMode::AnnualPosting:
            for (int t = 1; t <= tau; t += 12)
                ec.amounts[static_cast<std::size_t>(t - 1)] =
                    ul.rate * ec.basis[static_cast<std::size_t>(t - 1)];
            break;
        case EcMode::Monthly:
            for (int t = 1; t <= tau; ++t)
                ec.amounts[static_cast<std::size_t>(t - 1)] =
                    ul.rate * ec.basis[static_cast<std::size_t>(t - 1)];
            break;
    }
    return ec;
}

} // namespace lgdrate
