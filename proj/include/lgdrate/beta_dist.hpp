#pragma once

namespace lgdrate {

// Moment-matched beta distribution standing in for the loss distribution F_D.
// fit_beta solves
//   a = mu * (mu(1-mu)/var - 1),   b = (1-mu) * (mu(1-mu)/var - 1)
// so that mean and variance of Beta(a,b) reproduce the inputs.
struct BetaLossFit {
    double shape_a = 1.0;
    double shape_b = 1.0;
    double source_mean = 0.5;
    double source_variance = 1.0 / 12.0;

    double fitted_mean() const { return shape_a / (shape_a + shape_b); }
    double fitted_variance() const {
        const double s = shape_a + shape_b;
        return shape_a * shape_b / (s * s * (s + 1.0));
    }
};

// Throws DegenerateMean unless 0 < mean < 1, InfeasibleMoments unless
// 0 < variance < mean*(1-mean).
BetaLossFit fit_beta(double mean, double variance);

double log_beta(double a, double b);

// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double regularized_incomplete_beta(double x, double a, double b);

double beta_pdf(double x, double a, double b);

// Quantile of Beta(a,b): the x with I_x(a,b) = q to |I_x - q| <= 1e-10,
// by bracketed bisection with Newton refinement. q in [0,1].
double beta_inverse_cdf(const BetaLossFit& fit, double q);
double beta_inverse_cdf(double q, double a, double b);

} // namespace lgdrate
