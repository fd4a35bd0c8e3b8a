#include "lgdrate/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "lgdrate/beta_dist.hpp"
#include "lgdrate/errors.hpp"

namespace lgdrate {

const char* to_string(RecoveryShape shape) {
    switch (shape) {
        case RecoveryShape::FrontLoaded: return "front-loaded";
        case RecoveryShape::Uniform: return "uniform";
        case RecoveryShape::BackLoaded: return "back-loaded";
    }
    return "unknown";
}

RecoveryShape shape_from_string(const std::string& text) {
    if (text == "front-loaded" || text == "front") return RecoveryShape::FrontLoaded;
    if (text == "uniform") return RecoveryShape::Uniform;
    if (text == "back-loaded" || text == "back") return RecoveryShape::BackLoaded;
    throw ValueError("unknown recovery schedule shape '" + text + "'");
}

void SynthSpec::validate() const {
    if (cure_probability < 0.0 || full_loss_probability < 0.0 ||
        cure_probability + full_loss_probability > 1.0)
        throw SpecInfeasible("synth: outcome probabilities must be in [0,1] "
                             "with cure + full_loss <= 1");
    if (!(interior_alpha > 0.0 && interior_beta > 0.0))
        throw SpecInfeasible("synth: interior beta shapes must be positive");
    if (!(mean_workout_months >= 1.0))
        throw SpecInfeasible("synth: mean workout must be >= 1 month");
    if (max_workout_months < 1 ||
        mean_workout_months > static_cast<double>(max_workout_months))
        throw SpecInfeasible("synth: mean workout exceeds max workout");
    if (!(balance > 0.0)) throw SpecInfeasible("synth: balance must be positive");
}

double SynthSpec::implied_loss_mean() const {
    const double w = 1.0 - cure_probability - full_loss_probability;
    const double interior_mean = interior_alpha / (interior_alpha + interior_beta);
    return full_loss_probability + w * interior_mean;
}

double SynthSpec::implied_loss_sd() const {
    const double w = 1.0 - cure_probability - full_loss_probability;
    const double s = interior_alpha + interior_beta;
    const double m = interior_alpha / s;
    const double v = interior_alpha * interior_beta / (s * s * (s + 1.0));
    const double second = full_loss_probability + w * (v + m * m);
    const double mean = implied_loss_mean();
    return std::sqrt(second - mean * mean);
}

SynthSpec SynthSpec::calibrated(std::size_t n_loans, double target_mean,
                                double target_sd, double cure_probability,
                                double full_loss_probability,
                                double mean_workout_months,
                                int max_workout_months, RecoveryShape shape,
                                std::uint64_t seed) {
    const double w = 1.0 - cure_probability - full_loss_probability;
    if (!(w > 0.0))
        throw SpecInfeasible("calibrated: no interior mass left");
    const double interior_mean = (target_mean - full_loss_probability) / w;
    const double second = target_sd * target_sd + target_mean * target_mean;
    const double interior_var = (second - full_loss_probability) / w -
                                interior_mean * interior_mean;
    if (!(interior_mean > 0.0 && interior_mean < 1.0))
        throw SpecInfeasible("calibrated: interior mean outside (0,1); adjust "
                             "the point masses");
    if (!(interior_var > 0.0 &&
          interior_var < interior_mean * (1.0 - interior_mean)))
        throw SpecInfeasible("calibrated: interior variance infeasible for a "
                             "beta; adjust the point masses");
    const BetaLossFit fit = fit_beta(interior_mean, interior_var);

    SynthSpec spec;
    spec.n_loans = n_loans;
    spec.cure_probability = cure_probability;
    spec.full_loss_probability = full_loss_probability;
    spec.interior_alpha = fit.shape_a;
    spec.interior_beta = fit.shape_b;
    spec.mean_workout_months = mean_workout_months;
    spec.max_workout_months = max_workout_months;
    spec.shape = shape;
    spec.seed = seed;
    spec.validate();
    return spec;
}

namespace {

// Scale of the shifted exponential workout draw, adjusted so the mean
// survives the truncation at the cap: solve s(1 - exp(-M/s)) = target.
double truncated_exp_scale(double target, double cap) {
    if (target <= 0.0) return 0.0;
    if (target >= cap) return 1e9; // everything lands at the cap anyway
    double s = target;
    for (int i = 0; i < 60; ++i) {
        const double e = std::exp(-cap / s);
        const double f = s * (1.0 - e) - target;
        const double df = 1.0 - e - (cap / s) * e;
        const double next = (df > 0.0) ? s - f / df : s;
        if (!(next > 0.0)) {
            s *= 2.0;
            continue;
        }
        if (std::fabs(next - s) < 1e-12 * s) return next;
        s = next;
    }
    return s;
}

std::vector<double> schedule_weights(int months, RecoveryShape shape) {
    std::vector<double> w(static_cast<std::size_t>(months));
    double sum = 0.0;
    for (int t = 1; t <= months; ++t) {
        double x = 1.0;
        if (shape == RecoveryShape::FrontLoaded) x = months - t + 1;
        if (shape == RecoveryShape::BackLoaded) x = t;
        w[static_cast<std::size_t>(t - 1)] = x;
        sum += x;
    }
    for (double& x : w) x /= sum;
    return w;
}

} // namespace

DefaultedPortfolio generate_synthetic(const SynthSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::gamma_distribution<double> gamma_a(spec.interior_alpha, 1.0);
    std::gamma_distribution<double> gamma_b(spec.interior_beta, 1.0);

    const double exp_scale =
        truncated_exp_scale(spec.mean_workout_months - 1.0,
                            static_cast<double>(spec.max_workout_months - 1));

    std::vector<CashFlowSeries> loans;
    loans.reserve(spec.n_loans);
    char id[24];
    for (std::size_t i = 0; i < spec.n_loans; ++i) {
        std::snprintf(id, sizeof(id), "L%07zu", i + 1);

        // Workout period 1 + truncated exponential, in whole months.
        double raw = 0.0;
        if (exp_scale > 0.0) raw = -exp_scale * std::log1p(-unif(rng));
        int workout = 1 + static_cast<int>(raw);
        workout = std::min(workout, spec.max_workout_months);

        const int default_month =
            static_cast<int>(std::floor(unif(rng) * 36.0)); // cohort texture
        const int resolution_month = default_month + workout;

        const double outcome_draw = unif(rng);
        std::vector<CashFlow> flows;
        LoanOutcome outcome;
        if (outcome_draw < spec.cure_probability) {
            // Full repayment in one lump at a uniform month inside the workout.
            const int m = 1 + static_cast<int>(std::floor(unif(rng) * workout));
            flows.push_back(
                CashFlow{default_month + std::min(m, workout), spec.balance});
            outcome = LoanOutcome::Cured;
        } else if (outcome_draw <
                   spec.cure_probability + spec.full_loss_probability) {
            outcome = LoanOutcome::WrittenOff; // nothing recovered
        } else {
            const double ga = gamma_a(rng);
            const double gb = gamma_b(rng);
            const double loss = ga / (ga + gb);
            const double recovered = (1.0 - loss) * spec.balance;
            const std::vector<double> weights =
                schedule_weights(workout, spec.shape);
            for (int t = 1; t <= workout; ++t)
                flows.push_back(CashFlow{
                    default_month + t,
                    recovered * weights[static_cast<std::size_t>(t - 1)]});
            outcome = LoanOutcome::WrittenOff;
        }
        loans.emplace_back(id, default_month, resolution_month, spec.balance,
                           std::move(flows), outcome);
    }
    return DefaultedPortfolio(std::move(loans));
}

} // namespace lgdrate
