#pragma once

#include <cstdint>
#include <string>

#include "lgdrate/portfolio.hpp"

namespace lgdrate {

enum class RecoveryShape { FrontLoaded, Uniform, BackLoaded };

const char* to_string(RecoveryShape shape);
RecoveryShape shape_from_string(const std::string& text);

// Bimodal loss model: point masses at 0 (cures) and 1 (full losses) plus an
// interior beta, mirroring the observed shape of workout-LGD histograms.
struct SynthSpec {
    std::size_t n_loans = 0;
    double cure_probability = 0.0;
    double full_loss_probability = 0.0;
    double interior_alpha = 2.0; // beta shapes for interior losses
    double interior_beta = 2.0;
    double mean_workout_months = 6.0;
    int max_workout_months = 36;
    RecoveryShape shape = RecoveryShape::Uniform;
    double balance = 1000.0;
    std::uint64_t seed = 0;

    void validate() const; // throws SpecInfeasible

    // Undiscounted mixture moments of the loss the generator targets.
    double implied_loss_mean() const;
    double implied_loss_sd() const;

    // Solves the interior beta so the mixture hits (target_mean, target_sd)
    // given the point masses. Throws SpecInfeasible when no beta does.
    static SynthSpec calibrated(std::size_t n_loans, double target_mean,
                                double target_sd, double cure_probability,
                                double full_loss_probability,
                                double mean_workout_months,
                                int max_workout_months, RecoveryShape shape,
                                std::uint64_t seed);
};

// Deterministic for a given seed on a given build.
DefaultedPortfolio generate_synthetic(const SynthSpec& spec);

} // namespace lgdrate
