#include <doctest.h>

#include <cmath>

#include "lgdrate/errors.hpp"
#include "lgdrate/portfolio.hpp"
#include "lgdrate/synth.hpp"

using namespace lgdrate;

TEST_CASE("generation is deterministic per seed") {
    SynthSpec spec = SynthSpec::calibrated(500, 0.6, 0.30, 0.05, 0.30, 8.0, 30,
                                           RecoveryShape::FrontLoaded, 1234);
    const DefaultedPortfolio a = generate_synthetic(spec);
    const DefaultedPortfolio b = generate_synthetic(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const CashFlowSeries& la = a.loans()[i];
        const CashFlowSeries& lb = b.loans()[i];
        CHECK(la.loan_id() == lb.loan_id());
        CHECK(la.default_month() == lb.default_month());
        CHECK(la.resolution_month() == lb.resolution_month());
        REQUIRE(la.flows().size() == lb.flows().size());
        for (std::size_t k = 0; k < la.flows().size(); ++k) {
            CHECK(la.flows()[k].month == lb.flows()[k].month);
            CHECK(la.flows()[k].amount == lb.flows()[k].amount);
        }
    }
    spec.seed = 1235;
    const DefaultedPortfolio c = generate_synthetic(spec);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.size() && !any_diff; ++i)
        any_diff = a.loans()[i].resolution_month() != c.loans()[i].resolution_month();
    CHECK(any_diff);
}

TEST_CASE("sample loss moments track the calibrated targets") {
    // Personal-loans-like and mortgage-like calibrations.
    struct Target {
        double mean, sd, cure, full, workout;
        int max_workout;
    };
    const Target targets[] = {{0.749, 0.290, 0.05, 0.45, 4.67, 60},
                              {0.256, 0.366, 0.55, 0.10, 25.64, 90}};
    for (const Target& t : targets) {
        SynthSpec spec =
            SynthSpec::calibrated(50000, t.mean, t.sd, t.cure, t.full, t.workout,
                                  t.max_workout, RecoveryShape::Uniform, 777);
        CHECK(spec.implied_loss_mean() == doctest::Approx(t.mean).epsilon(1e-12));
        CHECK(spec.implied_loss_sd() == doctest::Approx(t.sd).epsilon(1e-12));

        const DefaultedPortfolio pf = generate_synthetic(spec);
        const LossMoments m = portfolio_loss_moments(pf, DiscountRate{0.0, 0.0});
        CHECK(std::fabs(m.mean - t.mean) <= 0.02);
        CHECK(std::fabs(m.sd() - t.sd) <= 0.02);
    }
}

TEST_CASE("zero loans produce an empty valid portfolio") {
    SynthSpec spec;
    spec.n_loans = 0;
    spec.cure_probability = 0.1;
    spec.full_loss_probability = 0.1;
    const DefaultedPortfolio pf = generate_synthetic(spec);
    CHECK(pf.size() == 0);
    CHECK(pf.max_workout_months() == 0);
}

TEST_CASE("outcome mechanics") {
    SynthSpec spec;
    spec.n_loans = 400;
    spec.cure_probability = 0.5;
    spec.full_loss_probability = 0.25;
    spec.interior_alpha = 2.0;
    spec.interior_beta = 3.0;
    spec.mean_workout_months = 6.0;
    spec.max_workout_months = 24;
    spec.seed = 9;
    const DefaultedPortfolio pf = generate_synthetic(spec);
    std::size_t cures = 0, fulls = 0;
    for (const CashFlowSeries& loan : pf.loans()) {
        const double l = realised_loss(loan, loan.default_month(),
                                       DiscountRate{0.0, 0.0})
                             .loss;
        if (loan.outcome() == LoanOutcome::Cured) {
            ++cures;
            CHECK(l == doctest::Approx(0.0).epsilon(1e-12)); // full repayment
        } else if (loan.flows().empty()) {
            ++fulls;
            CHECK(l == 1.0);
        } else {
            CHECK(l > 0.0);
            CHECK(l < 1.0);
        }
        CHECK(loan.resolution_month() - loan.default_month() <=
              spec.max_workout_months);
        CHECK(loan.resolution_month() > loan.default_month());
    }
    CHECK(cures > 150); // about half
    CHECK(fulls > 50);  // about a quarter
}

TEST_CASE("infeasible calibrations are rejected") {
    // Variance beyond what masses plus an interior beta can produce.
    CHECK_THROWS_AS(SynthSpec::calibrated(10, 0.5, 0.55, 0.05, 0.05, 5, 20,
                                          RecoveryShape::Uniform, 1),
                    SpecInfeasible);
    // Interior mean forced outside (0,1).
    CHECK_THROWS_AS(SynthSpec::calibrated(10, 0.9, 0.05, 0.3, 0.0, 5, 20,
                                          RecoveryShape::Uniform, 1),
                    SpecInfeasible);
    SynthSpec bad;
    bad.n_loans = 5;
    bad.cure_probability = 0.7;
    bad.full_loss_probability = 0.5;
    CHECK_THROWS_AS(bad.validate(), SpecInfeasible);
    bad = SynthSpec{};
    bad.mean_workout_months = 40.0;
    bad.max_workout_months = 20;
    CHECK_THROWS_AS(bad.validate(), SpecInfeasible);
}

TEST_CASE("mean workout survives truncation at the cap") {
    SynthSpec spec;
    spec.n_loans = 60000;
    spec.cure_probability = 0.0;
    spec.full_loss_probability = 0.0;
    spec.interior_alpha = 2.0;
    spec.interior_beta = 2.0;
    spec.mean_workout_months = 25.64;
    spec.max_workout_months = 90;
    spec.seed = 31;
    const DefaultedPortfolio pf = generate_synthetic(spec);
    double mean = 0.0;
    for (const CashFlowSeries& loan : pf.loans()) mean += loan.workout_months();
    mean /= static_cast<double>(pf.size());
    CHECK(std::fabs(mean - 25.64) < 0.5);
}
