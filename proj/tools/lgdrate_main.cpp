// lgdrate: workout-LGD discount rates via the cost-of-capital approach.
//
// Subcommands: lgd compute, rates baseline, coc solve, riskfree, synth,
// report. Exit codes: 0 success, 2 usage, 3 data error, 4 numerical failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lgdrate/baseline_rates.hpp"
#include "lgdrate/coc_solver.hpp"
#include "lgdrate/config.hpp"
#include "lgdrate/csv.hpp"
#include "lgdrate/errors.hpp"
#include "lgdrate/io.hpp"
#include "lgdrate/report.hpp"
#include "lgdrate/synth.hpp"
#include "lgdrate/yield_curve.hpp"

namespace {

struct GlobalOptions {
    std::string config_path;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string format = "table"; // csv|table
};

lgdrate::Config load_config(const GlobalOptions& global) {
    if (global.config_path.empty()) return {};
    return lgdrate::Config::load(global.config_path);
}

lgdrate::EcConfig ec_config_from(const lgdrate::Config& cfg) {
    lgdrate::EcConfig ec;
    ec.pd = cfg.number("pd", 1.0);
    ec.asset_correlation = cfg.number("asset_correlation", 0.15);
    ec.confidence = cfg.number("confidence", 0.999);
    const std::string mode = cfg.text("ec_mode", "annual");
    if (mode == "annual")
        ec.mode = lgdrate::EcMode::AnnualPosting;
    else if (mode == "monthly")
        ec.mode = lgdrate::EcMode::Monthly;
    else
        throw lgdrate::ValueError("config key 'ec_mode': expected annual|monthly");
    ec.writeoffs_only = cfg.flag("writeoffs_only", false);
    return ec;
}

lgdrate::SolverConfig solver_config_from(const lgdrate::Config& cfg) {
    lgdrate::SolverConfig sc;
    sc.coc_rate = cfg.number("coc_rate", 0.07);
    sc.risk_free = cfg.number("risk_free", 0.0);
    sc.tolerance = cfg.number("tolerance", 1e-4);
    sc.max_iterations = static_cast<int>(cfg.integer("max_iterations", 100));
    sc.initial_delta = cfg.number("initial_delta", 0.05);
    sc.delta_upper_bound = cfg.number("delta_upper_bound", 5.0);
    return sc;
}

std::vector<double> parse_rate_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

// ---- lgd compute ----------------------------------------------------------

struct LgdComputeArgs {
    std::string loans, flows;
    double risk_free = 0.0;
    double delta = 0.0;
};

int run_lgd_compute(const LgdComputeArgs& args, const GlobalOptions& global) {
    const lgdrate::DefaultedPortfolio portfolio =
        lgdrate::ingest(args.loans, args.flows);
    const lgdrate::DiscountRate rate{args.risk_free, args.delta};
    const std::vector<lgdrate::RealisedLoss> losses =
        lgdrate::portfolio_losses(portfolio, rate);

    if (global.format == "csv") {
        std::cout << "loan_id,loss\n";
        for (const auto& l : losses)
            std::cout << l.loan_id << ',' << lgdrate::format_number(l.loss)
                      << '\n';
    } else {
        const lgdrate::LossMoments m = lgdrate::loss_moments(losses);
        std::cout << "loans resolved: " << m.count
                  << "  censored: " << portfolio.censored_count() << '\n'
                  << "discount rate: " << lgdrate::render_percent(rate.annual())
                  << " (r_f " << lgdrate::render_percent(args.risk_free)
                  << " + delta " << lgdrate::render_percent(args.delta) << ")\n"
                  << "mean loss: " << m.mean << "  sd: " << m.sd() << '\n';
    }
    return 0;
}

// ---- rates baseline -------------------------------------------------------

struct BaselineArgs {
    double risk_free = 0.0;
    double market_return = 0.0;
    bool has_market_return = false;
    std::string bonds_path;
    std::string returns_path;
    double contract_base = 0.0, contract_margin = 0.0, grade_factor = 0.0;
    bool has_contract = false;
    double kappa = -1.0, sigma_i = 0.0, sigma_m = 0.0;
    double dt_lgd = -1.0, e_lgd = -1.0, rho_e = 0.0, rho_d = 0.0;
};

std::vector<lgdrate::BaselineRow> compute_baselines(const BaselineArgs& args) {
    std::vector<lgdrate::BaselineRow> rows;
    rows.push_back({"risk_free", args.risk_free, "time value only"});

    if (args.has_contract)
        rows.push_back({"contract",
                        args.contract_base + args.contract_margin +
                            args.grade_factor,
                        "base + margin + grade factor"});

    if (!args.bonds_path.empty()) {
        const auto pairs = lgdrate::read_bond_pairs(args.bonds_path);
        const lgdrate::RoddRate rodd = lgdrate::rodd_rate(pairs);
        rows.push_back({"rodd", rodd.rate,
                        rodd.negative ? "NEGATIVE: nonsensical for discounting"
                                      : ""});
    }

    if (!args.returns_path.empty() && args.has_market_return) {
        const lgdrate::ReturnSeries series =
            lgdrate::read_return_series(args.returns_path);
        const lgdrate::BetaEstimate beta =
            lgdrate::capm_beta(series.market, series.instrument);
        std::string note = "beta=" + std::to_string(beta.beta);
        if (beta.degenerate) note += " (degenerate series, beta set to 0)";
        rows.push_back({"roe",
                        lgdrate::roe_rate(args.risk_free, beta.beta,
                                          args.market_return),
                        note});
    }

    if (args.kappa >= 0.0 && args.has_market_return) {
        const double beta =
            lgdrate::me_beta(args.kappa, args.sigma_i, args.sigma_m);
        rows.push_back({"me_roe",
                        lgdrate::roe_rate(args.risk_free, beta,
                                          args.market_return),
                        "beta=" + std::to_string(beta)});
    }

    if (args.dt_lgd >= 0.0 && args.e_lgd >= 0.0) {
        const lgdrate::WaccInputs w{args.dt_lgd, args.e_lgd, args.rho_e,
                                    args.rho_d};
        rows.push_back({"wacc", lgdrate::wacc_rate(w),
                        "capital ratio=" +
                            std::to_string(lgdrate::capital_ratio(w))});
    }
    return rows;
}

int run_rates_baseline(const BaselineArgs& args, const GlobalOptions& global) {
    const std::vector<lgdrate::BaselineRow> rows = compute_baselines(args);
    if (global.format == "csv") {
        std::cout << "method,rate,note\n";
        for (const auto& r : rows)
            std::cout << r.method << ',' << lgdrate::format_number(r.rate) << ','
                      << r.note << '\n';
    } else {
        for (const auto& r : rows) {
            std::printf("%-10s %8s  %s\n", r.method.c_str(),
                        lgdrate::render_percent(r.rate).c_str(), r.note.c_str());
        }
    }
    return 0;
}

// ---- coc solve ------------------------------------------------------------

struct CocSolveArgs {
    std::string loans, flows;
    bool trace = false;
};

int run_coc_solve(const CocSolveArgs& args, const GlobalOptions& global) {
    const lgdrate::Config cfg = load_config(global);
    const lgdrate::DefaultedPortfolio portfolio =
        lgdrate::ingest(args.loans, args.flows);
    const lgdrate::EcConfig ec = ec_config_from(cfg);
    const lgdrate::SolverConfig solver = solver_config_from(cfg);
    const lgdrate::EcProvider provider =
        lgdrate::make_ec_provider(portfolio, ec, solver.risk_free);

    const lgdrate::CocSolution sol =
        lgdrate::solve_delta(portfolio, solver, provider);
    const lgdrate::LossSummary losses =
        lgdrate::implied_lgd_at_solution(portfolio, sol, solver.risk_free);

    if (global.format == "csv") {
        std::cout << "metric,value\n"
                  << "delta," << lgdrate::format_number(sol.delta_star) << '\n'
                  << "r_d," << lgdrate::format_number(sol.discount_rate) << '\n'
                  << "r_f," << lgdrate::format_number(solver.risk_free) << '\n'
                  << "bepv," << lgdrate::format_number(sol.bepv) << '\n'
                  << "mcp," << lgdrate::format_number(sol.mcp) << '\n'
                  << "risk_margin," << lgdrate::format_number(sol.risk_margin)
                  << '\n'
                  << "ec_to_mcp," << lgdrate::format_number(sol.ec_to_mcp) << '\n'
                  << "mean_loss," << lgdrate::format_number(losses.mean) << '\n'
                  << "sd_loss," << lgdrate::format_number(losses.sd) << '\n'
                  << "iterations," << sol.iterations.size() << '\n'
                  << "converged," << (sol.converged ? "true" : "false") << '\n';
    } else {
        std::cout << "delta*: " << lgdrate::render_percent(sol.delta_star)
                  << "   r_d: " << lgdrate::render_percent(sol.discount_rate)
                  << "   (r_f " << lgdrate::render_percent(solver.risk_free)
                  << ", c " << lgdrate::render_percent(solver.coc_rate) << ")\n"
                  << "BEPV Y(0): " << sol.bepv << "   risk margin: "
                  << sol.risk_margin << "   MCP: " << sol.mcp << '\n'
                  << "EC/MCP: " << sol.ec_to_mcp
                  << "   mean loss at r_d: " << losses.mean
                  << "   sd: " << losses.sd << '\n'
                  << "converged: " << (sol.converged ? "yes" : "NO") << " in "
                  << sol.iterations.size() << " iterations\n";
        if (args.trace) {
            std::cout << "iter  delta        risk margin   residual\n";
            for (std::size_t i = 0; i < sol.iterations.size(); ++i) {
                const auto& it = sol.iterations[i];
                std::printf("%4zu  %.9f  %12.4f  %.3e\n", i + 1, it.delta,
                            it.risk_margin, it.residual);
            }
        }
    }
    return sol.converged ? 0 : 4;
}

// ---- riskfree -------------------------------------------------------------

struct RiskFreeArgs {
    std::string curve_path;
    std::string start, end;
    double tenor_months = 0.0;
};

int run_riskfree(const RiskFreeArgs& args, const GlobalOptions& global) {
    const lgdrate::YieldCurve curve = lgdrate::read_yield_curve(args.curve_path);
    const lgdrate::ReferencePeriod period{lgdrate::Date::parse_iso(args.start),
                                          lgdrate::Date::parse_iso(args.end),
                                          args.tenor_months};
    const double rate = lgdrate::mean_risk_free(curve, period);
    if (global.format == "csv")
        std::cout << "risk_free\n" << lgdrate::format_number(rate) << '\n';
    else
        std::cout << "mean risk-free rate over " << args.start << " .. "
                  << args.end << " at tenor " << args.tenor_months
                  << "m: " << lgdrate::render_percent(rate) << '\n';
    return 0;
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
    std::size_t n = 1000;
    double target_mean = -1.0, target_sd = -1.0;
    double cure = 0.1, full_loss = 0.2;
    double alpha = 2.0, beta = 2.0;
    double mean_workout = 6.0;
    int max_workout = 36;
    std::string shape = "uniform";
    std::string stem = "portfolio";
};

int run_synth(const SynthArgs& args, const GlobalOptions& global) {
    lgdrate::SynthSpec spec;
    if (args.target_mean >= 0.0 && args.target_sd >= 0.0) {
        spec = lgdrate::SynthSpec::calibrated(
            args.n, args.target_mean, args.target_sd, args.cure, args.full_loss,
            args.mean_workout, args.max_workout,
            lgdrate::shape_from_string(args.shape), global.seed);
    } else {
        spec.n_loans = args.n;
        spec.cure_probability = args.cure;
        spec.full_loss_probability = args.full_loss;
        spec.interior_alpha = args.alpha;
        spec.interior_beta = args.beta;
        spec.mean_workout_months = args.mean_workout;
        spec.max_workout_months = args.max_workout;
        spec.shape = lgdrate::shape_from_string(args.shape);
        spec.seed = global.seed;
        spec.validate();
    }

    const lgdrate::DefaultedPortfolio portfolio =
        lgdrate::generate_synthetic(spec);
    namespace fs = std::filesystem;
    std::error_code ecode;
    fs::create_directories(global.out_dir, ecode);
    const std::string loans =
        (fs::path(global.out_dir) / (args.stem + "_loans.csv")).string();
    const std::string flows =
        (fs::path(global.out_dir) / (args.stem + "_flows.csv")).string();
    lgdrate::write_portfolio(portfolio, loans, flows);
    std::cerr << "wrote " << loans << " and " << flows << " (" << portfolio.size()
              << " loans, seed " << global.seed << ", target mean "
              << spec.implied_loss_mean() << ", sd " << spec.implied_loss_sd()
              << ")\n";
    return 0;
}

// ---- report ---------------------------------------------------------------

struct ReportArgs {
    std::string loans, flows;
    std::string coc_rates = "0.06,0.07,0.08";
    std::string label = "portfolio";
    std::string period = "full";
    std::string stem = "report";
    BaselineArgs baselines; // appended when any inputs are supplied
    bool any_baselines = false;
};

int run_report(const ReportArgs& args, const GlobalOptions& global) {
    const lgdrate::Config cfg = load_config(global);
    const lgdrate::DefaultedPortfolio portfolio =
        lgdrate::ingest(args.loans, args.flows);

    lgdrate::ScenarioMatrix matrix;
    matrix.portfolio_label = args.label;
    matrix.period_label = args.period;
    matrix.coc_rates = parse_rate_list(args.coc_rates);
    matrix.ec = ec_config_from(cfg);
    matrix.solver = solver_config_from(cfg);
    matrix.risk_free = matrix.solver.risk_free;

    lgdrate::RunReport report = lgdrate::run_scenarios(portfolio, matrix);
    report.seed = global.seed;
    report.config_hash = cfg.hash();
    if (args.any_baselines) {
        BaselineArgs inputs = args.baselines;
        inputs.risk_free = matrix.risk_free;
        report.baselines = compute_baselines(inputs);
    }
    lgdrate::write_report_files(report, global.out_dir, args.stem);
    if (global.format == "table") lgdrate::emit_table(report, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workout-LGD discount rates via a cost-of-capital approach"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--config", global.config_path, "key=value config file");
    app.add_option("--seed", global.seed, "generator seed");
    app.add_option("--out", global.out_dir, "output directory");
    app.add_option("--format", global.format, "csv|table")
        ->check(CLI::IsMember({"csv", "table"}));

    // lgd compute
    auto* lgd = app.add_subcommand("lgd", "workout-loss calculations");
    auto* compute = lgd->add_subcommand("compute", "per-loan losses at a rate");
    LgdComputeArgs lgd_args;
    compute->add_option("--loans", lgd_args.loans, "loans CSV")->required();
    compute->add_option("--flows", lgd_args.flows, "flows CSV")->required();
    compute->add_option("--risk-free", lgd_args.risk_free, "annual r_f");
    compute->add_option("--delta", lgd_args.delta, "annual risk premium");

    // rates baseline
    auto* rates = app.add_subcommand("rates", "baseline discount-rate methods");
    auto* baseline = rates->add_subcommand("baseline", "compute supplied methods");
    BaselineArgs base_args;
    baseline->add_option("--risk-free", base_args.risk_free, "annual r_f");
    auto* mr = baseline->add_option("--market-return", base_args.market_return,
                                    "expected market return");
    baseline->add_option("--bonds", base_args.bonds_path, "bond price pairs CSV");
    baseline->add_option("--returns", base_args.returns_path,
                         "market/instrument returns CSV");
    auto* cb = baseline->add_option("--contract-base", base_args.contract_base,
                                    "contract base rate");
    baseline->add_option("--contract-margin", base_args.contract_margin,
                         "contract profit margin");
    baseline->add_option("--grade-factor", base_args.grade_factor,
                         "contract grade factor");
    baseline->add_option("--kappa", base_args.kappa,
                         "asset correlation for the ME beta");
    baseline->add_option("--sigma-instrument", base_args.sigma_i,
                         "instrument volatility");
    baseline->add_option("--sigma-market", base_args.sigma_m,
                         "market volatility");
    baseline->add_option("--downturn-lgd", base_args.dt_lgd, "E[L|downturn]");
    baseline->add_option("--expected-lgd", base_args.e_lgd, "E[L]");
    baseline->add_option("--equity-return", base_args.rho_e, "E[rho_e]");
    baseline->add_option("--debt-cost", base_args.rho_d, "E[rho_d]");

    // coc solve
    auto* coc = app.add_subcommand("coc", "cost-of-capital risk premium");
    auto* solve = coc->add_subcommand("solve", "run the fixed-point solver");
    CocSolveArgs coc_args;
    solve->add_option("--loans", coc_args.loans, "loans CSV")->required();
    solve->add_option("--flows", coc_args.flows, "flows CSV")->required();
    solve->add_flag("--trace", coc_args.trace, "print the iteration trace");

    // riskfree
    auto* riskfree = app.add_subcommand("riskfree", "yield-curve risk-free rate");
    RiskFreeArgs rf_args;
    riskfree->add_option("--curve", rf_args.curve_path, "curve CSV")->required();
    riskfree->add_option("--start", rf_args.start, "period start (ISO)")
        ->required();
    riskfree->add_option("--end", rf_args.end, "period end (ISO)")->required();
    riskfree->add_option("--tenor", rf_args.tenor_months, "target tenor, months")
        ->required();

    // synth
    auto* synth = app.add_subcommand("synth", "seeded synthetic portfolio");
    SynthArgs synth_args;
    synth->add_option("--n", synth_args.n, "number of loans");
    synth->add_option("--mean", synth_args.target_mean, "target loss mean");
    synth->add_option("--sd", synth_args.target_sd, "target loss sd");
    synth->add_option("--cure", synth_args.cure, "cure probability");
    synth->add_option("--full-loss", synth_args.full_loss,
                      "full-loss probability");
    synth->add_option("--alpha", synth_args.alpha, "interior beta alpha");
    synth->add_option("--beta", synth_args.beta, "interior beta beta");
    synth->add_option("--mean-workout", synth_args.mean_workout,
                      "mean workout months");
    synth->add_option("--max-workout", synth_args.max_workout,
                      "max workout months");
    synth->add_option("--shape", synth_args.shape,
                      "front-loaded|uniform|back-loaded");
    synth->add_option("--stem", synth_args.stem, "output file stem");

    // report
    auto* report = app.add_subcommand("report", "scenario matrix over c");
    ReportArgs report_args;
    report->add_option("--loans", report_args.loans, "loans CSV")->required();
    report->add_option("--flows", report_args.flows, "flows CSV")->required();
    report->add_option("--c", report_args.coc_rates,
                       "comma-separated cost-of-capital rates");
    report->add_option("--label", report_args.label, "portfolio label");
    report->add_option("--period", report_args.period, "period label");
    report->add_option("--stem", report_args.stem, "output file stem");
    auto* rep_mr = report->add_option("--market-return",
                                      report_args.baselines.market_return,
                                      "expected market return (baselines)");
    report->add_option("--bonds", report_args.baselines.bonds_path,
                       "bond price pairs CSV (baselines)");
    report->add_option("--returns", report_args.baselines.returns_path,
                       "returns CSV (baselines)");
    auto* rep_cb = report->add_option("--contract-base",
                                      report_args.baselines.contract_base,
                                      "contract base rate (baselines)");
    report->add_option("--contract-margin",
                       report_args.baselines.contract_margin,
                       "contract margin (baselines)");
    report->add_option("--grade-factor", report_args.baselines.grade_factor,
                       "contract grade factor (baselines)");
    report->add_option("--kappa", report_args.baselines.kappa,
                       "asset correlation for the ME beta (baselines)");
    report->add_option("--sigma-instrument", report_args.baselines.sigma_i,
                       "instrument volatility (baselines)");
    report->add_option("--sigma-market", report_args.baselines.sigma_m,
                       "market volatility (baselines)");
    report->add_option("--downturn-lgd", report_args.baselines.dt_lgd,
                       "E[L|downturn] (baselines)");
    report->add_option("--expected-lgd", report_args.baselines.e_lgd,
                       "E[L] (baselines)");
    report->add_option("--equity-return", report_args.baselines.rho_e,
                       "E[rho_e] (baselines)");
    report->add_option("--debt-cost", report_args.baselines.rho_d,
                       "E[rho_d] (baselines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return run_lgd_compute(lgd_args, global);
        if (baseline->parsed()) {
            base_args.has_market_return = mr->count() > 0;
            base_args.has_contract = cb->count() > 0;
            return run_rates_baseline(base_args, global);
        }
        if (solve->parsed()) return run_coc_solve(coc_args, global);
        if (riskfree->parsed()) return run_riskfree(rf_args, global);
        if (synth->parsed()) return run_synth(synth_args, global);
        if (report->parsed()) {
            report_args.baselines.has_market_return = rep_mr->count() > 0;
            report_args.baselines.has_contract = rep_cb->count() > 0;
            report_args.any_baselines =
                report_args.baselines.has_market_return ||
                report_args.baselines.has_contract ||
                !report_args.baselines.bonds_path.empty() ||
                !report_args.baselines.returns_path.empty() ||
                report_args.baselines.kappa >= 0.0 ||
                report_args.baselines.dt_lgd >= 0.0;
            return run_report(report_args, global);
        }
        std::cerr << "missing subcommand\n";
        return 2;
    } catch (const lgdrate::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const lgdrate::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const lgdrate::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
