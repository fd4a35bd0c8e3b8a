#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lgdrate/coc_solver.hpp"

namespace lgdrate {

// One solved (portfolio, period, c) cell in the Table-2-style layout.
struct ReportRow {
    std::string portfolio;
    std::string period;
    double coc_rate = 0.0;
    double risk_free = 0.0;
    double discount_rate = 0.0; // r_d = r_f + delta
    double delta = 0.0;
    double ec_to_mcp = 0.0;
    double mean_loss = 0.0; // L-bar at r_d
    double sd_loss = 0.0;
    double bepv = 0.0;
    double mcp = 0.0;
    double risk_margin = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string status = "ok"; // error text when a scenario fails
};

struct BaselineRow {
    std::string method; // contract | rodd | roe | me_roe | wacc | risk_free
    double rate = 0.0;
    std::string note;
};

struct RunReport {
    std::vector<ReportRow> rows;
    std::vector<BaselineRow> baselines;
    std::uint64_t seed = 0;
    std::string config_hash;
    std::string generated_at; // never emitted into CSVs
    std::size_t censored_loans = 0;
};

struct ScenarioMatrix {
    std::string portfolio_label = "portfolio";
    std::string period_label = "full";
    std::vector<double> coc_rates;
    double risk_free = 0.0;
    EcConfig ec;
    SolverConfig solver; // coc_rate/risk_free overridden per scenario
};

// One solve per c; failures are recorded in-row and the run continues.
RunReport run_scenarios(const DefaultedPortfolio& portfolio,
                        const ScenarioMatrix& matrix);

void append_scenarios(RunReport& report, const DefaultedPortfolio& portfolio,
                      const ScenarioMatrix& matrix);

// Sorts rows by (portfolio, period, c); call once after appends.
void finalize(RunReport& report);

std::string render_percent(double fraction); // 0.1521 -> "15.21%"

// Wide CSV, full-precision fractions (deterministic, no timestamps).
void emit_csv(const RunReport& report, std::ostream& out);
// Long format: scenario,metric,value - for external charting.
void emit_long_csv(const RunReport& report, std::ostream& out);
// Aligned human-readable table with percent rendering and metadata.
void emit_table(const RunReport& report, std::ostream& out);

void write_report_files(const RunReport& report, const std::string& out_dir,
                        const std::string& stem);

} // namespace lgdrate
