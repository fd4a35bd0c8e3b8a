#include "lgdrate/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "lgdrate/csv.hpp"
#include "lgdrate/errors.hpp"

namespace lgdrate {

namespace {

std::string now_utc() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

} // namespace

RunReport run_scenarios(const DefaultedPortfolio& portfolio,
                        const ScenarioMatrix& matrix) {
    RunReport report;
    report.generated_at = now_utc();
    append_scenarios(report, portfolio, matrix);
    finalize(report);
    return report;
}

void append_scenarios(RunReport& report, const DefaultedPortfolio& portfolio,
                      const ScenarioMatrix& matrix) {
    report.censored_loans += portfolio.censored_count();
    const EcProvider provider =
        make_ec_provider(portfolio, matrix.ec, matrix.risk_free);

    const auto solve_one = [&](double c) {
        ReportRow row;
        row.portfolio = matrix.portfolio_label;
        row.period = matrix.period_label;
        row.coc_rate = c;
        row.risk_free = matrix.risk_free;
        try {
            SolverConfig cfg = matrix.solver;
            cfg.coc_rate = c;
            cfg.risk_free = matrix.risk_free;
            const CocSolution sol = solve_delta(portfolio, cfg, provider);
            row.delta = sol.delta_star;
            row.discount_rate = sol.discount_rate;
            row.ec_to_mcp = sol.ec_to_mcp;
            row.bepv = sol.bepv;
            row.mcp = sol.mcp;
            row.risk_margin = sol.risk_margin;
            row.iterations = static_cast<int>(sol.iterations.size());
            row.converged = sol.converged;
            if (!sol.converged) row.status = "not converged";
            const LossSummary losses =
                implied_lgd_at_solution(portfolio, sol, matrix.risk_free);
            row.mean_loss = losses.mean;
            row.sd_loss = losses.sd;
        } catch (const Error& e) {
            row.status = e.what();
            row.converged = false;
        }
        return row;
    };

    // Scenario solves are independent and pure; they run concurrently and
    // assembly stays a deterministic in-order reduction.
    std::vector<std::future<ReportRow>> pending;
    pending.reserve(matrix.coc_rates.size());
    for (double c : matrix.coc_rates)
        pending.push_back(std::async(std::launch::async, solve_one, c));
    for (std::future<ReportRow>& f : pending) report.rows.push_back(f.get());
}

void finalize(RunReport& report) {
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& a, const ReportRow& b) {
                         if (a.portfolio != b.portfolio)
                             return a.portfolio < b.portfolio;
                         if (a.period != b.period) return a.period < b.period;
                         return a.coc_rate < b.coc_rate;
                     });
}

std::string render_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", fraction * 100.0);
    return buf;
}

namespace {

const std::vector<std::string> kWideColumns = {
    "portfolio", "period",    "c",          "r_f",    "r_d",
    "delta",     "ec_to_mcp", "mean_loss",  "sd_loss", "bepv",
    "mcp",       "risk_margin", "iterations", "converged", "status"};

std::string sanitize(const std::string& text) {
    std::string out = text;
    for (char& ch : out)
        if (ch == ',' || ch == '\n') ch = ';';
    return out;
}

} // namespace

void emit_csv(const RunReport& report, std::ostream& out) {
    out << csv_join(kWideColumns) << '\n';
    for (const ReportRow& r : report.rows) {
        out << sanitize(r.portfolio) << ',' << sanitize(r.period) << ','
            << format_number(r.coc_rate) << ',' << format_number(r.risk_free)
            << ',' << format_number(r.discount_rate) << ','
            << format_number(r.delta) << ',' << format_number(r.ec_to_mcp) << ','
            << format_number(r.mean_loss) << ',' << format_number(r.sd_loss)
            << ',' << format_number(r.bepv) << ',' << format_number(r.mcp) << ','
            << format_number(r.risk_margin) << ',' << r.iterations << ','
            << (r.converged ? "true" : "false") << ',' << sanitize(r.status)
            << '\n';
    }
}

void emit_long_csv(const RunReport& report, std::ostream& out) {
    out << "scenario,metric,value\n";
    for (const ReportRow& r : report.rows) {
        const std::string scenario = sanitize(r.portfolio) + "/" +
                                     sanitize(r.period) + "/c=" +
                                     format_number(r.coc_rate);
        const std::pair<const char*, double> metrics[] = {
            {"r_f", r.risk_free},     {"r_d", r.discount_rate},
            {"delta", r.delta},       {"ec_to_mcp", r.ec_to_mcp},
            {"mean_loss", r.mean_loss}, {"sd_loss", r.sd_loss},
            {"bepv", r.bepv},         {"mcp", r.mcp},
            {"risk_margin", r.risk_margin}};
        for (const auto& [name, value] : metrics)
            out << scenario << ',' << name << ',' << format_number(value) << '\n';
    }
}

void emit_table(const RunReport& report, std::ostream& out) {
    char line[256];
    out << "scenario results (rates annual effective)\n";
    std::snprintf(line, sizeof(line), "%-12s %-10s %7s %8s %8s %8s %9s %7s %7s  %s\n",
                  "portfolio", "period", "c", "r_f", "r_d", "delta", "EC/MCP",
                  "L-bar", "sd", "status");
    out << line;
    for (const ReportRow& r : report.rows) {
        std::snprintf(line, sizeof(line),
                      "%-12s %-10s %7s %8s %8s %8s %9.3f %7.3f %7.3f  %s\n",
                      r.portfolio.c_str(), r.period.c_str(),
                      render_percent(r.coc_rate).c_str(),
                      render_percent(r.risk_free).c_str(),
                      render_percent(r.discount_rate).c_str(),
                      render_percent(r.delta).c_str(), r.ec_to_mcp, r.mean_loss,
                      r.sd_loss, r.status.c_str());
        out << line;
    }
    if (!report.baselines.empty()) {
        out << "\nbaseline discount rates\n";
        for (const BaselineRow& b : report.baselines) {
            std::snprintf(line, sizeof(line), "%-12s %8s  %s\n", b.method.c_str(),
                          render_percent(b.rate).c_str(), b.note.c_str());
            out << line;
        }
    }
    out << "\nmeta: seed=" << report.seed << " config=" << report.config_hash
        << " censored=" << report.censored_loans
        << " generated=" << report.generated_at << '\n';
}

void write_report_files(const RunReport& report, const std::string& out_dir,
                        const std::string& stem) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const fs::path base = fs::path(out_dir) / stem;

    const auto open = [](const fs::path& p) {
        std::ofstream out(p);
        if (!out) throw DataError("cannot write '" + p.string() + "'");
        return out;
    };

    {
        std::ofstream out = open(base.string() + ".csv");
        emit_csv(report, out);
    }
    {
        std::ofstream out = open(base.string() + "_long.csv");
        emit_long_csv(report, out);
    }
    {
        std::ofstream out = open(base.string() + ".txt");
        emit_table(report, out);
    }
    if (!report.baselines.empty()) {
        std::ofstream out = open(base.string() + "_baselines.csv");
        out << "method,rate,note\n";
        for (const BaselineRow& b : report.baselines)
            out << sanitize(b.method) << ',' << format_number(b.rate) << ','
                << sanitize(b.note) << '\n';
    }
}

} // namespace lgdrate
