#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "lgdrate/config.hpp"
#include "lgdrate/csv.hpp"
#include "lgdrate/errors.hpp"
#include "lgdrate/io.hpp"
#include "lgdrate/report.hpp"
#include "lgdrate/synth.hpp"

using namespace lgdrate;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lgdrate_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int counter() {
        static int n = 0;
        return n++;
    }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("ingest of a well-formed two-loan fixture") {
    TempDir dir;
    write_file(dir.file("loans.csv"),
               "loan_id,default_month,resolution_month,balance_at_default,outcome\n"
               "K1,0,6,1000,written_off\n"
               "K2,2,5,500,cured\n");
    write_file(dir.file("flows.csv"),
               "loan_id,month,net_cash_flow\n"
               "K1,3,250\n"
               "K1,6,-20\n"
               "K2,5,500\n");
    const DefaultedPortfolio pf = ingest(dir.file("loans.csv"), dir.file("flows.csv"));
    REQUIRE(pf.size() == 2);
    CHECK(pf.loans()[0].loan_id() == "K1");
    CHECK(pf.loans()[0].flows().size() == 2);
    CHECK(pf.loans()[1].outcome() == LoanOutcome::Cured);
    CHECK(pf.censored_count() == 0);
}

TEST_CASE("ingest errors carry file and line context") {
    TempDir dir;
    const std::string loans_ok =
        "loan_id,default_month,resolution_month,balance_at_default,outcome\n"
        "K1,0,6,1000,written_off\n";

    SUBCASE("orphan flow") {
        write_file(dir.file("loans.csv"), loans_ok);
        write_file(dir.file("flows.csv"),
                   "loan_id,month,net_cash_flow\nGHOST,3,250\n");
        try {
            ingest(dir.file("loans.csv"), dir.file("flows.csv"));
            FAIL("expected IntegrityError");
        } catch (const IntegrityError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("flows.csv:2") != std::string::npos);
            CHECK(msg.find("GHOST") != std::string::npos);
        }
    }
    SUBCASE("zero balance cites the positivity requirement") {
        write_file(dir.file("loans.csv"),
                   "loan_id,default_month,resolution_month,balance_at_default,outcome\n"
                   "K1,0,6,0,written_off\n");
        write_file(dir.file("flows.csv"), "loan_id,month,net_cash_flow\n");
        try {
            ingest(dir.file("loans.csv"), dir.file("flows.csv"));
            FAIL("expected ValueError");
        } catch (const ValueError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("loans.csv:2") != std::string::npos);
            CHECK(msg.find("positive balance") != std::string::npos);
        }
    }
    SUBCASE("missing column is a schema error") {
        write_file(dir.file("loans.csv"),
                   "loan_id,default_month,resolution_month,outcome\nK1,0,6,cured\n");
        write_file(dir.file("flows.csv"), "loan_id,month,net_cash_flow\n");
        CHECK_THROWS_AS(ingest(dir.file("loans.csv"), dir.file("flows.csv")),
                        SchemaError);
    }
    SUBCASE("unknown outcome") {
        write_file(dir.file("loans.csv"),
                   "loan_id,default_month,resolution_month,balance_at_default,outcome\n"
                   "K1,0,6,100,paid_sort_of\n");
        write_file(dir.file("flows.csv"), "loan_id,month,net_cash_flow\n");
        CHECK_THROWS_AS(ingest(dir.file("loans.csv"), dir.file("flows.csv")),
                        ValueError);
    }
    SUBCASE("duplicate loan id") {
        write_file(dir.file("loans.csv"),
                   "loan_id,default_month,resolution_month,balance_at_default,outcome\n"
                   "K1,0,6,100,cured\nK1,0,7,100,cured\n");
        write_file(dir.file("flows.csv"), "loan_id,month,net_cash_flow\n");
        CHECK_THROWS_AS(ingest(dir.file("loans.csv"), dir.file("flows.csv")),
                        IntegrityError);
    }
    SUBCASE("flow outside the workout window names the file") {
        write_file(dir.file("loans.csv"), loans_ok);
        write_file(dir.file("flows.csv"),
                   "loan_id,month,net_cash_flow\nK1,9,250\n");
        try {
            ingest(dir.file("loans.csv"), dir.file("flows.csv"));
            FAIL("expected ValueError");
        } catch (const ValueError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("flows.csv") != std::string::npos);
            CHECK(msg.find("workout window") != std::string::npos);
        }
    }
}

TEST_CASE("write then ingest round-trips the generator output") {
    TempDir dir;
    SynthSpec spec = SynthSpec::calibrated(300, 0.55, 0.32, 0.10, 0.25, 7.0, 30,
                                           RecoveryShape::BackLoaded, 4242);
    const DefaultedPortfolio original = generate_synthetic(spec);
    write_portfolio(original, dir.file("loans.csv"), dir.file("flows.csv"));
    const DefaultedPortfolio back =
        ingest(dir.file("loans.csv"), dir.file("flows.csv"));

    REQUIRE(back.size() == original.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        const CashFlowSeries& a = original.loans()[i];
        const CashFlowSeries& b = back.loans()[i];
        CHECK(a.loan_id() == b.loan_id());
        CHECK(a.default_month() == b.default_month());
        CHECK(a.resolution_month() == b.resolution_month());
        CHECK(a.balance_at_default() == b.balance_at_default());
        CHECK(a.outcome() == b.outcome());
        REQUIRE(a.flows().size() == b.flows().size());
        for (std::size_t k = 0; k < a.flows().size(); ++k) {
            CHECK(a.flows()[k].month == b.flows()[k].month);
            CHECK(a.flows()[k].amount == b.flows()[k].amount); // bit-exact
        }
    }
}

TEST_CASE("percent rendering follows the two-decimal style") {
    CHECK(render_percent(0.1521) == "15.21%");
    CHECK(render_percent(0.0637) == "6.37%");
    CHECK(render_percent(0.0884) == "8.84%");
    CHECK(render_percent(0.0) == "0.00%");
}

TEST_CASE("scenario report rows, identity and error isolation") {
    SynthSpec spec = SynthSpec::calibrated(120, 0.6, 0.30, 0.05, 0.30, 6.0, 24,
                                           RecoveryShape::Uniform, 5150);
    const DefaultedPortfolio pf = generate_synthetic(spec);

    ScenarioMatrix matrix;
    matrix.portfolio_label = "synthetic";
    matrix.period_label = "full";
    matrix.coc_rates = {0.08, 0.06, 0.07}; // out of order on purpose
    matrix.risk_free = 0.06;

    RunReport report = run_scenarios(pf, matrix);
    REQUIRE(report.rows.size() == 3);
    // Sorted by c, identity delta = r_d - r_f.
    CHECK(report.rows[0].coc_rate == 0.06);
    CHECK(report.rows[2].coc_rate == 0.08);
    for (const ReportRow& row : report.rows) {
        CHECK(row.converged);
        CHECK(std::fabs(row.delta - (row.discount_rate - row.risk_free)) <= 1e-10);
    }
    // Monotone delta across the c grid.
    CHECK(report.rows[0].delta <= report.rows[1].delta + 1e-12);
    CHECK(report.rows[1].delta <= report.rows[2].delta + 1e-12);

    SUBCASE("empty c grid emits an empty report") {
        ScenarioMatrix none = matrix;
        none.coc_rates = {};
        const RunReport empty = run_scenarios(pf, none);
        CHECK(empty.rows.empty());
        std::ostringstream csv;
        emit_csv(empty, csv);
        CHECK(csv.str() ==
              "portfolio,period,c,r_f,r_d,delta,ec_to_mcp,mean_loss,sd_loss,"
              "bepv,mcp,risk_margin,iterations,converged,status\n");
    }

    SUBCASE("a failing scenario is recorded in-row and the rest survive") {
        ScenarioMatrix mixed = matrix;
        // Monthly posting levies the annual cost every month; with c = 1 the
        // margin exhausts the baseline value and the scenario fails.
        mixed.ec.mode = EcMode::Monthly;
        mixed.coc_rates = {0.0, 1.0};
        const RunReport rep = run_scenarios(pf, mixed);
        REQUIRE(rep.rows.size() == 2);
        CHECK(rep.rows[0].status == "ok");
        CHECK(rep.rows[0].converged);
        CHECK(rep.rows[1].status != "ok");
        CHECK(!rep.rows[1].converged);
    }
}

TEST_CASE("emitted CSV is deterministic and long format is consistent") {
    SynthSpec spec = SynthSpec::calibrated(90, 0.55, 0.32, 0.05, 0.25, 5.0, 18,
                                           RecoveryShape::FrontLoaded, 31337);
    const DefaultedPortfolio pf = generate_synthetic(spec);
    ScenarioMatrix matrix;
    matrix.coc_rates = {0.06, 0.07};
    matrix.risk_free = 0.055;

    const RunReport a = run_scenarios(pf, matrix);
    const RunReport b = run_scenarios(pf, matrix);
    std::ostringstream csv_a, csv_b, long_a;
    emit_csv(a, csv_a);
    emit_csv(b, csv_b);
    CHECK(csv_a.str() == csv_b.str());

    emit_long_csv(a, long_a);
    // 9 metrics per row plus header.
    const std::string text = long_a.str();
    const std::size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == 1 + 9 * a.rows.size());

    TempDir dir;
    write_report_files(a, dir.path.string(), "report");
    CHECK(read_file(dir.file("report.csv")) == csv_a.str());
    const std::string table = read_file(dir.file("report.txt"));
    CHECK(table.find('%') != std::string::npos);
    CHECK(table.find("meta:") != std::string::npos);
    // Timestamps stay out of the CSVs.
    CHECK(read_file(dir.file("report.csv")).find("generated") == std::string::npos);
}

TEST_CASE("config parsing, defaults and hashing") {
    const Config cfg = Config::from_text(
        "# scenario config\n"
        "coc_rate = 0.07\n"
        "risk_free=0.0637  # trailing comment\n"
        "ec_mode = annual\n"
        "writeoffs_only = false\n"
        "max_iterations = 50\n",
        "inline");
    CHECK(cfg.number("coc_rate", 0.0) == 0.07);
    CHECK(cfg.number("risk_free", 0.0) == 0.0637);
    CHECK(cfg.number("absent", 1.25) == 1.25);
    CHECK(cfg.integer("max_iterations", 100) == 50);
    CHECK(cfg.flag("writeoffs_only", true) == false);
    CHECK(cfg.text("ec_mode", "monthly") == "annual");

    const Config same = Config::from_text(
        "risk_free = 0.0637\ncoc_rate=0.07\nec_mode=annual\n"
        "writeoffs_only=false\nmax_iterations=50\n",
        "other");
    CHECK(cfg.hash() == same.hash()); // order-insensitive canonical hash

    CHECK_THROWS_AS(Config::from_text("just words\n", "x"), SchemaError);
    CHECK_THROWS_AS(Config::from_text("coc_rate = fast\n", "x").number("coc_rate", 0),
                    ValueError);
}

TEST_CASE("csv number formatting round-trips") {
    for (double v : {0.0637, 1.0 / 3.0, 123456.789, 1e-17, 0.0})
        CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
}
