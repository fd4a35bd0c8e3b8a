#include "lgdrate/io.hpp"

#include <fstream>
#include <map>
#include <string>

#include "lgdrate/csv.hpp"
#include "lgdrate/errors.hpp"

namespace lgdrate {

namespace {

const std::vector<std::string> kLoanColumns = {
    "loan_id", "default_month", "resolution_month", "balance_at_default",
    "outcome"};
const std::vector<std::string> kFlowColumns = {"loan_id", "month",
                                               "net_cash_flow"};

struct LoanRecord {
    int default_month;
    int resolution_month;
    double balance;
    LoanOutcome outcome;
    std::vector<CashFlow> flows;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    return out;
}

} // namespace

DefaultedPortfolio ingest(const std::string& loans_path,
                          const std::string& flows_path) {
    std::map<std::string, LoanRecord> records;

    CsvReader loans(loans_path, kLoanColumns);
    while (loans.next()) {
        const std::string id = loans.text(0);
        const long d = loans.integer(1);
        const long r = loans.integer(2);
        const double balance = loans.number(3);
        if (d < 0 || r < 0)
            throw ValueError(loans_path + ":" + std::to_string(loans.line_number()) +
                             ": month indices must be non-negative");
        if (r < d)
            throw ValueError(loans_path + ":" + std::to_string(loans.line_number()) +
                             ": resolution_month precedes default_month");
        if (!(balance > 0.0))
            throw ValueError(loans_path + ":" + std::to_string(loans.line_number()) +
                             ": field 'balance_at_default': the workout loss is "
                             "defined only for a positive balance");
        LoanOutcome outcome;
        try {
            outcome = outcome_from_string(loans.text(4));
        } catch (const ValueError& e) {
            throw ValueError(loans_path + ":" + std::to_string(loans.line_number()) +
                             ": field 'outcome': " + e.what());
        }
        if (!records.emplace(id, LoanRecord{static_cast<int>(d),
                                            static_cast<int>(r), balance, outcome,
                                            {}})
                 .second)
            throw IntegrityError(loans_path + ":" +
                                 std::to_string(loans.line_number()) +
                                 ": duplicate loan_id '" + id + "'");
    }

    CsvReader flows(flows_path, kFlowColumns);
    while (flows.next()) {
        const std::string id = flows.text(0);
        auto it = records.find(id);
        if (it == records.end())
            throw IntegrityError(flows_path + ":" +
                                 std::to_string(flows.line_number()) +
                                 ": flow references unknown loan_id '" + id + "'");
        const long month = flows.integer(1);
        if (month < 0)
            throw ValueError(flows_path + ":" + std::to_string(flows.line_number()) +
                             ": field 'month': negative month index");
        it->second.flows.push_back(
            CashFlow{static_cast<int>(month), flows.number(2)});
    }

    std::vector<CashFlowSeries> series;
    series.reserve(records.size());
    for (auto& [id, rec] : records) {
        try {
            series.emplace_back(id, rec.default_month, rec.resolution_month,
                                rec.balance, std::move(rec.flows), rec.outcome);
        } catch (const ValueError& e) {
            throw ValueError(flows_path + ": " + e.what());
        }
    }
    return DefaultedPortfolio(std::move(series));
}

void write_portfolio(const DefaultedPortfolio& portfolio,
                     const std::string& loans_path,
                     const std::string& flows_path) {
    std::ofstream loans = open_out(loans_path);
    loans << csv_join(kLoanColumns) << '\n';
    std::ofstream flows = open_out(flows_path);
    flows << csv_join(kFlowColumns) << '\n';
    for (const CashFlowSeries& loan : portfolio.loans()) {
        loans << loan.loan_id() << ',' << loan.default_month() << ','
              << loan.resolution_month() << ','
              << format_number(loan.balance_at_default()) << ','
              << to_string(loan.outcome()) << '\n';
        for (const CashFlow& f : loan.flows())
            flows << loan.loan_id() << ',' << f.month << ','
                  << format_number(f.amount) << '\n';
    }
    if (!loans || !flows)
        throw DataError("failed writing portfolio files '" + loans_path + "', '" +
                        flows_path + "'");
}

YieldCurve read_yield_curve(const std::string& path) {
    CsvReader in(path, {"date", "tenor_months", "yield"});
    std::vector<CurveObservation> obs;
    while (in.next()) {
        Date date;
        try {
            date = Date::parse_iso(in.text(0));
        } catch (const ValueError& e) {
            throw ValueError(path + ":" + std::to_string(in.line_number()) +
                             ": field 'date': " + e.what());
        }
        obs.push_back(CurveObservation{date, static_cast<int>(in.integer(1)),
                                       in.number(2)});
    }
    return YieldCurve(std::move(obs));
}

ReturnSeries read_return_series(const std::string& path) {
    CsvReader in(path, {"date", "market_return", "instrument_return"});
    ReturnSeries s;
    while (in.next()) {
        s.market.push_back(in.number(1));
        s.instrument.push_back(in.number(2));
    }
    return s;
}

std::vector<BondPricePair> read_bond_pairs(const std::string& path) {
    CsvReader in(path, {"price_at_default", "price_at_resolution", "span_months"});
    std::vector<BondPricePair> pairs;
    while (in.next())
        pairs.push_back(BondPricePair{in.number(0), in.number(1),
                                      static_cast<int>(in.integer(2))});
    return pairs;
}

} // namespace lgdrate
