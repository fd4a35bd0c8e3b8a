#include "lgdrate/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lgdrate/errors.hpp"

namespace lgdrate {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    for (std::string& f : out) {
        const auto b = f.find_first_not_of(" \t");
        const auto e = f.find_last_not_of(" \t");
        f = (b == std::string::npos) ? std::string() : f.substr(b, e - b + 1);
    }
    return out;
}

} // namespace

CsvReader::CsvReader(const std::string& path,
                     const std::vector<std::string>& columns)
    : path_(path), columns_(columns) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string line;
    while (std::getline(in, line)) lines_.push_back(line);
    if (lines_.empty())
        throw SchemaError(path + ": empty file, expected header '" +
                          csv_join(columns) + "'");
    const std::vector<std::string> header = split_fields(lines_[0]);
    if (header != columns_)
        throw SchemaError(path + ":1: header mismatch, expected '" +
                          csv_join(columns_) + "' got '" + lines_[0] + "'");
    cursor_ = 1;
}

bool CsvReader::next() {
    while (cursor_ < lines_.size()) {
        line_ = cursor_ + 1;
        const std::string& raw = lines_[cursor_++];
        if (raw.empty() || raw == "\r") continue;
        fields_ = split_fields(raw);
        if (fields_.size() != columns_.size())
            throw SchemaError(path_ + ":" + std::to_string(line_) + ": expected " +
                              std::to_string(columns_.size()) + " fields, got " +
                              std::to_string(fields_.size()));
        return true;
    }
    return false;
}

const std::string& CsvReader::text(std::size_t col) const {
    return fields_.at(col);
}

double CsvReader::number(std::size_t col) const {
    const std::string& f = fields_.at(col);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(f.c_str(), &end);
    if (end == f.c_str() || *end != '\0' || errno == ERANGE)
        fail(col, "not a number: '" + f + "'");
    return v;
}

long CsvReader::integer(std::size_t col) const {
    const std::string& f = fields_.at(col);
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(f.c_str(), &end, 10);
    if (end == f.c_str() || *end != '\0' || errno == ERANGE)
        fail(col, "not an integer: '" + f + "'");
    return v;
}

void CsvReader::fail(std::size_t col, const std::string& reason) const {
    throw ValueError(path_ + ":" + std::to_string(line_) + ": field '" +
                     columns_.at(col) + "': " + reason);
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += fields[i];
    }
    return out;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    // Shortest representation that still round-trips.
    for (int prec = 15; prec <= 16; ++prec) {
        char probe[40];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, value);
        if (std::strtod(probe, nullptr) == value) return probe;
    }
    return buf;
}

} // namespace lgdrate
