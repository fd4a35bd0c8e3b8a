#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lgdrate {

// Minimal CSV support for the desk-scale files this tool handles: comma
// separated, first row is the header, no quoting. Errors carry file, line
// and field context.
class CsvReader {
public:
    CsvReader(const std::string& path, const std::vector<std::string>& columns);

    // Advances to the next data row; false at end of file.
    bool next();

    std::size_t line_number() const { return line_; }
    const std::string& path() const { return path_; }

    const std::string& text(std::size_t col) const;
    double number(std::size_t col) const;
    long integer(std::size_t col) const;

private:
    std::string path_;
    std::vector<std::string> lines_;
    std::vector<std::string> fields_;
    std::vector<std::string> columns_;
    std::size_t cursor_ = 0;
    std::size_t line_ = 0;

    [[noreturn]] void fail(std::size_t col, const std::string& reason) const;
};

std::string csv_join(const std::vector<std::string>& fields);

// Full-precision float formatting so emitted CSVs round-trip exactly.
std::string format_number(double value);

} // namespace lgdrate
