#pragma once

#include <string>
#include <vector>

namespace fairucb::csv {

// Minimal comma-separated handling. Fields written by this project never
// contain commas, quotes or embedded newlines, so no quoting layer.
std::vector<std::string> split_line(const std::string& line);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column position by header name, -1 when absent.
    int column(const std::string& name) const;
};

Table read_file(const std::string& path);

// Round-trip formatting (%.17g): parsing the string recovers the exact
// double, which the log-replay tests rely on.
std::string format_double(double v);
double parse_double(const std::string& s);

}  // namespace fairucb::csv
