#pragma once

#include <string>
#include <vector>

namespace acmv {

// Shortest round-trip decimal form of a double ("%.17g"), so re-reading a CSV
// reproduces the exact value and equal runs emit byte-identical files.
std::string csv_double(double v);

// Split a comma-separated line. Fields in this project never contain commas
// or quotes, so no escaping is handled.
std::vector<std::string> csv_split(const std::string& line);

double parse_double(const std::string& field);

} // namespace acmv
