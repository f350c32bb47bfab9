#pragma once

#include <string>

#include "bvp/types.hpp"

namespace bvp {

// Renders a double with 17 significant digits, enough to round-trip exactly.
std::string format_double(double v);

// Reads a two-column CSV with header "x1,x2", one decimal pair per line.
// Malformed rows raise parse_error with the line number; a file with no data
// rows raises std::domain_error.
BivariateSample read_csv(const std::string& path);

void write_csv(const BivariateSample& data, const std::string& path);

}  // namespace bvp
