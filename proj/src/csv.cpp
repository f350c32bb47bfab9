#include "bvp/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "bvp/errors.hpp"

namespace bvp {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

// Parses a full double; the whole field must be consumed.
bool parse_field(const std::string& field, double& out) {
  if (field.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stod(field, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == field.size();
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

BivariateSample read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::domain_error(path + " is empty");
  strip_cr(line);
  if (line != "x1,x2") {
    throw parse_error("expected header \"x1,x2\"", 1);
  }

  BivariateSample data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const std::size_t comma = line.find(',');
    double a = 0.0;
    double b = 0.0;
    if (comma == std::string::npos ||
        !parse_field(line.substr(0, comma), a) ||
        !parse_field(line.substr(comma + 1), b)) {
      throw parse_error("malformed row \"" + line + "\"", line_no);
    }
    data.push_back(a, b);
  }
  if (data.empty()) throw std::domain_error(path + " has no data rows");
  return data;
}

void write_csv(const BivariateSample& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "x1,x2\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    out << format_double(data.x1[i]) << ',' << format_double(data.x2[i])
        << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace bvp
