#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bvp {

// Nonpositive scale or shape parameter.
struct invalid_parameter_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation point below the location support of a density.
struct support_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Absolutely continuous density queried exactly on the singular line.
struct diagonal_input_error : std::domain_error {
  using std::domain_error::domain_error;
};

// An M-step denominator vanished (e.g. every observation at the support edge).
struct degenerate_data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The legacy pseudo-data scheme requires alpha0+alpha1+alpha2 > 1 at every iterate.
struct restriction_violated_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejection sampler exhausted its draw budget.
struct sampling_stall_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every bootstrap replicate failed to produce an estimate.
struct bootstrap_failure_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A filter (e.g. threshold exceedance) retained no rows.
struct empty_result_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t line_no)
      : std::runtime_error(what + " at line " + std::to_string(line_no)),
        line(line_no) {}
  std::size_t line;
};

}  // namespace bvp
