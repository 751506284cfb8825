#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

struct field_mismatch : std::domain_error {
  using std::domain_error::domain_error;
};

struct division_by_zero : std::domain_error {
  using std::domain_error::domain_error;
};

struct invalid_parameters : std::domain_error {
  using std::domain_error::domain_error;
};

struct truncation_exceeded : std::domain_error {
  using std::domain_error::domain_error;
};

// Slope outside the open band (lambda, 1/lambda).
struct slope_out_of_band : std::domain_error {
  using std::domain_error::domain_error;
};

// Kept for API completeness; the exact comparison path never raises it.
struct undecidable_at_precision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_commensurable_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct non_integer_twist : std::domain_error {
  non_integer_twist(int index_, const std::string& what_)
      : std::domain_error(what_), index(index_) {}
  int index;
};

struct not_parabolic : std::domain_error {
  using std::domain_error::domain_error;
};

struct reduction_cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ladder
