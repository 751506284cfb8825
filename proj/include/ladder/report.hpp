#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ladder/cylinders.hpp"
#include "ladder/fuchsian.hpp"

namespace ladder {

using Json = nlohmann::json;

// JSON forms. Field elements: {"a":[num,den],"b":[num,den],"D":int}, with
// num/den as JSON integers when they fit in 64 bits and decimal strings
// otherwise. Matrices: {"a":...,"b":...,"c":...,"d":...,"D":int}.
Json quadext_to_json(const QuadExt& x);
QuadExt quadext_from_json(const Json& j);
Json matrix_to_json(const Mat2& m);
Mat2 matrix_from_json(const Json& j);

struct CheckVerdict {
  std::string name;
  std::string verdict;  // "pass", "fail", "skipped"
  std::string detail;

  friend bool operator==(const CheckVerdict&, const CheckVerdict&) = default;
};

struct CylinderRow {
  int index = 0;
  QuadExt height;
  QuadExt circumference;
  QuadExt modulus;
  std::string modulus_approx;

  friend bool operator==(const CylinderRow&, const CylinderRow&) = default;
};

struct DirectionReport {
  std::string direction;
  std::vector<CylinderRow> cylinders;
  std::optional<QuadExt> common_inverse_modulus;
  std::vector<BigInt> multipliers;
  std::optional<Mat2> parabolic;
  std::vector<BigInt> twists;

  friend bool operator==(const DirectionReport&,
                         const DirectionReport&) = default;
};

struct Report {
  long k = 0;
  long l = 0;
  std::int64_t radicand = 1;
  int depth = 0;
  int digits = 12;
  QuadExt lambda;
  std::string lambda_approx;
  QuadExt area_value;
  std::string area_approx;
  Mat2 gen_t;
  Mat2 gen_r;
  QuadExt strip_left;
  QuadExt strip_right;
  std::vector<DirectionReport> directions;
  std::vector<CheckVerdict> checks;

  friend bool operator==(const Report&, const Report&) = default;
};

// Full exact report for one parameter pair; `table_rows` caps the cylinder
// rows actually listed (the decomposition itself uses `depth`).
Report build_report(const LadderParams& params, int depth, int digits,
                    int table_rows = 8);

Json report_to_json(const Report& r);
Report report_from_json(const Json& j);

}  // namespace ladder
