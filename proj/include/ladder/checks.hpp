#pragma once

#include "ladder/report.hpp"

namespace ladder {

struct CheckOptions {
  long k = 2;
  long l = 1;
  int depth = 52;  // covers the 50-cylinder tables
  int digits = 12;
  int max_word_len = 8;
  std::uint64_t seed = 20240607;
  int reduction_points = 1000;
  int roundtrip_words = 500;
  int membership_words = 100;
};

// The full verification suite; every verdict is pass/fail/skipped with a
// one-line detail. Exceptions inside a check fail that check only.
std::vector<CheckVerdict> run_check_suite(const CheckOptions& opts);

// Individual checks, exposed for the acceptance runner.
CheckVerdict check_golden_lambda();
CheckVerdict check_moduli_tables();
CheckVerdict check_parabolic_synthesis();
CheckVerdict check_conjugation_identity();
CheckVerdict check_section5_matrices();
CheckVerdict check_group_relations();
CheckVerdict check_normal_form_uniqueness(int max_len);
CheckVerdict check_reduction_soundness(const CheckOptions& opts);
CheckVerdict check_word_roundtrip(const CheckOptions& opts);
CheckVerdict check_membership_suite(const CheckOptions& opts);
CheckVerdict check_cusp_orbit_gap(int max_len);
CheckVerdict check_area_identities(const CheckOptions& opts);
CheckVerdict check_segment_lemma();
CheckVerdict check_accumulation_ratio();
CheckVerdict check_rotation_symmetry_suite();
CheckVerdict check_field_axioms(const CheckOptions& opts);
CheckVerdict check_serialization_roundtrip(const CheckOptions& opts);
CheckVerdict check_parallel_consistency(const CheckOptions& opts);

}  // namespace ladder
