// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Exact identities are checked in the field; the only tolerances are the
// two stated 1e-12 float comparisons.

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "ladder/checks.hpp"
#include "ladder/hexchart.hpp"
#include "ladder/orbit.hpp"
#include "ladder/surface.hpp"

using namespace ladder;

namespace {

int failures = 0;

void report(int idx, const char* title, bool ok, const std::string& detail) {
  std::printf("%s criterion-%02d %s%s%s\n", ok ? "PASS" : "FAIL", idx, title,
              detail.empty() ? "" : " - ", detail.c_str());
  if (!ok) ++failures;
}

bool verdict_ok(const CheckVerdict& v) { return v.verdict == "pass"; }

void criterion_1_golden_parameter() {
  auto p = solve_lambda(2, 1);
  bool quad = (p.lambda * p.lambda + p.lambda - QuadExt(1)).is_zero();
  bool dec = p.lambda.to_decimal(12) == "0.618033988749";
  bool flt = std::abs(p.lambda.to_double() - 0.618033988749) <= 1e-12;
  report(1, "golden parameter", quad && dec && flt,
         "lambda = " + p.lambda.text() + " ~ " + p.lambda.to_decimal(12));
}

void criterion_2_moduli() {
  bool ok = true;
  for (auto [k, l] : {std::pair{2L, 1L}, {3L, 1L}, {5L, 1L}, {5L, 2L}}) {
    auto p = solve_lambda(k, l);
    LadderSurface surf(p, 52);
    auto dec = decompose(surf, Direction::horizontal);
    QuadExt one(1);
    ok = ok && dec.cylinders.at(0).modulus() == one + p.lambda;
    QuadExt upper = p.lambda.inverse() + one + p.lambda;
    ok = ok && upper == QuadExt(make_rational(k, l)) * (one + p.lambda);
    for (int n = 1; n <= 50 && ok; ++n)
      ok = dec.cylinders.at(static_cast<size_t>(n)).modulus() == upper;
    if (!ok) break;
  }
  report(2, "moduli", ok,
         "cylinder 0: 1+lambda; 1..50: (k/l)(1+lambda) for (2,1),(3,1),"
         "(5,1),(5,2)");
}

void criterion_3_veech_synthesis() {
  bool ok = true;
  for (auto [k, l] : {std::pair{2L, 1L}, {3L, 1L}, {5L, 1L}, {5L, 2L}}) {
    auto p = solve_lambda(k, l);
    LadderSurface surf(p, 52);
    auto dec = decompose(surf, Direction::horizontal);
    ok = ok && synthesize_parabolic(dec) == translation_T(p);
    auto counts = twist_counts(dec, p.shear());
    ok = ok && counts.at(0) == k;
    for (size_t i = 1; i <= 50 && ok; ++i) ok = counts.at(i) == l;
    if (!ok) break;
  }
  report(3, "Veech synthesis", ok,
         "(1, k(1+lambda); 0, 1) with twists (k, l, ..., l) over 50 "
         "cylinders");
}

void criterion_4_conjugation_identity() {
  report(4, "conjugation identity", hexagon_conjugation_identity(),
         "exact Q(sqrt3) product equals R");
}

void criterion_5_section5_matrices() {
  auto p = solve_lambda(2, 1);
  bool ok = true;
  try {
    auto [a, b] = section5_matrices(p);  // asserts internally
    ok = a.mat().det() == QuadExt(1) && b.mat().det() == QuadExt(1) &&
         a.trace() == QuadExt(2) && b.trace() == QuadExt(2) &&
         fixed_points(a).boundary.at(0).value == p.lambda.inverse() &&
         fixed_points(b).boundary.at(0).value == p.lambda &&
         eigen_slope(a).value == p.lambda &&
         eigen_slope(b).value == p.lambda.inverse();
  } catch (const std::exception&) {
    ok = false;
  }
  report(5, "band witness matrices", ok,
         "det 1, trace 2, fixed points 1/lambda & lambda, slopes lambda & "
         "1/lambda");
}

void criterion_6_group_structure() {
  bool ok = verdict_ok(check_group_relations()) &&
            verdict_ok(check_normal_form_uniqueness(8));
  report(6, "group structure", ok,
         "R^3 = id; T^n != id (n <= 50); normal forms of length <= 8 "
         "pairwise distinct");
}

void criterion_7_reduction() {
  CheckOptions opts;
  bool ok = verdict_ok(check_reduction_soundness(opts)) &&
            verdict_ok(check_word_roundtrip(opts));
  report(7, "reduction", ok,
         "1000 seeded points reduce soundly; 500 random words round-trip");
}

void criterion_8_membership() {
  CheckOptions opts;
  report(8, "membership", verdict_ok(check_membership_suite(opts)),
         "T, R, 100 random words admitted with matching normal form; "
         "(1,1;0,1) and band witnesses rejected");
}

void criterion_9_limit_set_gap() {
  report(9, "limit-set gap", verdict_ok(check_cusp_orbit_gap(8)),
         "cusp orbits avoid (lambda, 1/lambda) at word length 8 for "
         "(2,1),(3,1),(5,1)");
}

void criterion_10_area() {
  auto p = solve_lambda(2, 1);
  QuadExt closed = area(p);
  bool flt = std::abs(area_series(p, 200) - closed.to_double()) <= 1e-12;
  bool sym = true;
  for (int terms : {1, 3, 17, 50})
    sym = sym && area_series_exact(p, terms) == closed;
  LadderSurface surf(p, 52);
  auto dec = decompose(surf, Direction::horizontal);
  bool cyl = cylinder_area_total(dec, p) == closed;
  report(10, "area", flt && sym && cyl,
         "closed form == series (1e-12 float, exact symbolic) == cylinder "
         "total with exact tail");
}

void criterion_11_lemma_geometry() {
  auto p = solve_lambda(2, 1);
  LadderSurface surf(p, 20);
  bool contained = true;
  for (const auto& v : singular_segments(surf, Rational(1), 16))
    contained = contained && v.contained;
  bool ratio = true;
  QuadExt lam2 = p.lambda * p.lambda;
  for (int n = 0; n < 15 && ratio; ++n)
    ratio = corner_distance_squared_to_accumulation(surf, n + 1) ==
            lam2 * corner_distance_squared_to_accumulation(surf, n);
  report(11, "lemma geometry", contained && ratio,
         "slope-1 unit segments from corners 0..15 contained; distances to "
         "S contract by exactly lambda");
}

void criterion_12_rotation_symmetry() {
  auto p = solve_lambda(2, 1);
  HexagonChart chart(p, 6);
  bool ok = check_rotation_symmetry(chart);
  HexagonChart broken(p, 6);
  broken.set_gluing({1, 0}, EdgeRef{2, 5});
  broken.set_gluing({2, 5}, EdgeRef{1, 0});
  broken.set_gluing({1, 2}, EdgeRef{2, 3});
  broken.set_gluing({2, 3}, EdgeRef{1, 2});
  ok = ok && !check_rotation_symmetry(broken);
  report(12, "rotation symmetry", ok,
         "depth-6 chart symmetric; swapped gluing detected");
}

}  // namespace

int main() {
  criterion_1_golden_parameter();
  criterion_2_moduli();
  criterion_3_veech_synthesis();
  criterion_4_conjugation_identity();
  criterion_5_section5_matrices();
  criterion_6_group_structure();
  criterion_7_reduction();
  criterion_8_membership();
  criterion_9_limit_set_gap();
  criterion_10_area();
  criterion_11_lemma_geometry();
  criterion_12_rotation_symmetry();
  if (failures == 0)
    std::printf("acceptance: all 12 criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
