#include "ladder/checks.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "ladder/hexchart.hpp"
#include "ladder/orbit.hpp"
#include "ladder/surface.hpp"

namespace ladder {

namespace {

CheckVerdict pass(const std::string& name, const std::string& detail) {
  return {name, "pass", detail};
}

CheckVerdict fail(const std::string& name, const std::string& detail) {
  return {name, "fail", detail};
}

CheckVerdict guarded(const std::string& name,
                     const std::function<CheckVerdict()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return fail(name, std::string("exception: ") + e.what());
  }
}

QuadExt random_field_elt(std::mt19937_64& rng, std::int64_t d) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
  return QuadExt(make_rational(num(rng), den(rng)),
                 make_rational(num(rng), den(rng)), d);
}

GroupWord random_word(std::mt19937_64& rng, std::int64_t max_gen_len) {
  GroupWord w;
  std::uniform_int_distribution<int> texp(1, 4), rexp(1, 2), coin(0, 1);
  std::int64_t len = 0;
  bool r_turn = coin(rng) == 1;
  while (true) {
    if (r_turn) {
      if (len + 1 > max_gen_len) break;
      w.append_r(rexp(rng));
      len += 1;
    } else {
      std::int64_t e = texp(rng);
      if (len + e > max_gen_len) break;
      w.append_t(coin(rng) ? e : -e);
      len += e;
    }
    r_turn = !r_turn;
  }
  return w;
}

const std::vector<std::pair<long, long>> kModuliParams = {
    {2, 1}, {3, 1}, {5, 1}, {5, 2}};

}  // namespace

CheckVerdict check_golden_lambda() {
  return guarded("golden-lambda", [] {
    auto p = solve_lambda(2, 1);
    if (!(p.lambda * p.lambda + p.lambda - QuadExt(1)).is_zero())
      return fail("golden-lambda", "lambda^2 + lambda - 1 != 0");
    std::string dec = p.lambda.to_decimal(12);
    if (dec != "0.618033988749")
      return fail("golden-lambda", "decimal mismatch: " + dec);
    if (std::abs(p.lambda.to_double() - 0.618033988749) > 1e-12)
      return fail("golden-lambda", "float drift beyond 1e-12");
    return pass("golden-lambda", "lambda = " + p.lambda.text() + " ~ " + dec);
  });
}

CheckVerdict check_moduli_tables() {
  return guarded("moduli-table", [] {
    for (auto [k, l] : kModuliParams) {
      auto p = solve_lambda(k, l);
      LadderSurface surf(p, 52);
      auto dec = decompose(surf, Direction::horizontal);
      QuadExt one(1);
      if (!(dec.cylinders.at(0).modulus() == one + p.lambda))
        return fail("moduli-table", "bottom modulus != 1+lambda");
      QuadExt upper = p.lambda.inverse() + one + p.lambda;
      QuadExt scaled = QuadExt(make_rational(k, l)) * (one + p.lambda);
      if (!(upper == scaled))
        return fail("moduli-table", "modulus identity fails");
      for (int n = 1; n <= 50; ++n)
        if (!(dec.cylinders.at(static_cast<size_t>(n)).modulus() == upper))
          return fail("moduli-table",
                      "cylinder " + std::to_string(n) + " modulus off for k=" +
                          std::to_string(k) + " l=" + std::to_string(l));
    }
    return pass("moduli-table",
                "bottom 1+lambda, others (k/l)(1+lambda), 50 cylinders, "
                "4 parameter pairs");
  });
}

CheckVerdict check_parabolic_synthesis() {
  return guarded("parabolic-synthesis", [] {
    for (auto [k, l] : kModuliParams) {
      auto p = solve_lambda(k, l);
      LadderSurface surf(p, 52);
      auto dec = decompose(surf, Direction::horizontal);
      MoebiusElement t = synthesize_parabolic(dec);
      if (!(t == translation_T(p)))
        return fail("parabolic-synthesis", "parabolic != (1, k(1+l); 0, 1)");
      auto counts = twist_counts(dec, p.shear());
      if (counts.at(0) != k)
        return fail("parabolic-synthesis", "bottom twist != k");
      for (size_t i = 1; i <= 50; ++i)
        if (counts.at(i) != l)
          return fail("parabolic-synthesis", "upper twist != l");
    }
    return pass("parabolic-synthesis",
                "T = (1, k(1+lambda); 0, 1), twists (k, l, ..., l)");
  });
}

CheckVerdict check_conjugation_identity() {
  return guarded("conjugation-identity", [] {
    if (!hexagon_conjugation_identity())
      return fail("conjugation-identity", "identity does not hold");
    auto parts = hexagon_conjugation_parts();
    Mat2 bad = parts.rotation;
    bad.b += QuadExt(make_rational(1, 1000));
    if (parts.shear_inverse * bad * parts.shear == parts.target)
      return fail("conjugation-identity", "mutation not detected");
    return pass("conjugation-identity",
                "shear^-1 * rot(2pi/3) * shear == R in Q(sqrt3)");
  });
}

CheckVerdict check_section5_matrices() {
  return guarded("section5-matrices", [] {
    for (auto [k, l] : kModuliParams) {
      auto p = solve_lambda(k, l);
      auto [a, b] = section5_matrices(p);  // asserts det/trace/fix/slope
      if (!(a.mat().det() == QuadExt(1)) || !(b.mat().det() == QuadExt(1)))
        return fail("section5-matrices", "det != 1");
      if (!(a.trace() == QuadExt(2)) || !(b.trace() == QuadExt(2)))
        return fail("section5-matrices", "trace != 2");
      if (!(eigen_slope(a).value * eigen_slope(b).value == QuadExt(1)))
        return fail("section5-matrices", "slopes are not reciprocal");
    }
    return pass("section5-matrices",
                "det 1, trace 2, fixed points 1/lambda and lambda, slopes "
                "lambda and 1/lambda");
  });
}

CheckVerdict check_group_relations() {
  return guarded("group-relations", [] {
    auto p = solve_lambda(2, 1);
    MoebiusElement r = rotation_R(), t = translation_T(p);
    if (!(r * r * r).is_identity())
      return fail("group-relations", "R^3 != id");
    MoebiusElement power = t;
    for (int n = 1; n <= 50; ++n) {
      if (power.is_identity())
        return fail("group-relations", "T^" + std::to_string(n) + " == id");
      power = power * t;
    }
    return pass("group-relations", "R^3 == id, T^n != id for n = 1..50");
  });
}

CheckVerdict check_normal_form_uniqueness(int max_len) {
  return guarded("normal-form-uniqueness", [max_len] {
    auto p = solve_lambda(2, 1);
    std::set<MoebiusElement> seen;
    std::uint64_t visited = 0;
    for_each_normal_word(p, max_len,
                         [&](const GroupWord&, const MoebiusElement& m) {
                           ++visited;
                           seen.insert(m);
                         });
    if (visited != normal_form_count(max_len))
      return fail("normal-form-uniqueness", "enumeration count mismatch");
    if (seen.size() != visited)
      return fail("normal-form-uniqueness",
                  "distinct words evaluated to equal elements");
    std::ostringstream os;
    os << visited << " normal forms of length <= " << max_len
       << ", all distinct in PSL";
    return pass("normal-form-uniqueness", os.str());
  });
}

CheckVerdict check_reduction_soundness(const CheckOptions& opts) {
  return guarded("reduction-soundness", [&opts] {
    auto p = solve_lambda(2, 1);
    FundamentalDomain dom(p);
    std::mt19937_64 rng(opts.seed);
    std::vector<HalfPlanePoint> pts;
    for (int i = 0; i < opts.reduction_points; ++i) {
      QuadExt re = random_field_elt(rng, p.radicand);
      QuadExt im = random_field_elt(rng, p.radicand);
      while (im.sign() <= 0) im = random_field_elt(rng, p.radicand);
      pts.push_back({re, im});
    }
    auto results = reduce_batch(dom, pts, true);
    for (size_t i = 0; i < pts.size(); ++i) {
      if (!dom.in_closure(results[i].point))
        return fail("reduction-soundness", "endpoint not in closure");
      if (!(apply(evaluate(results[i].word, p), pts[i]) == results[i].point))
        return fail("reduction-soundness", "soundness equation violated");
    }
    return pass("reduction-soundness",
                std::to_string(opts.reduction_points) +
                    " random points reduced with exact soundness");
  });
}

CheckVerdict check_word_roundtrip(const CheckOptions& opts) {
  return guarded("word-roundtrip", [&opts] {
    auto p = solve_lambda(2, 1);
    FundamentalDomain dom(p);
    std::mt19937_64 rng(opts.seed + 1);
    HalfPlanePoint z0{QuadExt(make_rational(1, 7)), QuadExt(2)};
    for (int i = 0; i < opts.roundtrip_words; ++i) {
      GroupWord w = random_word(rng, 20);
      MoebiusElement m = evaluate(w, p);
      auto res = reduce(dom, apply(m, z0));
      if (!(res.point == z0))
        return fail("word-roundtrip", "orbit point did not return to base");
      if (!(evaluate(res.word, p) * m).is_identity())
        return fail("word-roundtrip", "reduction word is not the inverse");
    }
    return pass("word-roundtrip",
                std::to_string(opts.roundtrip_words) +
                    " random words of length <= 20 round-trip to identity");
  });
}

CheckVerdict check_membership_suite(const CheckOptions& opts) {
  return guarded("membership-suite", [&opts] {
    auto p = solve_lambda(2, 1);
    FundamentalDomain dom(p);
    auto rt = membership(dom, translation_T(p));
    if (rt.verdict != MemberVerdict::yes || rt.word.text() != "T")
      return fail("membership-suite", "T not recognized");
    auto rr = membership(dom, rotation_R());
    if (rr.verdict != MemberVerdict::yes || rr.word.text() != "R")
      return fail("membership-suite", "R not recognized");
    MoebiusElement unit(QuadExt(1), QuadExt(1), QuadExt(0), QuadExt(1));
    if (membership(dom, unit).verdict != MemberVerdict::no)
      return fail("membership-suite", "(1,1;0,1) wrongly admitted");
    auto [m1, m2] = section5_matrices(p);
    if (membership(dom, m1).verdict != MemberVerdict::no ||
        membership(dom, m2).verdict != MemberVerdict::no)
      return fail("membership-suite", "band witness wrongly admitted");
    std::mt19937_64 rng(opts.seed + 2);
    for (int i = 0; i < opts.membership_words; ++i) {
      GroupWord w = random_word(rng, 12);
      auto res = membership(dom, evaluate(w, p));
      if (res.verdict != MemberVerdict::yes || !(res.word == w))
        return fail("membership-suite",
                    "random word not recovered: " + w.text());
    }
    return pass("membership-suite",
                std::to_string(opts.membership_words) +
                    " random members recovered; non-members rejected");
  });
}

CheckVerdict check_cusp_orbit_gap(int max_len) {
  return guarded("cusp-orbit-gap", [max_len] {
    for (long k : {2L, 3L, 5L}) {
      auto p = solve_lambda(k, 1);
      FundamentalDomain dom(p);
      if (!cusp_orbit_gap(dom, max_len))
        return fail("cusp-orbit-gap",
                    "violation for k=" + std::to_string(k));
    }
    return pass("cusp-orbit-gap",
                "orbit of {inf, 0, -1} avoids (lambda, 1/lambda) through "
                "word length " +
                    std::to_string(max_len) + " for k = 2, 3, 5");
  });
}

CheckVerdict check_area_identities(const CheckOptions& opts) {
  return guarded("area-identities", [&opts] {
    auto p = solve_lambda(2, 1);
    QuadExt closed = area(p);
    if (std::abs(area_series(p, 200) - closed.to_double()) > 1e-12)
      return fail("area-identities", "200-term series drifts beyond 1e-12");
    for (int terms : {1, 3, 17, 50})
      if (!(area_series_exact(p, terms) == closed))
        return fail("area-identities", "tail-completed series mismatch");
    LadderSurface surf(p, opts.depth);
    auto dec = decompose(surf, Direction::horizontal);
    if (!(cylinder_area_total(dec, p) == closed))
      return fail("area-identities", "cylinder areas do not sum to the area");
    return pass("area-identities",
                "area = " + closed.text() + ", series and cylinder totals agree");
  });
}

CheckVerdict check_segment_lemma() {
  return guarded("segment-lemma", [] {
    auto p = solve_lambda(2, 1);
    LadderSurface surf(p, 20);
    auto verdicts = singular_segments(surf, Rational(1), 16);
    for (const auto& v : verdicts)
      if (!v.contained)
        return fail("segment-lemma",
                    "corner " + std::to_string(v.index) + " segment escapes");
    return pass("segment-lemma",
                "slope-1 unit segments from corners 0..15 (both arms) stay "
                "inside");
  });
}

CheckVerdict check_accumulation_ratio() {
  return guarded("accumulation-ratio", [] {
    auto p = solve_lambda(2, 1);
    LadderSurface surf(p, 18);
    QuadExt lam2 = p.lambda * p.lambda;
    for (int n = 0; n < 15; ++n) {
      QuadExt d0 = corner_distance_squared_to_accumulation(surf, n);
      QuadExt d1 = corner_distance_squared_to_accumulation(surf, n + 1);
      if (!(d1 == lam2 * d0))
        return fail("accumulation-ratio", "squared ratio != lambda^2");
    }
    return pass("accumulation-ratio",
                "corner distances to S contract by exactly lambda per step");
  });
}

CheckVerdict check_rotation_symmetry_suite() {
  return guarded("rotation-symmetry", [] {
    auto p = solve_lambda(2, 1);
    HexagonChart chart(p, 6);
    if (!check_rotation_symmetry(chart))
      return fail("rotation-symmetry", "depth-6 chart is not symmetric");
    HexagonChart broken(p, 6);
    broken.set_gluing({1, 0}, EdgeRef{2, 5});
    broken.set_gluing({2, 5}, EdgeRef{1, 0});
    broken.set_gluing({1, 2}, EdgeRef{2, 3});
    broken.set_gluing({2, 3}, EdgeRef{1, 2});
    if (check_rotation_symmetry(broken))
      return fail("rotation-symmetry", "swapped gluing not detected");
    return pass("rotation-symmetry",
                "2pi/3 rotation commutes with the gluing; mutations break it");
  });
}

CheckVerdict check_field_axioms(const CheckOptions& opts) {
  return guarded("field-axioms", [&opts] {
    auto p = solve_lambda(opts.k, opts.l);
    std::mt19937_64 rng(opts.seed + 3);
    std::int64_t d = p.radicand == 1 ? 5 : p.radicand;
    for (int i = 0; i < 1000; ++i) {
      QuadExt x = random_field_elt(rng, d);
      QuadExt y = random_field_elt(rng, d);
      QuadExt z = random_field_elt(rng, d);
      if (!((x + y) + z == x + (y + z)) || !((x * y) * z == x * (y * z)))
        return fail("field-axioms", "associativity violated");
      if (!(x * (y + z) == x * y + x * z))
        return fail("field-axioms", "distributivity violated");
      if (!x.is_zero() && !(x * x.inverse() == QuadExt(1)))
        return fail("field-axioms", "inverse violated");
    }
    return pass("field-axioms",
                "1000 random triples satisfy ring and field laws exactly");
  });
}

CheckVerdict check_serialization_roundtrip(const CheckOptions& opts) {
  return guarded("serialization-roundtrip", [&opts] {
    auto p = solve_lambda(opts.k, opts.l);
    Report r = build_report(p, 8, opts.digits);
    r.checks.push_back({"probe", "pass", "detail"});
    Report back = report_from_json(report_to_json(r));
    if (!(back == r))
      return fail("serialization-roundtrip", "report JSON round-trip mismatch");
    std::mt19937_64 rng(opts.seed + 4);
    for (int i = 0; i < 200; ++i) {
      QuadExt x = random_field_elt(rng, 13);
      if (!(QuadExt::parse(x.text()) == x))
        return fail("serialization-roundtrip", "text round-trip mismatch");
      if (!(quadext_from_json(quadext_to_json(x)) == x))
        return fail("serialization-roundtrip", "JSON round-trip mismatch");
    }
    return pass("serialization-roundtrip",
                "report, text and JSON forms round-trip exactly");
  });
}

CheckVerdict check_parallel_consistency(const CheckOptions& opts) {
  return guarded("parallel-consistency", [&opts] {
    auto p = solve_lambda(2, 1);
    auto serial = collect_ball(p, 6, false);
    auto parallel = collect_ball(p, 6, true);
    if (serial.size() != parallel.size())
      return fail("parallel-consistency", "ball sizes differ");
    for (size_t i = 0; i < serial.size(); ++i)
      if (!(serial[i].element == parallel[i].element) ||
          !(serial[i].word == parallel[i].word))
        return fail("parallel-consistency", "ball contents differ");
    if (cusp_gap_holds(p, 6, false) != cusp_gap_holds(p, 6, true))
      return fail("parallel-consistency", "gap verdicts differ");
    FundamentalDomain dom(p);
    std::mt19937_64 rng(opts.seed + 5);
    std::vector<HalfPlanePoint> pts;
    for (int i = 0; i < 100; ++i) {
      QuadExt im = random_field_elt(rng, p.radicand);
      while (im.sign() <= 0) im = random_field_elt(rng, p.radicand);
      pts.push_back({random_field_elt(rng, p.radicand), im});
    }
    auto rs = reduce_batch(dom, pts, false);
    auto rp = reduce_batch(dom, pts, true);
    for (size_t i = 0; i < pts.size(); ++i)
      if (!(rs[i].point == rp[i].point) || !(rs[i].word == rp[i].word))
        return fail("parallel-consistency", "batch reductions differ");
    return pass("parallel-consistency",
                "OpenMP kernels reproduce the serial reference exactly");
  });
}

std::vector<CheckVerdict> run_check_suite(const CheckOptions& opts) {
  std::vector<CheckVerdict> out;
  out.push_back(check_field_axioms(opts));
  out.push_back(check_golden_lambda());
  out.push_back(check_moduli_tables());
  out.push_back(check_parabolic_synthesis());
  out.push_back(check_conjugation_identity());
  out.push_back(check_section5_matrices());
  out.push_back(check_group_relations());
  out.push_back(check_normal_form_uniqueness(opts.max_word_len));
  out.push_back(check_reduction_soundness(opts));
  out.push_back(check_word_roundtrip(opts));
  out.push_back(check_membership_suite(opts));
  out.push_back(check_cusp_orbit_gap(opts.max_word_len));
  out.push_back(check_area_identities(opts));
  out.push_back(check_segment_lemma());
  out.push_back(check_accumulation_ratio());
  out.push_back(check_rotation_symmetry_suite());
  out.push_back(check_serialization_roundtrip(opts));
  out.push_back(check_parallel_consistency(opts));
  return out;
}

}  // namespace ladder
