#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ladder/orbit.hpp"

using namespace ladder;

namespace {

std::mt19937_64 rng(20240607);

QuadExt random_field_elt(std::int64_t d, int span = 30) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 9);
  return QuadExt(make_rational(num(rng), den(rng)),
                 make_rational(num(rng), den(rng)), d);
}

HalfPlanePoint random_point(std::int64_t d) {
  QuadExt re = random_field_elt(d);
  QuadExt im = random_field_elt(d);
  while (im.sign() <= 0) im = random_field_elt(d);
  return {re, im};
}

GroupWord random_word(std::int64_t max_gen_len) {
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

}  // namespace

TEST_CASE("word normal form") {
  GroupWord w;
  w.append_t(3);
  w.append_r(1);
  w.append_t(-1);
  w.append_r(2);
  CHECK(w.text() == "T^3 R T^-1 R^2");
  CHECK(GroupWord::parse("T^3 R T^-1 R^2") == w);
  CHECK(w.generator_length() == 6);
  CHECK(w.inverse().text() == "R T R^2 T^-3");
  CHECK(GroupWord::concat(w, w.inverse()).empty());
  CHECK(GroupWord::parse("1").empty());

  // merging across the same factor
  GroupWord m;
  m.append_r(2);
  m.append_r(2);
  CHECK(m.text() == "R");  // R^4 = R
  m.append_r(2);
  CHECK(m.empty());
  m.append_t(2);
  m.append_t(-2);
  CHECK(m.empty());
  CHECK_THROWS_AS(GroupWord::parse("T^x"), parse_error);
  CHECK_THROWS_AS(GroupWord::parse("Q"), parse_error);
}

TEST_CASE("word evaluation matches generator matrices") {
  auto p = solve_lambda(2, 1);
  MoebiusElement t = translation_T(p), r = rotation_R();
  CHECK(evaluate(GroupWord::parse("T"), p) == t);
  CHECK(evaluate(GroupWord::parse("R^2"), p) == r * r);
  CHECK(evaluate(GroupWord::parse("T^-2 R T"), p) ==
        t.inverse() * t.inverse() * r * t);
  CHECK(evaluate(GroupWord(), p).is_identity());
  for (int i = 0; i < 100; ++i) {
    GroupWord w = random_word(14);
    CHECK(evaluate(w.inverse(), p) == evaluate(w, p).inverse());
  }
}

TEST_CASE("group relations") {
  auto p = solve_lambda(2, 1);
  MoebiusElement r = rotation_R(), t = translation_T(p);
  CHECK((r * r * r).is_identity());
  MoebiusElement power = t;
  for (int n = 1; n <= 50; ++n) {
    CHECK(!power.is_identity());
    power = power * t;
  }
}

TEST_CASE("normal forms of bounded length name distinct elements") {
  auto p = solve_lambda(2, 1);
  std::set<MoebiusElement> seen;
  std::uint64_t visited = 0;
  for_each_normal_word(p, 10,
                       [&](const GroupWord&, const MoebiusElement& m) {
                         ++visited;
                         seen.insert(m);
                       });
  CHECK(visited == normal_form_count(10));
  CHECK(seen.size() == visited);  // free product: no collisions
}

TEST_CASE("enumeration bookkeeping") {
  CHECK(normal_form_count(0) == 1);
  CHECK(normal_form_count(1) == 5);       // 1, T, T^-1, R, R^2
  CHECK(normal_form_count(2) == 15);
  auto p = solve_lambda(2, 1);
  auto ball = collect_ball(p, 6, true);
  auto ball_serial = collect_ball(p, 6, false);
  CHECK(ball.size() == normal_form_count(6));
  REQUIRE(ball.size() == ball_serial.size());
  for (size_t i = 0; i < ball.size(); ++i) {
    CHECK(ball[i].word == ball_serial[i].word);
    CHECK(ball[i].element == ball_serial[i].element);
    CHECK(evaluate(ball[i].word, p) == ball[i].element);
  }
}

TEST_CASE("fundamental domain membership") {
  auto p = solve_lambda(2, 1);
  FundamentalDomain dom(p);
  CHECK(dom.strip_left() == QuadExt(-2));
  // k(1+lambda) - 2 = sqrt5 - 1 for the golden parameter
  CHECK(dom.strip_right() == QuadExt(Rational(-1), Rational(1), 5));
  CHECK(dom.theorem_scope());

  CHECK(dom.in_interior({QuadExt(0), QuadExt(2)}));
  CHECK(dom.in_closure({QuadExt(0), QuadExt(2)}));
  CHECK(!dom.in_closure({QuadExt(0), QuadExt(make_rational(1, 2))}));
  CHECK(!dom.in_closure({QuadExt(-1), QuadExt(make_rational(1, 2))}));
  CHECK(!dom.in_closure({QuadExt(-3), QuadExt(2)}));
  // boundary: on the unit circle, inside the strip
  HalfPlanePoint on_circle{QuadExt(make_rational(3, 5)),
                           QuadExt(make_rational(4, 5))};
  CHECK(dom.in_closure(on_circle));
  CHECK(!dom.in_interior(on_circle));
  CHECK(!FundamentalDomain(solve_lambda(5, 2)).theorem_scope());
}

TEST_CASE("reduction fixes points already in the domain") {
  auto p = solve_lambda(2, 1);
  FundamentalDomain dom(p);
  HalfPlanePoint z{QuadExt(0), QuadExt(2)};
  auto res = reduce(dom, z);
  CHECK(res.word.empty());
  CHECK(res.point == z);

  // T z leaves the strip; reduction recovers T^-1
  HalfPlanePoint tz = apply(translation_T(p), z);
  auto res2 = reduce(dom, tz);
  CHECK(res2.word.text() == "T^-1");
  CHECK(res2.point == z);

  // (R T^2 R^2 T^-1) 2i reduces back to 2i with the inverse word
  GroupWord w = GroupWord::parse("R T^2 R^2 T^-1");
  auto res3 = reduce(dom, apply(evaluate(w, p), z));
  CHECK(res3.point == z);
  CHECK((evaluate(res3.word, p) * evaluate(w, p)).is_identity());
  CHECK(GroupWord::concat(res3.word, w).empty());
}

TEST_CASE("reduction soundness on random points") {
  auto p = solve_lambda(2, 1);
  FundamentalDomain dom(p);
  std::vector<HalfPlanePoint> pts;
  for (int i = 0; i < 1000; ++i) pts.push_back(random_point(p.radicand));
  auto serial = reduce_batch(dom, pts, false);
  auto parallel = reduce_batch(dom, pts, true);
  REQUIRE(serial.size() == pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& res = serial[i];
    CHECK(dom.in_closure(res.point));
    CHECK(apply(evaluate(res.word, p), pts[i]) == res.point);
    CHECK(parallel[i].word == res.word);
    CHECK(parallel[i].point == res.point);
  }
}

TEST_CASE("random words round-trip through reduction") {
  auto p = solve_lambda(2, 1);
  FundamentalDomain dom(p);
  HalfPlanePoint z0{QuadExt(make_rational(1, 7)), QuadExt(2)};
  for (int i = 0; i < 500; ++i) {
    GroupWord w = random_word(20);
    MoebiusElement m = evaluate(w, p);
    auto res = reduce(dom, apply(m, z0));
    CHECK(res.point == z0);
    MoebiusElement g = evaluate(res.word, p);
    CHECK((g * m).is_identity());
  }
}

TEST_CASE("membership") {
  auto p = solve_lambda(2, 1);
  FundamentalDomain dom(p);

  auto rt = membership(dom, translation_T(p));
  CHECK(rt.verdict == MemberVerdict::yes);
  CHECK(rt.word.text() == "T");

  auto rr = membership(dom, rotation_R());
  CHECK(rr.verdict == MemberVerdict::yes);
  CHECK(rr.word.text() == "R");

  auto rr2 = membership(dom, rotation_R().pow(2));
  CHECK(rr2.verdict == MemberVerdict::yes);
  CHECK(rr2.word.text() == "R^2");

  auto rid = membership(dom, MoebiusElement());
  CHECK(rid.verdict == MemberVerdict::yes);
  CHECK(rid.word.empty());

  // unit shear is not a multiple of k(1+lambda): not in G
  MoebiusElement unit(QuadExt(1), QuadExt(1), QuadExt(0), QuadExt(1));
  CHECK(membership(dom, unit).verdict == MemberVerdict::no);

  auto [m1, m2] = section5_matrices(p);
  CHECK(membership(dom, m1).verdict == MemberVerdict::no);
  CHECK(membership(dom, m2).verdict == MemberVerdict::no);

  // recovered words equal the input normal forms
  for (int i = 0; i < 100; ++i) {
    GroupWord w = random_word(12);
    auto res = membership(dom, evaluate(w, p));
    CHECK(res.verdict == MemberVerdict::yes);
    CHECK(res.word == w);
  }
}

TEST_CASE("section-5 witness matrices") {
  for (auto [k, l] : {std::pair{2L, 1L}, {3L, 1L}, {5L, 2L}}) {
    auto p = solve_lambda(k, l);
    auto [a, b] = section5_matrices(p);
    CHECK(a.trace() == QuadExt(2));
    CHECK(b.trace() == QuadExt(2));
    CHECK(fixed_points(a).boundary[0].value == p.lambda.inverse());
    CHECK(fixed_points(b).boundary[0].value == p.lambda);
    CHECK(eigen_slope(a).value * eigen_slope(b).value == QuadExt(1));
  }
  // golden case: fixed points are (1+sqrt5)/2 and (-1+sqrt5)/2
  auto g = solve_lambda(2, 1);
  auto [a, b] = section5_matrices(g);
  CHECK(fixed_points(a).boundary[0].value ==
        QuadExt(make_rational(1, 2), make_rational(1, 2), 5));
  CHECK(fixed_points(b).boundary[0].value ==
        QuadExt(make_rational(-1, 2), make_rational(1, 2), 5));
}

TEST_CASE("forbidden direction screening") {
  auto p = solve_lambda(2, 1);
  // (0, 1; -1, 2) is parabolic with eigenvector (1,1): slope 1 inside the
  // band, and it is not a member
  MoebiusElement slope_one(QuadExt(0), QuadExt(1), QuadExt(-1), QuadExt(2));
  CHECK(classify(slope_one).type == ElemType::parabolic);
  CHECK(eigen_slope(slope_one).value == QuadExt(1));
  CHECK(forbidden_direction_check(p, slope_one));

  // T: slope 0 outside the band
  CHECK(!forbidden_direction_check(p, translation_T(p)));
  // slope exactly lambda: the open band excludes it
  auto [m1, m2] = section5_matrices(p);
  CHECK(!forbidden_direction_check(p, m1));
  CHECK(!forbidden_direction_check(p, m2));
  CHECK_THROWS_AS(forbidden_direction_check(p, rotation_R()), not_parabolic);
}

TEST_CASE("cusp orbit gap") {
  for (auto [k, l] : {std::pair{2L, 1L}, {3L, 1L}, {5L, 1L}}) {
    auto p = solve_lambda(k, l);
    FundamentalDomain dom(p);
    CHECK(cusp_orbit_gap(dom, 8));
  }
  auto p = solve_lambda(2, 1);
  CHECK(cusp_gap_holds(p, 6, false) == cusp_gap_holds(p, 6, true));
  FundamentalDomain dom(p);
  CHECK_THROWS_AS(cusp_orbit_gap(dom, 17), invalid_parameters);

  // base cusps sit outside the band
  QuadExt lam = p.lambda, inv = p.lambda.inverse();
  for (QuadExt c : {QuadExt(0), QuadExt(-1)})
    CHECK(!(lam < c && c < inv));
}

TEST_CASE("reduction progress assertions hold under stress") {
  auto p = solve_lambda(3, 1);
  FundamentalDomain dom(p);
  for (int i = 0; i < 50; ++i) {
    GroupWord w = random_word(24);
    HalfPlanePoint z{QuadExt(make_rational(i - 25, 9)),
                     QuadExt(make_rational(1, i + 2))};
    auto res = reduce(dom, apply(evaluate(w, p), z));
    CHECK(dom.in_closure(res.point));
    CHECK(res.iterations <= 10000);
  }
}
