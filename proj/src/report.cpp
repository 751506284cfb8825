#include "ladder/report.hpp"

namespace ladder {

namespace {

Json bigint_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw parse_error("expected integer or decimal string");
}

Json rational_to_json(const Rational& q) {
  return Json::array({bigint_to_json(BigInt(q.get_num())),
                      bigint_to_json(BigInt(q.get_den()))});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw parse_error("expected [num, den]");
  return make_rational(bigint_from_json(j[0]), bigint_from_json(j[1]));
}

}  // namespace

Json quadext_to_json(const QuadExt& x) {
  return Json{{"a", rational_to_json(x.a())},
              {"b", rational_to_json(x.b())},
              {"D", x.radicand()}};
}

QuadExt quadext_from_json(const Json& j) {
  return QuadExt(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                 j.at("D").get<std::int64_t>());
}

Json matrix_to_json(const Mat2& m) {
  std::int64_t d = std::max({m.a.radicand(), m.b.radicand(), m.c.radicand(),
                             m.d.radicand()});
  return Json{{"a", quadext_to_json(m.a)},
              {"b", quadext_to_json(m.b)},
              {"c", quadext_to_json(m.c)},
              {"d", quadext_to_json(m.d)},
              {"D", d}};
}

Mat2 matrix_from_json(const Json& j) {
  return Mat2{quadext_from_json(j.at("a")), quadext_from_json(j.at("b")),
              quadext_from_json(j.at("c")), quadext_from_json(j.at("d"))};
}

Report build_report(const LadderParams& params, int depth, int digits,
                    int table_rows) {
  Report r;
  r.k = params.k;
  r.l = params.l;
  r.radicand = params.radicand;
  r.depth = depth;
  r.digits = digits;
  r.lambda = params.lambda;
  r.lambda_approx = params.lambda.to_decimal(digits);
  r.area_value = area(params);
  r.area_approx = r.area_value.to_decimal(digits);
  r.gen_t = translation_T(params).mat();
  r.gen_r = rotation_R().mat();
  FundamentalDomain dom(params);
  r.strip_left = dom.strip_left();
  r.strip_right = dom.strip_right();

  LadderSurface surf(params, depth);
  for (Direction dir : {Direction::horizontal, Direction::vertical,
                        Direction::antidiagonal}) {
    auto dec = decompose(surf, dir);
    DirectionReport dr;
    dr.direction = direction_name(dir);
    int rows = std::min<int>(table_rows,
                             static_cast<int>(dec.cylinders.size()));
    for (int i = 0; i < rows; ++i) {
      const Cylinder& c = dec.cylinders[static_cast<size_t>(i)];
      dr.cylinders.push_back(CylinderRow{c.index, c.height, c.circumference,
                                         c.modulus(),
                                         c.modulus().to_decimal(digits)});
    }
    if (dec.common) {
      dr.common_inverse_modulus = dec.common->common_inverse_modulus;
      dr.multipliers = dec.common->multipliers;
      MoebiusElement par = synthesize_parabolic(dec);
      dr.parabolic = par.mat();
      dr.twists =
          twist_counts(dec, dec.common->common_inverse_modulus.inverse());
    }
    r.directions.push_back(std::move(dr));
  }
  return r;
}

Json report_to_json(const Report& r) {
  Json j;
  j["schema"] = "veech-ladder/1";
  j["params"] = Json{{"k", r.k},
                     {"l", r.l},
                     {"D", r.radicand},
                     {"depth", r.depth},
                     {"digits", r.digits}};
  j["lambda"] = quadext_to_json(r.lambda);
  j["lambda_approx"] = r.lambda_approx;
  j["area"] = quadext_to_json(r.area_value);
  j["area_approx"] = r.area_approx;
  j["generators"] =
      Json{{"T", matrix_to_json(r.gen_t)}, {"R", matrix_to_json(r.gen_r)}};
  j["domain"] = Json{{"strip_left", quadext_to_json(r.strip_left)},
                     {"strip_right", quadext_to_json(r.strip_right)},
                     {"disk_centers", Json::array({0, -1})}};
  Json dirs = Json::array();
  for (const auto& d : r.directions) {
    Json jd;
    jd["direction"] = d.direction;
    Json rows = Json::array();
    for (const auto& c : d.cylinders)
      rows.push_back(Json{{"index", c.index},
                          {"height", quadext_to_json(c.height)},
                          {"height_exact", c.height.text()},
                          {"circumference", quadext_to_json(c.circumference)},
                          {"circumference_exact", c.circumference.text()},
                          {"modulus", quadext_to_json(c.modulus)},
                          {"modulus_exact", c.modulus.text()},
                          {"modulus_approx", c.modulus_approx}});
    jd["cylinders"] = rows;
    if (d.common_inverse_modulus) {
      jd["m"] = quadext_to_json(*d.common_inverse_modulus);
      Json mult = Json::array();
      for (const auto& n : d.multipliers) mult.push_back(bigint_to_json(n));
      jd["multipliers"] = mult;
      jd["parabolic"] = matrix_to_json(*d.parabolic);
      Json tw = Json::array();
      for (const auto& n : d.twists) tw.push_back(bigint_to_json(n));
      jd["twists"] = tw;
    } else {
      jd["m"] = nullptr;
    }
    dirs.push_back(jd);
  }
  j["cylinder_decompositions"] = dirs;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        Json{{"name", c.name}, {"verdict", c.verdict}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

Report report_from_json(const Json& j) {
  if (j.at("schema").get<std::string>() != "veech-ladder/1")
    throw parse_error("unknown schema");
  Report r;
  const Json& p = j.at("params");
  r.k = p.at("k").get<long>();
  r.l = p.at("l").get<long>();
  r.radicand = p.at("D").get<std::int64_t>();
  r.depth = p.at("depth").get<int>();
  r.digits = p.at("digits").get<int>();
  r.lambda = quadext_from_json(j.at("lambda"));
  r.lambda_approx = j.at("lambda_approx").get<std::string>();
  r.area_value = quadext_from_json(j.at("area"));
  r.area_approx = j.at("area_approx").get<std::string>();
  r.gen_t = matrix_from_json(j.at("generators").at("T"));
  r.gen_r = matrix_from_json(j.at("generators").at("R"));
  r.strip_left = quadext_from_json(j.at("domain").at("strip_left"));
  r.strip_right = quadext_from_json(j.at("domain").at("strip_right"));
  for (const Json& jd : j.at("cylinder_decompositions")) {
    DirectionReport d;
    d.direction = jd.at("direction").get<std::string>();
    for (const Json& row : jd.at("cylinders"))
      d.cylinders.push_back(
          CylinderRow{row.at("index").get<int>(),
                      quadext_from_json(row.at("height")),
                      quadext_from_json(row.at("circumference")),
                      quadext_from_json(row.at("modulus")),
                      row.at("modulus_approx").get<std::string>()});
    if (jd.contains("m") && !jd.at("m").is_null()) {
      d.common_inverse_modulus = quadext_from_json(jd.at("m"));
      for (const Json& n : jd.at("multipliers"))
        d.multipliers.push_back(bigint_from_json(n));
      d.parabolic = matrix_from_json(jd.at("parabolic"));
      for (const Json& n : jd.at("twists"))
        d.twists.push_back(bigint_from_json(n));
    }
    r.directions.push_back(std::move(d));
  }
  for (const Json& c : j.at("checks"))
    r.checks.push_back(CheckVerdict{c.at("name").get<std::string>(),
                                    c.at("verdict").get<std::string>(),
                                    c.at("detail").get<std::string>()});
  return r;
}

}  // namespace ladder
