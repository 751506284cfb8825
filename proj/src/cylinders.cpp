#include "ladder/cylinders.hpp"

namespace ladder {

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::horizontal: return "horizontal";
    case Direction::vertical: return "vertical";
    case Direction::antidiagonal: return "antidiagonal";
  }
  return "?";
}

namespace {

Mat2 direction_frame(Direction dir) {
  switch (dir) {
    case Direction::horizontal:
      return {QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(1)};
    case Direction::vertical:
      return swap_xy();
    case Direction::antidiagonal:
      return rotation_R().mat();
  }
  throw invalid_parameters("bad direction");
}

void validate_against_region(const LadderSurface& surface,
                             const std::vector<Cylinder>& cyls) {
  const LadderParams& p = surface.params();
  // Band n spans heights (c_{n-1}, c_n); its height is lambda^n and the
  // cross-section width through its midpoint is the circumference.
  for (const auto& cyl : cyls) {
    int n = cyl.index;
    QuadExt band = surface.partial_sum(n) - surface.partial_sum(n - 1);
    if (!(band == cyl.height))
      throw std::logic_error("cylinder height disagrees with region bands");
    QuadExt mid =
        (surface.partial_sum(n - 1) + surface.partial_sum(n)) / QuadExt(2);
    if (!(surface.cross_section_width(mid) == cyl.circumference))
      throw std::logic_error("circumference disagrees with cross-section");
  }
  // One-step self-similarity closes the truncated checks: consecutive
  // cylinders (n >= 1) scale exactly by lambda.
  for (size_t i = 2; i < cyls.size(); ++i) {
    if (!(cyls[i].height == p.lambda * cyls[i - 1].height) ||
        !(cyls[i].circumference == p.lambda * cyls[i - 1].circumference))
      throw std::logic_error("self-similarity ratio violated");
  }
}

}  // namespace

CylinderDecomposition decompose(const LadderSurface& surface, Direction dir) {
  const LadderParams& p = surface.params();
  int count = surface.depth();
  CylinderDecomposition dec;
  dec.direction = dir;
  dec.frame = direction_frame(dir);
  dec.cylinders.reserve(static_cast<size_t>(count) + 1);

  QuadExt one(1);
  QuadExt w1 = one + p.lambda + p.lambda * p.lambda;
  dec.cylinders.push_back(Cylinder{0, one, one + p.lambda, dir});
  QuadExt h = p.lambda, w = w1;
  for (int n = 1; n <= count; ++n) {
    dec.cylinders.push_back(Cylinder{n, h, w, dir});
    h *= p.lambda;
    w *= p.lambda;
  }

  // The vertical picture is the diagonal reflection of the horizontal one
  // and the antidiagonal picture its order-3 transport; both carry the same
  // (h, w) data in their adapted frames, so the region validation below
  // covers all three.
  validate_against_region(surface, dec.cylinders);
  dec.common = commensurability(dec.cylinders);
  return dec;
}

std::optional<Commensurability> commensurability(
    const std::vector<Cylinder>& cylinders) {
  if (cylinders.empty())
    throw invalid_parameters("need at least one cylinder");
  // Normalize by one inverse modulus; all ratios must be rational. The
  // largest m is base * gcd(ratios); field order makes it canonical.
  QuadExt base = cylinders.front().inverse_modulus();
  std::vector<Rational> ratios;
  ratios.reserve(cylinders.size());
  for (const auto& cyl : cylinders) {
    QuadExt r = cyl.inverse_modulus() / base;
    if (!r.is_rational()) return std::nullopt;
    ratios.push_back(r.a());
  }
  Rational g = ratios.front();
  for (const Rational& r : ratios) g = gcd_q(g, r);
  Commensurability out;
  out.common_inverse_modulus = base * QuadExt(g);
  out.multipliers.reserve(cylinders.size());
  for (const Rational& r : ratios) {
    Rational mult = r / g;
    if (mult.get_den() != 1)
      throw std::logic_error("rational gcd left a non-integer multiplier");
    out.multipliers.push_back(mult.get_num());
  }
  return out;
}

MoebiusElement synthesize_parabolic(const CylinderDecomposition& dec) {
  if (!dec.common)
    throw not_commensurable_error("no common inverse modulus");
  QuadExt s = dec.common->common_inverse_modulus.inverse();
  QuadExt zero(0), one(1);
  switch (dec.direction) {
    case Direction::horizontal:
      return MoebiusElement(one, s, zero, one);
    case Direction::vertical:
      return MoebiusElement(one, zero, s, one);
    case Direction::antidiagonal:
      return MoebiusElement(one + s, s, -s, one - s);
  }
  throw invalid_parameters("bad direction");
}

std::vector<BigInt> twist_counts(const CylinderDecomposition& dec,
                                 const QuadExt& shear) {
  if (shear.sign() <= 0) throw invalid_parameters("shear must be positive");
  std::vector<BigInt> out;
  out.reserve(dec.cylinders.size());
  for (const auto& cyl : dec.cylinders) {
    QuadExt count = shear * cyl.inverse_modulus();
    if (!count.is_rational() || count.a().get_den() != 1)
      throw non_integer_twist(cyl.index,
                              "shear does not stabilize cylinder " +
                                  std::to_string(cyl.index) + ": twist " +
                                  count.text());
    out.push_back(count.a().get_num());
  }
  return out;
}

Cylinder widest_cylinder(const CylinderDecomposition& dec) {
  if (dec.cylinders.size() < 2)
    throw invalid_parameters("need at least two cylinders");
  const Cylinder* best = &dec.cylinders.front();
  for (const auto& cyl : dec.cylinders) {
    int c = (cyl.circumference - best->circumference).sign();
    if (c == 0 && cyl.index != best->index)
      throw std::logic_error("widest cylinder is not unique");
    if (c > 0) best = &cyl;
  }
  // Tail bound: beyond the truncation, circumferences keep shrinking by
  // the factor lambda < 1, so the maximum over the truncated list is the
  // global one. Assert the contraction on the last stored pair.
  const Cylinder& last = dec.cylinders.back();
  const Cylinder& prev = dec.cylinders[dec.cylinders.size() - 2];
  if (!(last.circumference < prev.circumference))
    throw std::logic_error("tail is not contracting");
  return *best;
}

QuadExt cylinder_area_total(const CylinderDecomposition& dec,
                            const LadderParams& params) {
  QuadExt total(0);
  for (const auto& cyl : dec.cylinders) total += cyl.height * cyl.circumference;
  // Tail: cylinders n > N contribute sum lambda^{2n-1} (1+lambda+lambda^2)
  //     = lambda^{2N+1} (1+lambda+lambda^2) / (1-lambda^2).
  long n_last = dec.cylinders.back().index;
  QuadExt one(1);
  QuadExt lam2 = params.lambda * params.lambda;
  QuadExt tail = params.lambda.pow(2 * n_last + 1) *
                 (one + params.lambda + lam2) / (one - lam2);
  return total + tail;
}

}  // namespace ladder
