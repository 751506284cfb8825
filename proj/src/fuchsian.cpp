#include "ladder/fuchsian.hpp"

#include "ladder/orbit.hpp"

namespace ladder {

FundamentalDomain::FundamentalDomain(const LadderParams& params)
    : params_(params),
      shear_(params.shear()),
      strip_left_(QuadExt(-2)),
      strip_right_(params.shear() - QuadExt(2)) {
  // k(1+lambda) = l(1/lambda + 1 + lambda) > 3l >= 3, so the free side
  // (1, k(1+lambda)-2) is never empty; keep the guard anyway.
  if (!(strip_right_ > QuadExt(1)))
    throw invalid_parameters("degenerate free side: strip right edge <= 1");
}

bool FundamentalDomain::in_closure(const HalfPlanePoint& z) const {
  if (z.im.sign() <= 0) throw invalid_parameters("not an interior point");
  if (z.re < strip_left_ || z.re > strip_right_) return false;
  QuadExt norm = z.re * z.re + z.im * z.im;
  if (norm < QuadExt(1)) return false;
  QuadExt re1 = z.re + QuadExt(1);
  return !(re1 * re1 + z.im * z.im < QuadExt(1));
}

bool FundamentalDomain::in_interior(const HalfPlanePoint& z) const {
  if (z.im.sign() <= 0) throw invalid_parameters("not an interior point");
  if (!(strip_left_ < z.re) || !(z.re < strip_right_)) return false;
  QuadExt norm = z.re * z.re + z.im * z.im;
  if (!(norm > QuadExt(1))) return false;
  QuadExt re1 = z.re + QuadExt(1);
  return (re1 * re1 + z.im * z.im) > QuadExt(1);
}

ReductionResult reduce(const FundamentalDomain& dom, const HalfPlanePoint& z,
                       int cap) {
  if (z.im.sign() <= 0) throw invalid_parameters("point not in H");
  ReductionResult out;
  out.point = z;
  const MoebiusElement r = rotation_R();
  const MoebiusElement r2 = r * r;
  while (true) {
    // T^n with the unique n putting Re into [-2, shear - 2)
    QuadExt offset = (out.point.re - dom.strip_left()) / dom.shear();
    BigInt n = floor_to_int(offset);
    if (n != 0) {
      if (!n.fits_slong_p())
        throw reduction_cap_exceeded("translation exponent overflow");
      std::int64_t ni = n.get_si();
      out.point.re -= QuadExt(Rational(BigInt(n))) * dom.shear();
      out.word.prepend(Letter{false, -ni});
    }
    QuadExt norm = out.point.re * out.point.re + out.point.im * out.point.im;
    QuadExt re1 = out.point.re + QuadExt(1);
    QuadExt norm1 = re1 * re1 + out.point.im * out.point.im;
    const MoebiusElement* step = nullptr;
    std::int64_t rexp = 0;
    if (norm < QuadExt(1)) {
      step = &r;
      rexp = 1;
    } else if (norm1 < QuadExt(1)) {
      step = &r2;
      rexp = 2;
    } else {
      break;  // in closure: strip plus outside both open disks
    }
    HalfPlanePoint next = apply(*step, out.point);
    if (!(next.im > out.point.im))
      throw std::logic_error("disk ejection failed to increase Im");
    out.point = next;
    out.word.prepend(Letter{true, rexp});
    if (++out.iterations > cap)
      throw reduction_cap_exceeded("reduction exceeded iteration cap");
  }
  return out;
}

namespace {

const std::array<Rational, 3> kBaseOffsets = {
    make_rational(1, 7), make_rational(1, 11), make_rational(1, 13)};

}  // namespace

MembershipResult membership(const FundamentalDomain& dom,
                            const MoebiusElement& m) {
  for (const Rational& off : kBaseOffsets) {
    HalfPlanePoint z0{QuadExt(off), QuadExt(2)};
    ReductionResult red = reduce(dom, apply(m, z0));
    MoebiusElement g = evaluate(red.word, dom.params());
    MoebiusElement gm = g * m;
    if (gm.is_identity())
      return {MemberVerdict::yes, red.word.inverse()};
    if (apply(gm, z0) == z0) continue;  // collided with an elliptic orbit
    return {MemberVerdict::no, GroupWord()};
  }
  return {MemberVerdict::ambiguous, GroupWord()};
}

std::pair<MoebiusElement, MoebiusElement> section5_matrices(
    const LadderParams& params) {
  const QuadExt& lam = params.lambda;
  QuadExt one(1);
  MoebiusElement a(one - lam, one, -(lam * lam), one + lam);
  MoebiusElement b(one + lam, -(lam * lam), one, one - lam);
  for (const MoebiusElement* m : {&a, &b}) {
    if (!(m->mat().det() == QuadExt(1)) || !(m->trace() == QuadExt(2)))
      throw std::logic_error("witness matrix is not parabolic");
  }
  auto fa = fixed_points(a), fb = fixed_points(b);
  if (!(fa.boundary.at(0).value == lam.inverse()) ||
      !(fb.boundary.at(0).value == lam))
    throw std::logic_error("witness fixed points are off");
  if (!(eigen_slope(a).value == lam) ||
      !(eigen_slope(b).value == lam.inverse()))
    throw std::logic_error("witness eigen slopes are off");
  return {a, b};
}

bool forbidden_direction_check(const LadderParams& params,
                               const MoebiusElement& m) {
  EigenSlope slope = eigen_slope(m);  // throws not_parabolic otherwise
  if (slope.vertical) return false;
  if (!(params.lambda < slope.value && slope.value < params.lambda.inverse()))
    return false;
  FundamentalDomain dom(params);
  return membership(dom, m).verdict == MemberVerdict::no;
}

bool cusp_orbit_gap(const FundamentalDomain& dom, int max_len) {
  if (max_len < 1 || max_len > 16)
    throw invalid_parameters("max_len must be in 1..16");
  return cusp_gap_holds(dom.params(), max_len, true);
}

}  // namespace ladder
