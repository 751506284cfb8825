#include "ladder/moebius.hpp"

namespace ladder {

Mat2 Mat2::inverse() const {
  QuadExt dt = det();
  if (dt.is_zero()) throw division_by_zero("singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

MoebiusElement::MoebiusElement() : m_{QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(1)} {}

MoebiusElement::MoebiusElement(const Mat2& m) : m_(m) {
  if (!(m_.det() == QuadExt(1)))
    throw invalid_parameters("matrix must have determinant 1");
  canonicalize();
}

MoebiusElement::MoebiusElement(const QuadExt& a, const QuadExt& b,
                               const QuadExt& c, const QuadExt& d)
    : MoebiusElement(Mat2{a, b, c, d}) {}

std::optional<MoebiusElement> MoebiusElement::from_gl(const Mat2& m) {
  QuadExt dt = m.det();
  if (dt.sign() <= 0) return std::nullopt;
  std::int64_t ambient =
      dt.radicand() != 1 ? dt.radicand()
                         : std::max({m.a.radicand(), m.b.radicand(),
                                     m.c.radicand(), m.d.radicand()});
  auto root = field_sqrt(dt, ambient);
  if (!root) return std::nullopt;
  QuadExt s = root->inverse();
  return MoebiusElement(Mat2{m.a * s, m.b * s, m.c * s, m.d * s});
}

void MoebiusElement::canonicalize() {
  for (const QuadExt* e : {&m_.a, &m_.b, &m_.c, &m_.d}) {
    int s = e->sign();
    if (s == 0) continue;
    if (s < 0) m_ = -m_;
    return;
  }
}

bool MoebiusElement::is_identity() const {
  return m_.a == QuadExt(1) && m_.b.is_zero() && m_.c.is_zero() &&
         m_.d == QuadExt(1);
}

MoebiusElement MoebiusElement::inverse() const {
  return MoebiusElement(Mat2{m_.d, -m_.b, -m_.c, m_.a});
}

MoebiusElement MoebiusElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  MoebiusElement acc;
  MoebiusElement base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator<(const MoebiusElement& x, const MoebiusElement& y) {
  for (auto [p, q] : {std::pair{&x.m_.a, &y.m_.a},
                      {&x.m_.b, &y.m_.b},
                      {&x.m_.c, &y.m_.c},
                      {&x.m_.d, &y.m_.d}}) {
    int c = QuadExt::key_compare(*p, *q);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string MoebiusElement::text() const {
  return "[" + m_.a.text() + ", " + m_.b.text() + "; " + m_.c.text() + ", " +
         m_.d.text() + "]";
}

ElementClass classify(const MoebiusElement& m) {
  ElementClass out;
  out.trace = m.trace();
  if (m.is_identity()) {
    out.type = ElemType::identity;
    out.order = 1;
    return out;
  }
  QuadExt t2 = out.trace * out.trace;
  int cmp4 = (t2 - QuadExt(4)).sign();
  if (cmp4 > 0) {
    out.type = ElemType::hyperbolic;
  } else if (cmp4 == 0) {
    out.type = ElemType::parabolic;
  } else {
    out.type = ElemType::elliptic;
    MoebiusElement power = m;
    for (int n = 2; n <= 12; ++n) {
      power = power * m;
      if (power.is_identity()) {
        out.order = n;
        break;
      }
    }
  }
  return out;
}

FixedPoints fixed_points(const MoebiusElement& m) {
  if (m.is_identity())
    throw invalid_parameters("identity fixes everything");
  FixedPoints out;
  ElementClass cls = classify(m);
  out.type = cls.type;
  const QuadExt &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();

  if (c.is_zero()) {
    out.boundary.push_back(BoundaryPoint::infinity());
    if (out.type == ElemType::hyperbolic)
      out.boundary.push_back(BoundaryPoint::at(b / (d - a)));
    return out;
  }

  // c z^2 + (d - a) z - b = 0
  QuadExt two_c = QuadExt(2) * c;
  QuadExt mid = (a - d) / two_c;
  switch (out.type) {
    case ElemType::parabolic:
      out.boundary.push_back(BoundaryPoint::at(mid));
      break;
    case ElemType::hyperbolic: {
      QuadExt disc = cls.trace * cls.trace - QuadExt(4);
      std::int64_t ambient =
          disc.radicand() != 1 ? disc.radicand() : c.radicand();
      if (auto root = field_sqrt(disc, ambient)) {
        out.boundary.push_back(BoundaryPoint::at(mid - *root / two_c));
        out.boundary.push_back(BoundaryPoint::at(mid + *root / two_c));
      } else {
        out.minimal_polynomial = {{(d - a) / c, -(b / c)}};
      }
      break;
    }
    case ElemType::elliptic: {
      out.interior_re = mid;
      QuadExt disc = QuadExt(4) - cls.trace * cls.trace;  // > 0
      out.interior_im_squared = disc / (two_c * two_c);
      out.minimal_polynomial = {{(d - a) / c, -(b / c)}};
      break;
    }
    default:
      break;
  }
  return out;
}

EigenSlope eigen_slope(const MoebiusElement& m) {
  ElementClass cls = classify(m);
  if (cls.type != ElemType::parabolic)
    throw not_parabolic("eigen_slope needs a parabolic element");
  // Normalize to trace +2; kernel of (M - I).
  Mat2 mm = m.mat();
  if (cls.trace == QuadExt(-2)) mm = -mm;
  QuadExt a1 = mm.a - QuadExt(1);
  QuadExt d1 = mm.d - QuadExt(1);
  if (!mm.c.is_zero()) {
    // row (c, d-1): eigenvector (d-1, -c)
    if (d1.is_zero()) return {true, QuadExt(0)};
    return {false, -(mm.c) / d1};
  }
  // c == 0, trace 2 forces a == d == 1; eigenvector (1, 0) horizontal
  (void)a1;
  return {false, QuadExt(0)};
}

HalfPlanePoint apply(const MoebiusElement& m, const HalfPlanePoint& z) {
  if (z.im.sign() <= 0) throw invalid_parameters("point not in upper half plane");
  const QuadExt &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  QuadExt cre_d = c * z.re + d;
  QuadExt denom = cre_d * cre_d + c * c * z.im * z.im;  // |cz+d|^2 > 0
  QuadExt are_b = a * z.re + b;
  QuadExt re = (are_b * cre_d + a * c * z.im * z.im) / denom;
  QuadExt im = z.im / denom;  // det == 1
  return {re, im};
}

BoundaryPoint apply(const MoebiusElement& m, const BoundaryPoint& x) {
  const QuadExt &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  if (x.infinite) {
    if (c.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint::at(a / c);
  }
  QuadExt denom = c * x.value + d;
  if (denom.is_zero()) return BoundaryPoint::infinity();  // pole
  return BoundaryPoint::at((a * x.value + b) / denom);
}

MoebiusElement translation_T(const LadderParams& params) {
  return MoebiusElement(QuadExt(1), params.shear(), QuadExt(0), QuadExt(1));
}

MoebiusElement rotation_R() {
  return MoebiusElement(QuadExt(-1), QuadExt(-1), QuadExt(1), QuadExt(0));
}

HexagonConjugation hexagon_conjugation_parts() {
  QuadExt half(make_rational(1, 2));
  QuadExt half_sqrt3(Rational(0), make_rational(1, 2), 3);
  HexagonConjugation parts;
  parts.shear = Mat2{QuadExt(1), half, QuadExt(0), half_sqrt3};
  parts.shear_inverse = parts.shear.inverse();
  parts.rotation = Mat2{-half, -half_sqrt3, half_sqrt3, -half};
  parts.target = Mat2{QuadExt(-1), QuadExt(-1), QuadExt(1), QuadExt(0)};
  return parts;
}

bool hexagon_conjugation_identity() {
  HexagonConjugation p = hexagon_conjugation_parts();
  return p.shear_inverse * p.rotation * p.shear == p.target;
}

Mat2 minus_identity() {
  return {QuadExt(-1), QuadExt(0), QuadExt(0), QuadExt(-1)};
}

Mat2 swap_xy() { return {QuadExt(0), QuadExt(1), QuadExt(1), QuadExt(0)}; }

}  // namespace ladder
