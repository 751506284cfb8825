#pragma once

#include <optional>
#include <vector>

#include "ladder/lambda.hpp"

namespace ladder {

// Plain 2x2 matrix over the field; no determinant normalization. Used for
// GL-level identities (chart changes, the orientation-reversing generator)
// and as the backing store of MoebiusElement.
struct Mat2 {
  QuadExt a, b, c, d;

  QuadExt det() const { return a * d - b * c; }
  QuadExt trace() const { return a + d; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// PSL(2) element: determinant 1 exactly, sign-canonical representative
// (first nonzero entry of (a,b,c,d) positive), so PSL equality and ordering
// are coefficient-wise.
class MoebiusElement {
 public:
  MoebiusElement();  // identity
  explicit MoebiusElement(const Mat2& m);  // requires det == 1
  MoebiusElement(const QuadExt& a, const QuadExt& b, const QuadExt& c,
                 const QuadExt& d);

  // Scales a positive-determinant matrix into PSL when sqrt(det) exists in
  // the field; nullopt otherwise.
  static std::optional<MoebiusElement> from_gl(const Mat2& m);

  const Mat2& mat() const { return m_; }
  const QuadExt& a() const { return m_.a; }
  const QuadExt& b() const { return m_.b; }
  const QuadExt& c() const { return m_.c; }
  const QuadExt& d() const { return m_.d; }
  QuadExt trace() const { return m_.trace(); }

  bool is_identity() const;
  MoebiusElement inverse() const;
  MoebiusElement pow(long e) const;

  friend MoebiusElement operator*(const MoebiusElement& x,
                                  const MoebiusElement& y) {
    return MoebiusElement(x.m_ * y.m_);
  }
  friend bool operator==(const MoebiusElement& x, const MoebiusElement& y) {
    return x.m_ == y.m_;
  }
  friend bool operator!=(const MoebiusElement& x, const MoebiusElement& y) {
    return !(x == y);
  }

  // Strict ordering for container keys.
  friend bool operator<(const MoebiusElement& x, const MoebiusElement& y);

  std::string text() const;

 private:
  void canonicalize();
  Mat2 m_;
};

enum class ElemType { identity, elliptic, parabolic, hyperbolic };

struct ElementClass {
  ElemType type = ElemType::identity;
  std::optional<int> order;  // elliptic elements of finite order only
  QuadExt trace;             // of the sign-canonical representative
};

// Trace trichotomy, exact: |tr| < 2 elliptic, == 2 parabolic (or identity),
// > 2 hyperbolic. Elliptic order searched up to 12.
ElementClass classify(const MoebiusElement& m);

// Point of the closed upper half plane boundary: a real number or infinity.
struct BoundaryPoint {
  bool infinite = false;
  QuadExt value;

  static BoundaryPoint infinity() { return {true, QuadExt(0)}; }
  static BoundaryPoint at(const QuadExt& v) { return {false, v}; }
  friend bool operator==(const BoundaryPoint& p, const BoundaryPoint& q) {
    return p.infinite == q.infinite && (p.infinite || p.value == q.value);
  }
};

struct HalfPlanePoint {
  QuadExt re;
  QuadExt im;  // > 0

  friend bool operator==(const HalfPlanePoint& p, const HalfPlanePoint& q) {
    return p.re == q.re && p.im == q.im;
  }
};

// Fixed points in the closed half plane. Parabolic: one boundary point.
// Hyperbolic: two boundary points when sqrt(tr^2-4) lies in the field,
// otherwise the symbolic monic quadratic. Elliptic: interior point given as
// re plus im^2 (im itself usually leaves the field) plus the same monic
// quadratic z^2 + p z + q = 0 its coordinate satisfies.
struct FixedPoints {
  ElemType type = ElemType::identity;
  std::vector<BoundaryPoint> boundary;
  std::optional<QuadExt> interior_re;
  std::optional<QuadExt> interior_im_squared;
  std::optional<std::pair<QuadExt, QuadExt>> minimal_polynomial;  // (p, q)
};

FixedPoints fixed_points(const MoebiusElement& m);

struct EigenSlope {
  bool vertical = false;
  QuadExt value;  // y/x of the eigenvector when not vertical
};

// Eigendirection slope of a parabolic element (trace-+2 representative).
EigenSlope eigen_slope(const MoebiusElement& m);

HalfPlanePoint apply(const MoebiusElement& m, const HalfPlanePoint& z);
BoundaryPoint apply(const MoebiusElement& m, const BoundaryPoint& x);

// Generators: T = (1, k(1+lambda); 0, 1) and R = (-1,-1;1,0).
MoebiusElement translation_T(const LadderParams& params);
MoebiusElement rotation_R();

// Pieces of the chart-change identity in Q(sqrt(3)): the shear-scaling
// matrix (1, 1/2; 0, sqrt(3)/2), its inverse, the rotation by 2*pi/3, and
// the target R.
struct HexagonConjugation {
  Mat2 shear;
  Mat2 shear_inverse;
  Mat2 rotation;
  Mat2 target;
};

HexagonConjugation hexagon_conjugation_parts();

// shear^-1 * rotation * shear == R, exactly in Q(sqrt(3)).
bool hexagon_conjugation_identity();

// Constants stored for the extended group; their action is not modeled.
// minus_identity cannot lie in the Veech group; swap_xy generates the
// orientation-reversing extension (and doubles as the transpose transport
// between the horizontal and vertical decompositions).
Mat2 minus_identity();
Mat2 swap_xy();

}  // namespace ladder
