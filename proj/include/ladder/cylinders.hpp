#pragma once

#include <optional>
#include <vector>

#include "ladder/moebius.hpp"
#include "ladder/surface.hpp"

namespace ladder {

enum class Direction { horizontal, vertical, antidiagonal };

const char* direction_name(Direction d);

struct Cylinder {
  int index = 0;
  QuadExt height;
  QuadExt circumference;
  Direction direction = Direction::horizontal;

  QuadExt modulus() const { return circumference / height; }
  QuadExt inverse_modulus() const { return height / circumference; }
};

struct Commensurability {
  QuadExt common_inverse_modulus;  // largest m dividing every inverse modulus
  std::vector<BigInt> multipliers;
};

// Maximal cylinders in one of the three distinguished directions, truncated
// at the surface depth. Horizontal: cylinder 0 is (h, w) = (1, 1+lambda),
// cylinder n >= 1 is (lambda^n, lambda^{n-1}(1+lambda+lambda^2)). The
// vertical data coincides by the diagonal reflection; the antidiagonal data
// is transported by the order-3 symmetry (same moduli multiset), with the
// conjugating matrix recorded in `frame`:
//   horizontal -> identity, vertical -> swap_xy (transpose transport),
//   antidiagonal -> R.
struct CylinderDecomposition {
  Direction direction = Direction::horizontal;
  std::vector<Cylinder> cylinders;
  std::optional<Commensurability> common;  // absent when not commensurable
  Mat2 frame;
};

// Closed-form decomposition, cross-validated against the region model
// (band heights and cross-section widths) and against the one-step
// self-similarity h_{n+1} = lambda h_n, w_{n+1} = lambda w_n for n >= 1.
CylinderDecomposition decompose(const LadderSurface& surface, Direction dir);

// Largest m such that every inverse modulus is an exact integer multiple
// of m, with the integer multipliers; nullopt when some ratio of inverse
// moduli is irrational or non-rational-multiple.
std::optional<Commensurability> commensurability(
    const std::vector<Cylinder>& cylinders);

// The Veech parabolic attached to a commensurable decomposition:
// horizontal (1, 1/m; 0, 1), vertical (1, 0; 1/m, 1), antidiagonal the
// R-conjugate (1+s, s; -s, 1-s) with s = 1/m. Throws not_commensurable_error
// when the decomposition has no common inverse modulus.
MoebiusElement synthesize_parabolic(const CylinderDecomposition& dec);

// Per-cylinder Dehn twist counts shear * h/w; throws non_integer_twist
// (with the offending index) when the shear does not stabilize the
// decomposition. Requires shear > 0.
std::vector<BigInt> twist_counts(const CylinderDecomposition& dec,
                                 const QuadExt& shear);

// Unique cylinder of maximal circumference (index 1 in every direction);
// exact comparisons over the truncated list plus the geometric tail bound.
Cylinder widest_cylinder(const CylinderDecomposition& dec);

// Sum of h*w over the truncated cylinders plus the exact geometric tail;
// equals area(params) identically.
QuadExt cylinder_area_total(const CylinderDecomposition& dec,
                            const LadderParams& params);

}  // namespace ladder
