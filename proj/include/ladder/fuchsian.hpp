#pragma once

#include <optional>

#include "ladder/words.hpp"

namespace ladder {

// Fundamental domain of G = <R, T> acting on the upper half plane:
// the strip -2 < Re z < k(1+lambda) - 2 minus the closed unit disks
// centered at 0 and -1. T pairs the strip edges; R pairs the two arcs,
// sending the |z| = 1 arc to the |z+1| = 1 arc (it maps the vertical line
// Re = -1/2 to the geodesic from 1 to -1, and its inverse to the geodesic
// from -2 to 0). The cusp at infinity is fixed by T; the free side is the
// real interval (1, k(1+lambda)-2).
class FundamentalDomain {
 public:
  explicit FundamentalDomain(const LadderParams& params);

  const LadderParams& params() const { return params_; }
  const QuadExt& strip_left() const { return strip_left_; }
  const QuadExt& strip_right() const { return strip_right_; }
  const QuadExt& shear() const { return shear_; }
  // Membership answers describe G = <R, T>; only for l == 1 does the
  // theorem identify G with the Veech group.
  bool theorem_scope() const { return params_.l == 1; }

  bool in_closure(const HalfPlanePoint& z) const;
  bool in_interior(const HalfPlanePoint& z) const;

 private:
  LadderParams params_;
  QuadExt shear_;
  QuadExt strip_left_;
  QuadExt strip_right_;
};

struct ReductionResult {
  GroupWord word;          // evaluate(word) * input == point, exactly
  HalfPlanePoint point;    // in the closure of the domain
  int iterations = 0;
};

// Strip translation first, then disk ejection by R (inside |z| < 1) or
// R^2 (inside |z+1| < 1); every ejection strictly increases Im. Throws
// reduction_cap_exceeded past `cap` ejections.
ReductionResult reduce(const FundamentalDomain& dom, const HalfPlanePoint& z,
                       int cap = 10000);

enum class MemberVerdict { yes, no, ambiguous };

struct MembershipResult {
  MemberVerdict verdict = MemberVerdict::no;
  GroupWord word;  // normal form of the element when verdict == yes
};

// Orbit test with base point 2i + offset: reduce M*z0 and compare with z0.
// Retries a few rational offsets when z0 collides with an elliptic orbit;
// `ambiguous` only after all retries collide.
MembershipResult membership(const FundamentalDomain& dom,
                            const MoebiusElement& m);

// The two trace-2 witnesses bounding the forbidden slope band:
// (1-lambda, 1; -lambda^2, 1+lambda) with eigen slope lambda and fixed
// point 1/lambda, and its mirror with slope 1/lambda and fixed point
// lambda. All stated identities are asserted exactly before returning.
std::pair<MoebiusElement, MoebiusElement> section5_matrices(
    const LadderParams& params);

// Screening harness for the no-parabolic band: true iff M is parabolic
// with eigen slope strictly inside (lambda, 1/lambda) and M is not a
// member of G.
bool forbidden_direction_check(const LadderParams& params,
                               const MoebiusElement& m);

// Exhaustive gap check: no normal-form word of generator length <= max_len
// maps any of the cusps infinity, 0, -1 into the open interval
// (lambda, 1/lambda). max_len <= 16.
bool cusp_orbit_gap(const FundamentalDomain& dom, int max_len);

}  // namespace ladder
