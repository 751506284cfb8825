#pragma once

#include <vector>

#include "ladder/lambda.hpp"

namespace ladder {

struct SurfacePoint {
  QuadExt x;
  QuadExt y;

  friend bool operator==(const SurfacePoint& p, const SurfacePoint& q) {
    return p.x == q.x && p.y == q.y;
  }
};

enum class Region { interior, boundary, exterior };

// Truncated model of the staircase polygon: exact partial sums
// c_{-1} = 0, c_n = 1 + lambda + ... + lambda^n for n = 0..depth+2.
// The closed region is { x,y >= 0, x <= f(y), y <= f(x) } with
// f(t) = c_{n+1} on [c_{n-1}, c_n). Reflex corners sit at (c_{n+1}, c_n)
// and mirrored; all boundary identifications are translations between
// parallel equal-length edges.
class LadderSurface {
 public:
  LadderSurface(const LadderParams& params, int depth);

  const LadderParams& params() const { return params_; }
  int depth() const { return depth_; }

  // n from -1 to depth+2.
  const QuadExt& partial_sum(int n) const;

  // Reflex staircase corner (c_{n+1}, c_n), n = -1..depth; mirrored swaps.
  SurfacePoint corner(int n, bool mirrored = false) const;

  // Exact three-way point location. Requires both coordinates < c_depth,
  // else truncation_exceeded.
  Region contains(const SurfacePoint& p) const;

  // Length of { x : (x, y) in region } for 0 < y < c_depth; matches the
  // circumference of the horizontal cylinder through height y.
  QuadExt cross_section_width(const QuadExt& y) const;

 private:
  // Step functions f(t): right-continuous variant bounds the closed region,
  // left-continuous variant bounds the interior.
  const QuadExt& step_right_continuous(const QuadExt& t) const;
  const QuadExt& step_left_continuous(const QuadExt& t) const;

  LadderParams params_;
  int depth_;
  std::vector<QuadExt> c_;  // c_[i] = c_{i-1}
};

// Closed form (1+2*lambda)/(1-lambda^2).
QuadExt area(const LadderParams& params);

// Partial sum of the defining series sum lambda^{2k} + 2 sum lambda^{2k+1},
// evaluated in doubles; the float oracle for the closed form.
double area_series(const LadderParams& params, int terms);

// Exact tail-completed series: partial sums up to `terms` plus the geometric
// remainder; equals area() identically for every cut-off.
QuadExt area_series_exact(const LadderParams& params, int terms);

// S = (1/(1-lambda), 1/(1-lambda)), the corner the reflex vertices
// accumulate at.
SurfacePoint accumulation_point(const LadderParams& params);

// Squared Euclidean distance from corner n to S; successive ratios are
// exactly lambda^2.
QuadExt corner_distance_squared_to_accumulation(const LadderSurface& surface,
                                                int n);

struct SegmentVerdict {
  int index = 0;
  bool mirrored = false;
  SurfacePoint start;
  bool contained = false;
};

// For corners n = 0..count-1 and their mirrors: does the length-1 segment
// from the corner in direction (-1, -slope)/|.| stay inside the region?
// Requires lambda < slope < 1/lambda (open), count <= depth.
std::vector<SegmentVerdict> singular_segments(const LadderSurface& surface,
                                              const Rational& slope,
                                              int count);
// Reference without the OpenMP loop; identical output.
std::vector<SegmentVerdict> singular_segments_serial(
    const LadderSurface& surface, const Rational& slope, int count);

}  // namespace ladder
