#include "ladder/surface.hpp"

#include <cmath>

namespace ladder {

LadderSurface::LadderSurface(const LadderParams& params, int depth)
    : params_(params), depth_(depth) {
  if (depth < 2) throw invalid_parameters("depth must be >= 2");
  c_.reserve(static_cast<size_t>(depth) + 4);
  c_.emplace_back(0);  // c_{-1}
  QuadExt power(1);
  for (int n = 0; n <= depth + 2; ++n) {
    c_.push_back(c_.back() + power);
    power *= params_.lambda;
  }
  // c strictly increasing, bounded by 1/(1-lambda), steps exactly lambda^n.
  QuadExt bound = (QuadExt(1) - params_.lambda).inverse();
  QuadExt expected_step(1);
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    if (!((c_[i + 1] - c_[i]) == expected_step))
      throw std::logic_error("partial sum step mismatch");
    if (!(c_[i + 1] < bound))
      throw std::logic_error("partial sum exceeds geometric bound");
    expected_step *= params_.lambda;
  }
}

const QuadExt& LadderSurface::partial_sum(int n) const {
  if (n < -1 || n > depth_ + 2)
    throw invalid_parameters("partial sum index out of range");
  return c_[static_cast<size_t>(n + 1)];
}

SurfacePoint LadderSurface::corner(int n, bool mirrored) const {
  const QuadExt& hi = partial_sum(n + 1);
  const QuadExt& lo = partial_sum(n);
  return mirrored ? SurfacePoint{lo, hi} : SurfacePoint{hi, lo};
}

const QuadExt& LadderSurface::step_right_continuous(const QuadExt& t) const {
  // smallest n with t < c_n gives t in [c_{n-1}, c_n), value c_{n+1}
  size_t lo = 0, hi = c_.size() - 1;  // c_[hi] > t guaranteed by caller
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (t < c_[mid])
      hi = mid;
    else
      lo = mid + 1;
  }
  return c_[lo + 1];
}

const QuadExt& LadderSurface::step_left_continuous(const QuadExt& t) const {
  // smallest n with t <= c_n gives t in (c_{n-1}, c_n], value c_{n+1}
  size_t lo = 0, hi = c_.size() - 1;
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (t <= c_[mid])
      hi = mid;
    else
      lo = mid + 1;
  }
  return c_[lo + 1];
}

Region LadderSurface::contains(const SurfacePoint& p) const {
  const QuadExt& limit = partial_sum(depth_);
  if (!(p.x < limit) || !(p.y < limit))
    throw truncation_exceeded("point beyond truncation depth");
  int sx = p.x.sign(), sy = p.y.sign();
  if (sx < 0 || sy < 0) return Region::exterior;
  if (p.x > step_right_continuous(p.y) || p.y > step_right_continuous(p.x))
    return Region::exterior;
  if (sx > 0 && sy > 0 && p.x < step_left_continuous(p.y) &&
      p.y < step_left_continuous(p.x))
    return Region::interior;
  return Region::boundary;
}

QuadExt LadderSurface::cross_section_width(const QuadExt& y) const {
  if (y.sign() <= 0 || !(y < partial_sum(depth_)))
    throw invalid_parameters("height outside (0, c_depth)");
  // Right wall at f(y); left wall at the smallest x whose column reaches y.
  const QuadExt& right = step_right_continuous(y);
  // find smallest j with c_{j+1} >= y; left wall is c_{j-1} (clamped at 0)
  int j = 0;
  while (partial_sum(j + 1) < y) ++j;
  QuadExt left = j >= 1 ? partial_sum(j - 1) : QuadExt(0);
  return right - left;
}

QuadExt area(const LadderParams& params) {
  QuadExt one(1), two(2);
  return (one + two * params.lambda) /
         (one - params.lambda * params.lambda);
}

double area_series(const LadderParams& params, int terms) {
  double lam = params.lambda.to_double();
  double sum = 0.0;
  for (int k = 0; k < terms; ++k)
    sum += std::pow(lam, 2 * k) + 2.0 * std::pow(lam, 2 * k + 1);
  return sum;
}

QuadExt area_series_exact(const LadderParams& params, int terms) {
  QuadExt one(1), two(2);
  QuadExt sum(0), even_power(1);  // lambda^{2k}
  QuadExt lam2 = params.lambda * params.lambda;
  for (int k = 0; k < terms; ++k) {
    sum += even_power + two * even_power * params.lambda;
    even_power *= lam2;
  }
  // remainder: sum_{k>=terms} lambda^{2k} (1 + 2 lambda)
  QuadExt tail = even_power * (one + two * params.lambda) / (one - lam2);
  return sum + tail;
}

SurfacePoint accumulation_point(const LadderParams& params) {
  QuadExt s = (QuadExt(1) - params.lambda).inverse();
  return {s, s};
}

QuadExt corner_distance_squared_to_accumulation(const LadderSurface& surface,
                                                int n) {
  SurfacePoint s = accumulation_point(surface.params());
  SurfacePoint c = surface.corner(n);
  QuadExt dx = s.x - c.x, dy = s.y - c.y;
  return dx * dx + dy * dy;
}

namespace {

// Containment of the closed unit segment from corner (c_{n+1}, c_n) in
// direction (-1, -s)/sqrt(1+s^2). All crossing tests square out the radical;
// the endpoint is classified with cmp_minus_sqrt. Mirrored corners reduce to
// the same test with slope 1/s.
bool segment_contained(const LadderSurface& surf, int n, const Rational& s) {
  const Rational s2 = s * s;
  const Rational one_plus = s2 + 1;
  const QuadExt cn = surf.partial_sum(n);
  const QuadExt cn1 = surf.partial_sum(n + 1);

  // Horizontal levels y = c_m crossed strictly when s^2 > (c_n - c_m)^2 (1+s^2).
  for (int m = n - 1; m >= -1; --m) {
    QuadExt delta = cn - surf.partial_sum(m);
    int reach = (QuadExt(s2) - delta * delta * QuadExt(one_plus)).sign();
    if (reach <= 0) break;  // deeper levels are further away
    if (m == -1) return false;  // would cross the floor
    QuadExt crossing_x = cn1 - delta / QuadExt(s);
    if (crossing_x > surf.partial_sum(m + 1)) return false;
  }

  // Vertical levels x = c_m crossed strictly when 1 > (c_{n+1} - c_m)^2 (1+s^2).
  for (int m = n; m >= 0; --m) {
    QuadExt delta = cn1 - surf.partial_sum(m);
    int reach = (QuadExt(1) - delta * delta * QuadExt(one_plus)).sign();
    if (reach <= 0) break;
    QuadExt crossing_y = cn - QuadExt(s) * delta;
    if (crossing_y > surf.partial_sum(m + 1)) return false;
  }

  // Endpoint Q = (c_{n+1} - r, c_n - s r), r = 1/sqrt(1+s^2).
  const Rational rx_sq = Rational(1) / one_plus;   // r^2
  const Rational ry_sq = s2 / one_plus;            // (s r)^2
  // Q.y > 0 always (c_n >= 1 > s r); locate the step interval of Q.y:
  // smallest j with Q.y <= c_j, i.e. (c_n - c_j) <= s r.
  auto locate = [&](const QuadExt& base, const Rational& drop_sq) {
    int j = 0;
    while (cmp_minus_sqrt(base - surf.partial_sum(j), drop_sq) > 0) ++j;
    return j;  // coordinate lies in (c_{j-1}, c_j]
  };
  int jy = locate(cn, ry_sq);
  // closed region: Q.x <= f(Q.y) where f on [c_{jy-1}, c_jy) .. use the
  // right-continuous value c_{jy+1} unless Q.y == c_jy exactly (then c_{jy+2}).
  bool y_on_grid = cmp_minus_sqrt(cn - surf.partial_sum(jy), ry_sq) == 0;
  const QuadExt& fx = surf.partial_sum(y_on_grid ? jy + 2 : jy + 1);
  if (cmp_minus_sqrt(cn1 - fx, rx_sq) > 0) return false;  // Q.x > f(Q.y)

  int jx = locate(cn1, rx_sq);
  bool x_on_grid = cmp_minus_sqrt(cn1 - surf.partial_sum(jx), rx_sq) == 0;
  const QuadExt& fy = surf.partial_sum(x_on_grid ? jx + 2 : jx + 1);
  if (cmp_minus_sqrt(cn - fy, ry_sq) > 0) return false;  // Q.y > f(Q.x)
  return true;
}

std::vector<SegmentVerdict> run_segments(const LadderSurface& surface,
                                         const Rational& slope, int count,
                                         bool parallel) {
  const LadderParams& params = surface.params();
  QuadExt qs((slope));
  if (!(params.lambda < qs && qs < params.lambda.inverse()))
    throw slope_out_of_band("slope must lie strictly between lambda and 1/lambda");
  if (count < 1 || count > surface.depth())
    throw invalid_parameters("count must be in 1..depth");

  std::vector<SegmentVerdict> out(2 * static_cast<size_t>(count));
  Rational mirror_slope = Rational(1) / slope;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < 2 * count; ++i) {
    int n = i / 2;
    bool mirrored = (i % 2) == 1;
    out[static_cast<size_t>(i)] = SegmentVerdict{
        n, mirrored, surface.corner(n, mirrored),
        segment_contained(surface, n, mirrored ? mirror_slope : slope)};
  }
  return out;
}

}  // namespace

std::vector<SegmentVerdict> singular_segments(const LadderSurface& surface,
                                              const Rational& slope,
                                              int count) {
  return run_segments(surface, slope, count, true);
}

std::vector<SegmentVerdict> singular_segments_serial(
    const LadderSurface& surface, const Rational& slope, int count) {
  return run_segments(surface, slope, count, false);
}

}  // namespace ladder
