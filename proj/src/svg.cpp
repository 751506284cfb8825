#include "ladder/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ladder/surface.hpp"

namespace ladder {

namespace {

std::string fmt(double v) {
  char buf[48];
  if (v == 0.0) v = 0.0;  // normalize -0
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Flat canvas with y pointing up; emits the final flipped coordinates.
struct Canvas {
  double width, height, margin, scale;
  std::ostringstream body;

  Canvas(double w, double h, double m, double s)
      : width(w), height(h), margin(m), scale(s) {}

  double tx(double x) const { return (x + margin) * scale; }
  double ty(double y) const { return (height - y + margin) * scale; }

  void line(double x1, double y1, double x2, double y2, const char* cls) {
    body << "<line class=\"" << cls << "\" x1=\"" << fmt(tx(x1)) << "\" y1=\""
         << fmt(ty(y1)) << "\" x2=\"" << fmt(tx(x2)) << "\" y2=\""
         << fmt(ty(y2)) << "\"/>\n";
  }

  void dot(double x, double y, double r) {
    body << "<circle class=\"dot\" cx=\"" << fmt(tx(x)) << "\" cy=\""
         << fmt(ty(y)) << "\" r=\"" << fmt(r * scale) << "\"/>\n";
  }

  void rect(double x, double y, double w, double h, const char* fill) {
    body << "<rect x=\"" << fmt(tx(x)) << "\" y=\"" << fmt(ty(y + h))
         << "\" width=\"" << fmt(w * scale) << "\" height=\""
         << fmt(h * scale) << "\" fill=\"" << fill << "\"/>\n";
  }

  // counterclockwise upper arc of the circle |z - (cx,0)| = r from a1 to a2
  void arc(double cx, double r, double a1, double a2, const char* cls) {
    double x1 = cx + r * std::cos(a1), y1 = r * std::sin(a1);
    double x2 = cx + r * std::cos(a2), y2 = r * std::sin(a2);
    body << "<path class=\"" << cls << "\" d=\"M " << fmt(tx(x1)) << ' '
         << fmt(ty(y1)) << " A " << fmt(r * scale) << ' ' << fmt(r * scale)
         << " 0 0 1 " << fmt(tx(x2)) << ' ' << fmt(ty(y2)) << "\"/>\n";
  }

  std::string finish(double stroke_width) const {
    double w = (width + 2 * margin) * scale;
    double h = (height + 2 * margin) * scale;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' '
        << fmt(h) << "\">\n"
        << "<style>\n"
        << ".edge{stroke:#1a1a1a;stroke-width:" << fmt(stroke_width * scale)
        << ";fill:none}\n"
        << ".axis{stroke:#9a9a9a;stroke-width:"
        << fmt(0.6 * stroke_width * scale) << ";fill:none}\n"
        << ".seg{stroke:#c03030;stroke-width:"
        << fmt(0.8 * stroke_width * scale) << ";fill:none}\n"
        << ".free{stroke:#2060c0;stroke-width:"
        << fmt(2.5 * stroke_width * scale) << ";fill:none}\n"
        << ".dot{fill:#1a1a1a}\n"
        << "</style>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

// Boundary vertices of the truncated staircase, lower arm then mirror.
void draw_staircase(Canvas& canvas, const LadderSurface& surf) {
  int depth = surf.depth();
  auto c = [&](int n) { return surf.partial_sum(n).to_double(); };
  // lower arm: (0,0) -> (c1,0) -> walls/ledges up to the frontier
  double px = 0, py = 0;
  auto line_to = [&](double x, double y) {
    canvas.line(px, py, x, y, "edge");
    px = x;
    py = y;
  };
  line_to(c(1), 0);
  for (int n = 0; n + 2 <= depth; ++n) {
    line_to(c(n + 1), c(n));      // wall top
    line_to(c(n + 2), c(n));      // ledge
  }
  // mirror arm
  px = 0;
  py = 0;
  line_to(0, c(1));
  for (int n = 0; n + 2 <= depth; ++n) {
    line_to(c(n), c(n + 1));
    line_to(c(n), c(n + 2));
  }
  for (int n = -1; n <= depth - 1; ++n) {
    canvas.dot(c(n + 1), c(n), 0.018);
    canvas.dot(c(n), c(n + 1), 0.018);
  }
}

Canvas make_surface_canvas(const LadderParams& params,
                           const SvgOptions& opts) {
  double extent = (QuadExt(1) - params.lambda).inverse().to_double();
  return Canvas(extent, extent, 0.25, opts.scale);
}

}  // namespace

std::string render_surface(const LadderParams& params, int depth,
                           const SvgOptions& opts) {
  LadderSurface surf(params, depth);
  Canvas canvas = make_surface_canvas(params, opts);
  draw_staircase(canvas, surf);
  return canvas.finish(opts.stroke_width);
}

std::string render_cylinders(const LadderParams& params, int depth,
                             const SvgOptions& opts) {
  LadderSurface surf(params, depth);
  Canvas canvas = make_surface_canvas(params, opts);
  auto c = [&](int n) { return surf.partial_sum(n).to_double(); };
  const char* tones[2] = {"#cfd8ea", "#e8d8c8"};
  for (int n = 0; n + 1 <= depth; ++n) {
    double left = n >= 2 ? c(n - 2) : 0.0;
    canvas.rect(left, c(n - 1), c(n + 1) - left, c(n) - c(n - 1),
                tones[n % 2]);
  }
  draw_staircase(canvas, surf);
  return canvas.finish(opts.stroke_width);
}

std::string render_segments(const LadderParams& params, int depth,
                            const Rational& slope, int count,
                            const SvgOptions& opts) {
  LadderSurface surf(params, depth);
  Canvas canvas = make_surface_canvas(params, opts);
  draw_staircase(canvas, surf);
  auto verdicts = singular_segments_serial(surf, slope, count);
  for (const auto& v : verdicts) {
    double s = slope.get_d();
    if (v.mirrored) s = 1.0 / s;
    double r = 1.0 / std::sqrt(1.0 + s * s);
    double x0 = v.start.x.to_double(), y0 = v.start.y.to_double();
    canvas.line(x0, y0, x0 - r, y0 - s * r, "seg");
  }
  SurfacePoint s = accumulation_point(params);
  canvas.dot(s.x.to_double(), s.y.to_double(), 0.025);
  {
    double sl = slope.get_d();
    double r = 1.0 / std::sqrt(1.0 + sl * sl);
    double sx = s.x.to_double();
    canvas.line(sx, sx, sx - r, sx - sl * r, "seg");
  }
  return canvas.finish(opts.stroke_width);
}

std::string render_domain(const LadderParams& params, const SvgOptions& opts) {
  FundamentalDomain dom(params);
  double left = dom.strip_left().to_double();
  double right = dom.strip_right().to_double();
  double top = 2.4;
  Canvas canvas(right - left + 1.0, top, 0.4, opts.scale);
  // shift x so the canvas starts at left-0.5
  double x0 = left - 0.5;
  auto sx = [&](double x) { return x - x0; };
  canvas.line(sx(left - 0.5), 0, sx(right + 0.5), 0, "axis");    // real axis
  canvas.line(sx(0), 0, sx(0), top, "axis");                     // imaginary
  canvas.line(sx(left), 0, sx(left), top, "edge");               // strip
  canvas.line(sx(right), 0, sx(right), top, "edge");
  // unit arcs bounding the excluded disks: |z+1|=1 from -2 to omega,
  // |z|=1 from omega to 1, omega = (-1+sqrt(3) i)/2
  canvas.arc(sx(-1), 1.0, M_PI, M_PI / 3, "edge");
  canvas.arc(sx(0), 1.0, 2 * M_PI / 3, 0, "edge");
  // free side on the real axis
  canvas.line(sx(1), 0, sx(right), 0, "free");
  // ticks at -2, -1, 0, 1 and the right edge
  for (double t : {-2.0, -1.0, 0.0, 1.0})
    canvas.line(sx(t), -0.05, sx(t), 0.05, "edge");
  canvas.line(sx(right), -0.05, sx(right), 0.05, "edge");
  return canvas.finish(opts.stroke_width);
}

}  // namespace ladder
