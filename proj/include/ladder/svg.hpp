#pragma once

#include <string>

#include "ladder/cylinders.hpp"
#include "ladder/fuchsian.hpp"

namespace ladder {

// Deterministic output: fixed header, fixed element order, %.6f coordinates,
// no timestamps; identical config yields byte-identical files.
struct SvgOptions {
  double stroke_width = 0.015;
  double scale = 120.0;  // surface units to pixels
};

// Staircase polygon with corner dots.
std::string render_surface(const LadderParams& params, int depth,
                           const SvgOptions& opts = {});

// Staircase with the horizontal cylinders shaded in alternating tones.
std::string render_cylinders(const LadderParams& params, int depth,
                             const SvgOptions& opts = {});

// Length-1 segment bundle of the given slope from the reflex corners and
// their mirrors, plus the accumulation point.
std::string render_segments(const LadderParams& params, int depth,
                            const Rational& slope, int count,
                            const SvgOptions& opts = {});

// Hyperbolic fundamental domain: strip edges, the two unit arcs, and the
// free side marked on the real axis.
std::string render_domain(const LadderParams& params,
                          const SvgOptions& opts = {});

}  // namespace ladder
