#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ladder/lambda.hpp"

namespace ladder {

struct EdgeRef {
  int hexagon = 0;
  int edge = 0;  // 0..5, cyclic

  friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
    return a.hexagon == b.hexagon && a.edge == b.edge;
  }
};

// Combinatorial model of the sheared picture: the staircase cut along the
// antidiagonal segments (c_{n+1}, c_n)--(c_n, c_{n+1}) falls into
// semi-regular hexagons. Hexagon 0 degenerates to a triangle (edge lengths
// 1 and 0 alternating); hexagon n >= 1 alternates (lambda^n, lambda^{n-1}).
// Edge slots, cyclically: 0 bottom, 1 right wall, 2 upper cut, 3 top,
// 4 left wall, 5 lower cut. Gluings pair consecutive hexagons:
//   (n,0)-(n+1,3)   (n,4)-(n+1,1)   (n,2)-(n+1,5)
// Degenerate zero-length slots of hexagon 0 and the truncation frontier
// stay unglued.
class HexagonChart {
 public:
  HexagonChart(const LadderParams& params, int depth);

  const LadderParams& params() const { return params_; }
  int hexagon_count() const { return static_cast<int>(glue_.size()); }

  QuadExt edge_length(const EdgeRef& e) const;
  std::optional<EdgeRef> glued_to(const EdgeRef& e) const;

  // Test hook: overwrite one gluing slot (does not touch the partner).
  void set_gluing(const EdgeRef& e, std::optional<EdgeRef> partner);

 private:
  void check_ref(const EdgeRef& e) const;

  LadderParams params_;
  std::vector<std::array<std::optional<EdgeRef>, 6>> glue_;
};

// True iff rotating every hexagon by 2*pi/3 (cyclic edge shift by 2)
// commutes with the gluing involution on all edges whose image is glued,
// and preserves edge lengths. This is the combinatorial witness for the
// order-3 elliptic symmetry.
bool check_rotation_symmetry(const HexagonChart& chart);

}  // namespace ladder
