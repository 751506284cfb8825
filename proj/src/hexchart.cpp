#include "ladder/hexchart.hpp"

namespace ladder {

HexagonChart::HexagonChart(const LadderParams& params, int depth)
    : params_(params) {
  if (depth < 2) throw invalid_parameters("depth must be >= 2");
  glue_.assign(static_cast<size_t>(depth) + 1, {});
  auto link = [&](EdgeRef a, EdgeRef b) {
    glue_[static_cast<size_t>(a.hexagon)][static_cast<size_t>(a.edge)] = b;
    glue_[static_cast<size_t>(b.hexagon)][static_cast<size_t>(b.edge)] = a;
  };
  for (int n = 0; n < depth; ++n) {
    link({n, 0}, {n + 1, 3});
    link({n, 4}, {n + 1, 1});
    link({n, 2}, {n + 1, 5});
  }
  // Glued edges must pair equal lengths and form a fixed-point-free
  // involution; frontier and degenerate slots stay unglued.
  for (int n = 0; n <= depth; ++n) {
    for (int i = 0; i < 6; ++i) {
      EdgeRef e{n, i};
      auto p = glued_to(e);
      if (!p) continue;
      if (*p == e) throw std::logic_error("gluing fixes an edge");
      if (!(edge_length(e) == edge_length(*p)))
        throw std::logic_error("glued edges differ in length");
      if (!(glued_to(*p) == std::optional<EdgeRef>(e)))
        throw std::logic_error("gluing is not an involution");
    }
  }
}

void HexagonChart::check_ref(const EdgeRef& e) const {
  if (e.hexagon < 0 || e.hexagon >= hexagon_count() || e.edge < 0 ||
      e.edge >= 6)
    throw invalid_parameters("edge reference out of range");
}

QuadExt HexagonChart::edge_length(const EdgeRef& e) const {
  check_ref(e);
  bool even = (e.edge % 2) == 0;
  if (e.hexagon == 0) return even ? QuadExt(1) : QuadExt(0);
  return even ? params_.lambda.pow(e.hexagon)
              : params_.lambda.pow(e.hexagon - 1);
}

std::optional<EdgeRef> HexagonChart::glued_to(const EdgeRef& e) const {
  check_ref(e);
  return glue_[static_cast<size_t>(e.hexagon)][static_cast<size_t>(e.edge)];
}

void HexagonChart::set_gluing(const EdgeRef& e, std::optional<EdgeRef> p) {
  check_ref(e);
  if (p) check_ref(*p);
  glue_[static_cast<size_t>(e.hexagon)][static_cast<size_t>(e.edge)] = p;
}

bool check_rotation_symmetry(const HexagonChart& chart) {
  auto rot = [](const EdgeRef& e) {
    return EdgeRef{e.hexagon, (e.edge + 2) % 6};
  };
  for (int n = 0; n < chart.hexagon_count(); ++n) {
    for (int i = 0; i < 6; ++i) {
      EdgeRef e{n, i};
      if (!(chart.edge_length(e) == chart.edge_length(rot(e)))) return false;
      auto p = chart.glued_to(e);
      auto q = chart.glued_to(rot(e));
      if (!p && !q) continue;  // frontier or degenerate slots
      if (!p || !q) return false;
      if (!(rot(*p) == *q)) return false;
    }
  }
  return true;
}

}  // namespace ladder
