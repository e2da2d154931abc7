#include "anth/solids.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace anth {

namespace {

using Point = std::array<QuadSurd, 3>;

QuadSurd golden() { return QuadSurd(Rational(1, 2), Rational(1, 2), 5); }

/// All cyclic permutations of (0, +-s, +-t).
void add_cyclic(std::vector<Point>& out, const QuadSurd& s, const QuadSurd& t) {
  for (int sy : {-1, 1}) {
    for (int sz : {-1, 1}) {
      const Point base = {QuadSurd(0), QuadSurd(sy) * s, QuadSurd(sz) * t};
      for (int r = 0; r < 3; ++r) out.push_back({base[r % 3], base[(r + 1) % 3], base[(r + 2) % 3]});
    }
  }
}

QuadSurd dist_sq(const Point& a, const Point& b) {
  QuadSurd d;
  for (int i = 0; i < 3; ++i) {
    const QuadSurd diff = a[i] - b[i];
    d += diff * diff;
  }
  return d;
}

/// Shortest nonzero distance squared over longest distance squared.
QuadSurd edge_over_diameter(const std::vector<Point>& vertices) {
  std::optional<QuadSurd> edge;
  std::optional<QuadSurd> diameter;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const QuadSurd d = dist_sq(vertices[i], vertices[j]);
      if (d.is_zero()) throw std::logic_error("duplicate vertex");
      if (!edge || d < *edge) edge = d;
      if (!diameter || d > *diameter) diameter = d;
    }
  }
  return *edge / *diameter;
}

}  // namespace

QuadSurd icosahedron_side_sq_over_diameter_sq() {
  std::vector<Point> v;
  add_cyclic(v, QuadSurd(1), golden());
  return edge_over_diameter(v);
}

QuadSurd dodecahedron_side_sq_over_diameter_sq() {
  std::vector<Point> v;
  for (int x : {-1, 1}) {
    for (int y : {-1, 1}) {
      for (int z : {-1, 1}) v.push_back({QuadSurd(x), QuadSurd(y), QuadSurd(z)});
    }
  }
  add_cyclic(v, golden().reciprocal(), golden());
  return edge_over_diameter(v);
}

SolidReport solid_side_checks() {
  SolidReport report;

  report.icosahedron_side_sq = icosahedron_side_sq_over_diameter_sq();
  // The side squared is an apotome area; its side is the line sought.
  const TwoTermLine gamma = two_term_from_value(SurdSum(report.icosahedron_side_sq));
  report.icosahedron_side = alogos_from_apotome(gamma);
  report.icosahedron_kind = classify_alogos(report.icosahedron_side);
  report.icosahedron_minor = report.icosahedron_kind.tag == KindTag::minor &&
                             report.icosahedron_side.square() == SurdSum(report.icosahedron_side_sq);

  const SurdSum s15 = SurdSum::term(1, 15);
  const SurdSum s3 = SurdSum::term(1, 3);
  report.dodecahedron_quoted_side = two_term_from_value((s15 - s3) / SurdSum(3));
  report.dodecahedron_side = two_term_from_value((s15 - s3) / SurdSum(6));
  const SurdSum side = report.dodecahedron_side.value();
  const bool coordinates_agree = side * side == SurdSum(dodecahedron_side_sq_over_diameter_sq());
  report.dodecahedron_order = classify_order(report.dodecahedron_side);
  report.dodecahedron_apotome = coordinates_agree && report.dodecahedron_side.is_apotome() &&
                                report.dodecahedron_quoted_side.is_apotome() &&
                                classify_order(report.dodecahedron_quoted_side) == report.dodecahedron_order;

  // Diameter 2 doubles both sides.
  const TwoTermLine doubled{report.dodecahedron_side.zeta.scaled(2), report.dodecahedron_side.eta.scaled(2),
                            Sign::minus};
  report.scaling_invariant = invariance_check(report.icosahedron_side, 2) &&
                             classify_order(doubled) == report.dodecahedron_order;
  return report;
}

}  // namespace anth
