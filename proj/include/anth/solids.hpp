#ifndef ANTH_SOLIDS_HPP
#define ANTH_SOLIDS_HPP

#include <string>

#include "anth/quad_surd.hpp"
#include "anth/taxonomy.hpp"

namespace anth {

/// Squared edge over squared circumscribed diameter of a regular polyhedron,
/// computed from exact vertex coordinates in Q(sqrt(5)).
QuadSurd icosahedron_side_sq_over_diameter_sq();
QuadSurd dodecahedron_side_sq_over_diameter_sq();

struct SolidReport {
  // Icosahedron, diameter 1.
  QuadSurd icosahedron_side_sq;
  AlogosLine icosahedron_side;
  LineKind icosahedron_kind;
  // Dodecahedron: the quoted side (sqrt(15) - sqrt(3))/3 and the side for
  // diameter 1 from coordinates, (sqrt(15) - sqrt(3))/6.
  TwoTermLine dodecahedron_quoted_side;
  TwoTermLine dodecahedron_side;
  int dodecahedron_order = 0;
  bool icosahedron_minor = false;
  bool dodecahedron_apotome = false;
  bool scaling_invariant = false;

  bool all_passed() const { return icosahedron_minor && dodecahedron_apotome && scaling_invariant; }
};

SolidReport solid_side_checks();

}  // namespace anth

#endif  // ANTH_SOLIDS_HPP
