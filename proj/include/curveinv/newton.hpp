#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "curveinv/bivariate.hpp"
#include "curveinv/fan.hpp"
#include "curveinv/lattice.hpp"
#include "curveinv/rational.hpp"
#include "curveinv/unipoly.hpp"

namespace curveinv {

// Compact edge of a Newton polygon with its primitive inner normal.
struct Face {
  Exponent start;  // upper-left endpoint
  Exponent end;    // lower-right endpoint
  Vec2 normal;     // <start, normal> = <end, normal> = l(diagram, normal)
  // Lattice length, i.e. number of lattice segments on the edge.
  std::int64_t lattice_length() const;
  friend bool operator==(const Face&, const Face&) = default;
};

// Newton diagram: convex closure of the union of (v + R_+^2) over its
// vertices. Vertices are sorted by strictly increasing i and strictly
// decreasing j, with strictly increasing edge slopes.
class NewtonDiagram {
 public:
  // Validates the vertex chain (order and strict convexity).
  static NewtonDiagram from_vertices(std::vector<Exponent> vertices);
  // The full quadrant R_+^2, i.e. the diagram of a unit.
  static NewtonDiagram quadrant() { return from_vertices({{0, 0}}); }

  const std::vector<Exponent>& vertices() const { return vertices_; }
  // Touches both axes: a vertex (0, b) and a vertex (a, 0) exist.
  bool is_convenient() const;
  // a: the polygon meets the x-axis at (a, 0). Requires convenience.
  std::int64_t x_intercept() const;
  // b: the polygon meets the y-axis at (0, b). Requires convenience.
  std::int64_t y_intercept() const;
  std::vector<Face> edges() const;
  bool contains(Exponent p) const;

  friend bool operator==(const NewtonDiagram&, const NewtonDiagram&) = default;

 private:
  explicit NewtonDiagram(std::vector<Exponent> v) : vertices_(std::move(v)) {}
  std::vector<Exponent> vertices_;
};

struct DiagramInvariants {
  Rational area;  // P = area of R_+^2 minus the diagram
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t mu = 0;
  std::int64_t r = 0;
  Rational delta;
};

NewtonDiagram newton_diagram(const BivariatePoly& f);

// l(diagram, xi) = min over vertices of <v, xi>.
std::int64_t support_function(const NewtonDiagram& diagram, Vec2 xi);

// P, a, b and mu = 2P - a - b + 1, r = sum of edge lattice lengths,
// delta = (mu + r - 1) / 2. Throws NotConvenient.
DiagramInvariants diagram_invariants(const NewtonDiagram& diagram);

struct MinkowskiMixed {
  NewtonDiagram sum;
  Rational mixed;  // P(sum) - P(d1) - P(d2)
};

MinkowskiMixed minkowski_mixed(const NewtonDiagram& d1, const NewtonDiagram& d2);

// The sub-polynomial of f supported on each compact edge of its polygon.
std::vector<std::pair<Face, BivariatePoly>> face_polynomials(const BivariatePoly& f);

// For an edge from (i0, j0) to (i1, j1) with lattice length g and primitive
// step (p, -q), the face polynomial equals x^i0 y^j1 x^(pg) U(y^q / x^p)
// for a univariate U of degree g with U(0) != 0. Returns U.
UniPoly face_univariate(const Face& face, const BivariatePoly& face_poly);

// Kouchnirenko nondegeneracy: every face polynomial is free of critical
// points in the torus, i.e. every face univariate is squarefree.
bool nondegenerate(const BivariatePoly& f);

// Pair condition for equality in the intersection bound: f, g are
// nondegenerate and for every common edge normal their face univariates
// have no common root.
bool nondegenerate_pair(const BivariatePoly& f, const BivariatePoly& g);

// Intersection over the fan rays of the half-planes <p, xi> >= l(diagram, xi).
NewtonDiagram thickened_diagram(const NewtonDiagram& diagram, const Fan& fan);

}  // namespace curveinv
