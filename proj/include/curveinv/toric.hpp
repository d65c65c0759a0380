#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curveinv/bivariate.hpp"
#include "curveinv/branch.hpp"
#include "curveinv/fan.hpp"
#include "curveinv/newton.hpp"

namespace curveinv {

// Monomial map x = u^a v^b, y = u^c v^d.
struct MonomialMap {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static MonomialMap chart(const SimpleCone& cone) { return {cone.xi.x1, cone.nu.x1, cone.xi.x2, cone.nu.x2}; }
  // Elementary blow-up chart (u, v) -> (uv, v).
  static MonomialMap blowup_first() { return {1, 1, 0, 1}; }
  // Elementary blow-up chart (u, v) -> (u, uv).
  static MonomialMap blowup_second() { return {1, 0, 1, 1}; }

  std::int64_t det() const { return a * d - b * c; }
  // (this o inner)(u, v) = this(inner(u, v)).
  MonomialMap compose(const MonomialMap& inner) const;
  // f o map, computed term by term: x^i y^j -> u^(ai+cj) v^(bi+dj).
  BivariatePoly pullback(const BivariatePoly& f) const;

  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

// f o phi_sigma = u^l_xi v^l_nu * residual, residual divisible by neither u nor v.
struct ProperTransform {
  std::size_t chart = 0;
  std::int64_t l_xi = 0;
  std::int64_t l_nu = 0;
  BivariatePoly residual;  // in chart coordinates (u, v)
};

ProperTransform proper_transform(const BivariatePoly& f, const SimpleCone& cone, std::size_t chart = 0);

// l(D, xi + nu) - l(D, xi) - l(D, nu): order of the proper transform at the
// chart origin.
std::int64_t chart_origin_order(const NewtonDiagram& diagram, const SimpleCone& cone);

enum class Axis { U, V };  // which chart coordinate vanishes at the point

// Identifies a point of the exceptional divisor. Every divisor point has a
// single canonical key: a point of the divisor component of interior ray
// xi_i is written in chart i (cone [xi_i, xi_(i+1)]) as u = 0, v = coordinate,
// except the point at v = infinity on the first component, which is the
// origin of chart 0 (axis V, coordinate 0).
struct PointKey {
  std::size_t chart = 0;
  Axis axis = Axis::U;
  Rational coordinate;
  friend bool operator==(const PointKey&, const PointKey&) = default;
  friend bool operator<(const PointKey& l, const PointKey& r) {
    if (l.chart != r.chart) return l.chart < r.chart;
    if (l.axis != r.axis) return l.axis < r.axis;
    return l.coordinate < r.coordinate;
  }
};

struct ExceptionalPoint {
  PointKey key;
  // Residual of the chart, translated so that the point is the origin.
  BivariatePoly localized;
};

// Zeros of the proper transform on the exceptional divisor, one entry per
// divisor point. Empty for the identity fan. Throws NotConvenient and
// IrrationalExceptionalPoint.
std::vector<ExceptionalPoint> exceptional_points(const BivariatePoly& f, const Fan& fan);

// Truncated series t^valuation * (c_0 + c_1 t + ...), coefficients known for
// indices below coefficients.size() (relative precision).
struct LaurentSeries {
  std::int64_t valuation = 0;
  std::vector<Rational> coefficients;
  // Highest absolute exponent with a known coefficient.
  std::int64_t known_through() const { return valuation + static_cast<std::int64_t>(coefficients.size()) - 1; }
};

struct TransportedBranch {
  std::size_t chart = 0;
  PointKey landing;
  LaurentSeries u;
  LaurentSeries v;
};

// Expresses a branch in the chart whose cone contains its order vector.
// Throws TruncationTooShort when y(t) has no known nonzero term.
TransportedBranch transport_branch(const BranchParam& gamma, const Fan& fan);

// u^p v^q as a truncated series (exponents may be negative).
LaurentSeries series_monomial(const LaurentSeries& u, std::int64_t p, const LaurentSeries& v, std::int64_t q);

}  // namespace curveinv
