#include "curveinv/toric.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "curveinv/error.hpp"

namespace curveinv {

MonomialMap MonomialMap::compose(const MonomialMap& in) const {
  return {a * in.a + b * in.c, a * in.b + b * in.d, c * in.a + d * in.c, c * in.b + d * in.d};
}

BivariatePoly MonomialMap::pullback(const BivariatePoly& f) const {
  BivariatePoly::TermMap out;
  for (const auto& [e, coef] : f.terms()) {
    const std::int64_t pu = a * e.i + c * e.j;
    const std::int64_t pv = b * e.i + d * e.j;
    if (pu < 0 || pv < 0) throw Error(ErrorKind::InvalidArgument, "monomial map produced a negative exponent");
    // Unimodular maps are injective on exponents, so no two terms collide;
    // accumulate anyway for non-unimodular test maps.
    out[Exponent{static_cast<int>(pu), static_cast<int>(pv)}] += coef;
  }
  return BivariatePoly(std::move(out));
}

ProperTransform proper_transform(const BivariatePoly& f, const SimpleCone& cone, std::size_t chart) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "proper transform of 0");
  const BivariatePoly raw = MonomialMap::chart(cone).pullback(f);
  int lu = std::numeric_limits<int>::max(), lv = std::numeric_limits<int>::max();
  for (const auto& kv : raw.terms()) {
    lu = std::min(lu, kv.first.i);
    lv = std::min(lv, kv.first.j);
  }
  BivariatePoly::TermMap shifted;
  for (const auto& [e, c] : raw.terms()) shifted.emplace(Exponent{e.i - lu, e.j - lv}, c);
  return {chart, lu, lv, BivariatePoly(std::move(shifted))};
}

std::int64_t chart_origin_order(const NewtonDiagram& diagram, const SimpleCone& cone) {
  if (!diagram.is_convenient()) throw Error(ErrorKind::NotConvenient, "chart_origin_order");
  return support_function(diagram, cone.xi + cone.nu) - support_function(diagram, cone.xi) -
         support_function(diagram, cone.nu);
}

std::vector<ExceptionalPoint> exceptional_points(const BivariatePoly& f, const Fan& fan) {
  if (f.is_zero() || !is_convenient(f)) throw Error(ErrorKind::NotConvenient, "exceptional_points: " + f.to_string());
  std::vector<ExceptionalPoint> out;
  if (fan.is_identity()) return out;

  const ProperTransform first = proper_transform(f, fan.cone(0), 0);
  if (first.residual.constant_term() == 0) out.push_back({{0, Axis::V, 0}, first.residual});

  for (std::size_t i = 1; i < fan.cone_count(); ++i) {
    const ProperTransform pt = proper_transform(f, fan.cone(i), i);
    const UniPoly on_divisor = pt.residual.at_x_zero();  // residual(0, v)
    const RationalRoots roots = rational_roots(on_divisor);
    if (!roots.complete) {
      UniPoly rest = on_divisor;
      for (const auto& r : roots.roots)
        for (int k = 0; k < r.multiplicity; ++k) rest = divmod(rest, UniPoly::linear_factor(r.root)).first;
      throw Error(ErrorKind::IrrationalExceptionalPoint,
                  "chart " + std::to_string(i) + ": factor " + rest.to_string('v') + " has no rational roots");
    }
    for (const auto& r : roots.roots) out.push_back({{i, Axis::U, r.root}, pt.residual.translated(0, r.root)});
  }
  return out;
}

namespace {

using Coeffs = std::vector<Rational>;

Coeffs mul(const Coeffs& a, const Coeffs& b, std::size_t n) {
  Coeffs out(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Coeffs inverse(const Coeffs& a, std::size_t n) {
  Coeffs out(n);
  out[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * out[k - j];
    out[k] = -s * out[0];
  }
  return out;
}

Coeffs power(const Coeffs& unit, std::int64_t e, std::size_t n) {
  Coeffs base = e < 0 ? inverse(unit, n) : Coeffs(unit.begin(), unit.begin() + static_cast<std::ptrdiff_t>(n));
  Coeffs acc(n);
  acc[0] = 1;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) acc = mul(acc, base, n);
  return acc;
}

}  // namespace

LaurentSeries series_monomial(const LaurentSeries& u, std::int64_t p, const LaurentSeries& v, std::int64_t q) {
  const std::size_t n = std::min(u.coefficients.size(), v.coefficients.size());
  LaurentSeries out;
  out.valuation = p * u.valuation + q * v.valuation;
  out.coefficients = mul(power(u.coefficients, p, n), power(v.coefficients, q, n), n);
  return out;
}

TransportedBranch transport_branch(const BranchParam& gamma, const Fan& fan) {
  if (fan.is_identity()) throw Error(ErrorKind::InvalidArgument, "the identity fan has no exceptional divisor");
  const ExtInt oy = gamma.ord_y();
  if (oy.is_infinite()) throw Error(ErrorKind::TruncationTooShort, "y(t) has no known nonzero term");
  const Vec2 w{gamma.m(), oy.value()};

  std::size_t chart = fan.cone_count();
  const Vec2 dir = primitive(w);
  for (std::size_t i = 1; i < fan.cone_count(); ++i)
    if (fan.rays()[i] == dir) chart = i;
  if (chart == fan.cone_count()) chart = fan.cone_containing(w);
  const SimpleCone cone = fan.cone(chart);

  const auto ys = gamma.y_series();
  const std::size_t n = ys.size() - static_cast<std::size_t>(w.x2);
  LaurentSeries x{gamma.m(), Coeffs(n)};
  x.coefficients[0] = gamma.cx();
  LaurentSeries y{w.x2, Coeffs(ys.begin() + static_cast<std::ptrdiff_t>(w.x2), ys.end())};

  TransportedBranch tb;
  tb.chart = chart;
  // Inverse of x = u^xi1 v^nu1, y = u^xi2 v^nu2 (det 1).
  tb.u = series_monomial(x, cone.nu.x2, y, -cone.nu.x1);
  tb.v = series_monomial(x, -cone.xi.x2, y, cone.xi.x1);
  if (tb.u.valuation < 0 || tb.v.valuation < 0)
    throw Error(ErrorKind::Internal, "branch order vector outside its chart cone");

  if (tb.u.valuation > 0 && tb.v.valuation > 0) {
    tb.landing = chart == 0 ? PointKey{0, Axis::V, 0} : PointKey{chart, Axis::U, 0};
  } else if (tb.u.valuation > 0) {
    tb.landing = PointKey{chart, Axis::U, tb.v.coefficients[0]};
  } else {
    throw Error(ErrorKind::Internal, "branch does not reach the exceptional divisor");
  }
  return tb;
}

}  // namespace curveinv
