#include "curveinv/newton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "curveinv/error.hpp"

namespace curveinv {
namespace {

std::int64_t cross(Exponent o, Exponent a, Exponent b) {
  return static_cast<std::int64_t>(a.i - o.i) * (b.j - o.j) -
         static_cast<std::int64_t>(a.j - o.j) * (b.i - o.i);
}

void require_convenient(const NewtonDiagram& d, const char* where) {
  if (!d.is_convenient()) throw Error(ErrorKind::NotConvenient, std::string(where) + ": diagram does not touch both axes");
}

}  // namespace

std::int64_t Face::lattice_length() const { return std::gcd(end.i - start.i, start.j - end.j); }

NewtonDiagram NewtonDiagram::from_vertices(std::vector<Exponent> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidArgument, "diagram needs at least one vertex");
  for (const auto& v : vertices)
    if (v.i < 0 || v.j < 0) throw Error(ErrorKind::InvalidArgument, "vertex outside the quadrant");
  for (std::size_t k = 1; k < vertices.size(); ++k)
    if (vertices[k].i <= vertices[k - 1].i || vertices[k].j >= vertices[k - 1].j)
      throw Error(ErrorKind::InvalidArgument, "vertices must have increasing i and decreasing j");
  for (std::size_t k = 2; k < vertices.size(); ++k)
    if (cross(vertices[k - 2], vertices[k - 1], vertices[k]) <= 0)
      throw Error(ErrorKind::InvalidArgument, "vertex chain is not strictly convex");
  return NewtonDiagram(std::move(vertices));
}

bool NewtonDiagram::is_convenient() const { return vertices_.front().i == 0 && vertices_.back().j == 0; }

std::int64_t NewtonDiagram::x_intercept() const {
  require_convenient(*this, "x_intercept");
  return vertices_.back().i;
}

std::int64_t NewtonDiagram::y_intercept() const {
  require_convenient(*this, "y_intercept");
  return vertices_.front().j;
}

std::vector<Face> NewtonDiagram::edges() const {
  std::vector<Face> out;
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    const Exponent s = vertices_[k - 1], e = vertices_[k];
    out.push_back({s, e, primitive(Vec2{s.j - e.j, e.i - s.i})});
  }
  return out;
}

bool NewtonDiagram::contains(Exponent p) const {
  if (p.i < vertices_.front().i || p.j < vertices_.back().j) return false;
  for (const auto& f : edges())
    if (dot(p, f.normal) < dot(f.start, f.normal)) return false;
  return true;
}

NewtonDiagram newton_diagram(const BivariatePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "newton_diagram of 0");
  if (!is_convenient(f)) throw Error(ErrorKind::NotConvenient, "newton_diagram: " + f.to_string());
  std::map<int, int> lowest;  // i -> min j
  for (const auto& e : f.support()) {
    auto [it, inserted] = lowest.try_emplace(e.i, e.j);
    if (!inserted) it->second = std::min(it->second, e.j);
  }
  int a = std::numeric_limits<int>::max();
  for (const auto& [i, j] : lowest)
    if (j == 0) a = std::min(a, i);

  std::vector<Exponent> hull;
  for (const auto& [i, j] : lowest) {
    if (i > a) break;
    const Exponent p{i, j};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // Drop a leading non-decreasing run; cannot happen for a convenient input
  // because (0, b) has the largest j among hull points, but keep the chain
  // honest.
  std::vector<Exponent> chain;
  for (const auto& p : hull) {
    if (!chain.empty() && p.j >= chain.back().j) continue;
    chain.push_back(p);
  }
  return NewtonDiagram::from_vertices(std::move(chain));
}

std::int64_t support_function(const NewtonDiagram& diagram, Vec2 xi) {
  if (xi.x1 < 0 || xi.x2 < 0 || (xi.x1 == 0 && xi.x2 == 0))
    throw Error(ErrorKind::InvalidArgument, "support function needs a nonzero quadrant vector");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& v : diagram.vertices()) best = std::min(best, dot(v, xi));
  return best;
}

namespace {

std::int64_t twice_area(const NewtonDiagram& d) {
  std::int64_t twice = 0;
  const auto& v = d.vertices();
  for (std::size_t k = 1; k < v.size(); ++k)
    twice += static_cast<std::int64_t>(v[k].i - v[k - 1].i) * (v[k - 1].j + v[k].j);
  return twice;
}

}  // namespace

DiagramInvariants diagram_invariants(const NewtonDiagram& diagram) {
  require_convenient(diagram, "diagram_invariants");
  DiagramInvariants inv;
  const std::int64_t twice = twice_area(diagram);
  inv.area = Rational(static_cast<long>(twice)) / 2;
  inv.a = diagram.x_intercept();
  inv.b = diagram.y_intercept();
  inv.mu = twice - inv.a - inv.b + 1;
  inv.r = 0;
  for (const auto& f : diagram.edges()) inv.r += f.lattice_length();
  inv.delta = Rational(static_cast<long>(inv.mu + inv.r - 1)) / 2;
  return inv;
}

MinkowskiMixed minkowski_mixed(const NewtonDiagram& d1, const NewtonDiagram& d2) {
  require_convenient(d1, "minkowski_mixed");
  require_convenient(d2, "minkowski_mixed");
  struct Step {
    std::int64_t di, dj;  // dj < 0
  };
  auto steps = [](const NewtonDiagram& d) {
    std::vector<Step> s;
    const auto& v = d.vertices();
    for (std::size_t k = 1; k < v.size(); ++k) s.push_back({v[k].i - v[k - 1].i, v[k].j - v[k - 1].j});
    return s;
  };
  const auto s1 = steps(d1), s2 = steps(d2);
  // Steeper edges first: dj_a / di_a < dj_b / di_b.
  auto steeper = [](const Step& a, const Step& b) { return a.dj * b.di < b.dj * a.di; };
  std::vector<Step> merged;
  std::merge(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(merged), steeper);

  std::vector<Exponent> verts{{0, d1.vertices().front().j + d2.vertices().front().j}};
  std::vector<Step> combined;
  for (const auto& st : merged) {
    if (!combined.empty() && combined.back().dj * st.di == st.dj * combined.back().di) {
      combined.back().di += st.di;
      combined.back().dj += st.dj;
    } else {
      combined.push_back(st);
    }
  }
  for (const auto& st : combined)
    verts.push_back({verts.back().i + static_cast<int>(st.di), verts.back().j + static_cast<int>(st.dj)});

  MinkowskiMixed out{NewtonDiagram::from_vertices(std::move(verts)), 0};
  out.mixed = Rational(static_cast<long>(twice_area(out.sum) - twice_area(d1) - twice_area(d2))) / 2;
  return out;
}

std::vector<std::pair<Face, BivariatePoly>> face_polynomials(const BivariatePoly& f) {
  const NewtonDiagram d = newton_diagram(f);
  std::vector<std::pair<Face, BivariatePoly>> out;
  for (const auto& face : d.edges()) {
    const std::int64_t level = dot(face.start, face.normal);
    out.emplace_back(face, f.filtered([&](const Exponent& e) { return dot(e, face.normal) == level; }));
  }
  return out;
}

UniPoly face_univariate(const Face& face, const BivariatePoly& face_poly) {
  const std::int64_t g = face.lattice_length();
  const int p = static_cast<int>((face.end.i - face.start.i) / g);
  const int q = static_cast<int>((face.start.j - face.end.j) / g);
  std::vector<Rational> u(static_cast<std::size_t>(g) + 1);
  for (std::int64_t k = 0; k <= g; ++k)
    u[static_cast<std::size_t>(g - k)] =
        face_poly.coeff(face.start.i + static_cast<int>(k) * p, face.start.j - static_cast<int>(k) * q);
  return UniPoly(std::move(u));
}

bool nondegenerate(const BivariatePoly& f) {
  for (const auto& [face, fp] : face_polynomials(f))
    if (!is_squarefree(face_univariate(face, fp))) return false;
  return true;
}

bool nondegenerate_pair(const BivariatePoly& f, const BivariatePoly& g) {
  if (!nondegenerate(f) || !nondegenerate(g)) return false;
  const auto ff = face_polynomials(f);
  const auto gf = face_polynomials(g);
  for (const auto& [fface, fpoly] : ff) {
    for (const auto& [gface, gpoly] : gf) {
      if (fface.normal != gface.normal) continue;
      if (gcd(face_univariate(fface, fpoly), face_univariate(gface, gpoly)).degree() > 0) return false;
    }
  }
  return true;
}

NewtonDiagram thickened_diagram(const NewtonDiagram& diagram, const Fan& fan) {
  require_convenient(diagram, "thickened_diagram");
  const auto& rays = fan.rays();
  std::vector<std::int64_t> level;
  for (const auto& r : rays) level.push_back(support_function(diagram, r));

  std::vector<Exponent> pts;
  for (std::size_t k = 0; k + 1 < rays.size(); ++k) {
    const Vec2 a = rays[k], b = rays[k + 1];
    // Solve <p, a> = level[k], <p, b> = level[k+1]; det(a, b) = 1.
    const std::int64_t pi = level[k] * b.x2 - level[k + 1] * a.x2;
    const std::int64_t pj = level[k + 1] * a.x1 - level[k] * b.x1;
    const Exponent p{static_cast<int>(pi), static_cast<int>(pj)};
    if (!pts.empty() && pts.back() == p) continue;
    pts.push_back(p);
  }
  std::vector<Exponent> chain;
  for (const auto& p : pts) {
    while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
    chain.push_back(p);
  }
  NewtonDiagram out = NewtonDiagram::from_vertices(std::move(chain));
  for (std::size_t k = 0; k < rays.size(); ++k)
    if (support_function(out, rays[k]) != level[k])
      throw Error(ErrorKind::Internal, "thickened diagram lost a supporting line");
  return out;
}

}  // namespace curveinv
