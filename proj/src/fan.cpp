#include "curveinv/fan.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "curveinv/error.hpp"

namespace curveinv {

PrimitiveVector::PrimitiveVector(std::int64_t x1, std::int64_t x2) : v_{x1, x2} {
  if (x1 < 0 || x2 < 0 || (x1 == 0 && x2 == 0) || std::gcd(x1, x2) != 1)
    throw Error(ErrorKind::NonPrimitiveRay,
                "(" + std::to_string(x1) + "," + std::to_string(x2) + ") is not a primitive quadrant vector");
}

SimpleCone Fan::cone(std::size_t k) const {
  if (k >= cone_count()) throw Error(ErrorKind::IndexOutOfRange, "cone index " + std::to_string(k), k);
  return {rays_[k], rays_[k + 1]};
}

bool Fan::has_ray(Vec2 v) const { return std::find(rays_.begin(), rays_.end(), v) != rays_.end(); }

std::size_t Fan::cone_containing(Vec2 v) const {
  for (std::size_t k = 0; k < cone_count(); ++k)
    if (det(rays_[k], v) >= 0 && det(v, rays_[k + 1]) >= 0) return k;
  throw Error(ErrorKind::InvalidArgument, "vector outside the first quadrant");
}

Fan Fan::identity() { return Fan({{1, 0}, {0, 1}}); }
Fan Fan::blowup() { return Fan({{1, 0}, {1, 1}, {0, 1}}); }

Fan validate_fan(const std::vector<Vec2>& rays) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  raw.reserve(rays.size());
  for (auto r : rays) raw.emplace_back(r.x1, r.x2);
  return validate_fan(raw);
}

Fan validate_fan(const std::vector<std::pair<std::int64_t, std::int64_t>>& rays) {
  std::vector<Vec2> norm;
  norm.reserve(rays.size());
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const auto [a, b] = rays[k];
    if (a < 0 || b < 0 || (a == 0 && b == 0))
      throw Error(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(k) + " is zero or outside the quadrant", k);
    norm.push_back(primitive(Vec2{a, b}));
  }
  if (norm.size() < 2 || norm.front() != Vec2{1, 0} || norm.back() != Vec2{0, 1})
    throw Error(ErrorKind::BadBoundary, "fan must start at (1,0) and end at (0,1)");
  for (std::size_t i = 1; i < norm.size(); ++i)
    if (det(norm[i - 1], norm[i]) <= 0)
      throw Error(ErrorKind::BadOrder, "rays not in counterclockwise order at " + std::to_string(i), i);
  for (std::size_t i = 1; i < norm.size(); ++i) {
    const std::int64_t d = det(norm[i - 1], norm[i]);
    if (d != 1)
      throw Error(ErrorKind::NonUnimodularAdjacent,
                  "det(rays[" + std::to_string(i - 1) + "], rays[" + std::to_string(i) + "]) = " + std::to_string(d), i);
  }
  return Fan(std::move(norm));
}

Fan fan_from_normals(const std::vector<PrimitiveVector>& normals) {
  std::vector<Vec2> wanted;
  for (const auto& n : normals) wanted.push_back(n.vec());
  // Counterclockwise order, so every descent only touches cones that the
  // previous normals already refined.
  std::sort(wanted.begin(), wanted.end(), [](Vec2 a, Vec2 b) { return det(a, b) > 0; });
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  Fan fan = Fan::identity();
  for (const Vec2 w : wanted) {
    while (!fan.has_ray(w)) fan = subdivide(fan, fan.cone_containing(w));
  }
  return fan;
}

Fan subdivide(const Fan& fan, std::size_t cone_index) {
  if (cone_index >= fan.cone_count())
    throw Error(ErrorKind::IndexOutOfRange, "cone index " + std::to_string(cone_index), cone_index);
  std::vector<Vec2> rays = fan.rays();
  rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(cone_index) + 1, rays[cone_index] + rays[cone_index + 1]);
  return validate_fan(rays);
}

Contraction find_and_contract(const Fan& fan) {
  if (fan.cone_count() < 2) throw Error(ErrorKind::TooFewCones, "a single-cone fan cannot be contracted");
  const auto& r = fan.rays();
  for (std::size_t i = 1; i + 1 < r.size(); ++i) {
    if (r[i] == r[i - 1] + r[i + 1]) {
      std::vector<Vec2> rays = r;
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
      return {i, validate_fan(rays)};
    }
  }
  throw Error(ErrorKind::Internal, "no contractible ray in a valid fan");
}

std::vector<BlowupStep> blowup_decomposition(const Fan& fan) {
  std::vector<BlowupStep> steps;
  Fan current = fan;
  while (!current.is_identity()) {
    Contraction c = find_and_contract(current);
    const Vec2 removed = current.rays()[c.index];
    steps.push_back({c.contracted, c.index - 1, removed});
    current = std::move(c.contracted);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace curveinv
