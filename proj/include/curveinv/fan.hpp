#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "curveinv/lattice.hpp"

namespace curveinv {

// Primitive lattice vector of the closed first quadrant.
class PrimitiveVector {
 public:
  // Throws Error(NonPrimitiveRay) unless x1, x2 >= 0, not both zero and
  // gcd(x1, x2) = 1.
  PrimitiveVector(std::int64_t x1, std::int64_t x2);
  explicit PrimitiveVector(Vec2 v) : PrimitiveVector(v.x1, v.x2) {}

  std::int64_t x1() const { return v_.x1; }
  std::int64_t x2() const { return v_.x2; }
  Vec2 vec() const { return v_; }

  friend auto operator<=>(const PrimitiveVector&, const PrimitiveVector&) = default;

 private:
  Vec2 v_;
};

// Cone spanned by xi and nu with det(xi, nu) = 1.
struct SimpleCone {
  Vec2 xi;
  Vec2 nu;
  friend auto operator<=>(const SimpleCone&, const SimpleCone&) = default;
};

// Regular fan of the first quadrant, given by its rays in counterclockwise
// order from (1,0) to (0,1) with det(rays[i-1], rays[i]) = 1. Cone k is
// [rays[k], rays[k+1]].
class Fan {
 public:
  const std::vector<Vec2>& rays() const { return rays_; }
  std::size_t cone_count() const { return rays_.size() - 1; }
  SimpleCone cone(std::size_t k) const;
  bool is_identity() const { return rays_.size() == 2; }
  bool has_ray(Vec2 v) const;
  // Index of the cone containing v (lowest index when v is a shared ray).
  // v must be a nonzero vector of the closed first quadrant.
  std::size_t cone_containing(Vec2 v) const;

  static Fan identity();
  static Fan blowup();

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  friend Fan validate_fan(const std::vector<std::pair<std::int64_t, std::int64_t>>& rays);
  explicit Fan(std::vector<Vec2> rays) : rays_(std::move(rays)) {}
  std::vector<Vec2> rays_;
};

// Normalizes rays to primitive form and checks every fan invariant.
// Errors: NonPrimitiveRay (zero or outside the quadrant), BadBoundary,
// BadOrder, NonUnimodularAdjacent (index of the later ray of the pair).
Fan validate_fan(const std::vector<std::pair<std::int64_t, std::int64_t>>& rays);
Fan validate_fan(const std::vector<Vec2>& rays);

// A valid fan whose rays include every requested normal. Built by
// Stern-Brocot descent from the identity fan: the cone containing a missing
// normal is subdivided by the sum of its generators until the normal is a ray.
Fan fan_from_normals(const std::vector<PrimitiveVector>& normals);

// Inserts rays[k] + rays[k+1] into cone k.
Fan subdivide(const Fan& fan, std::size_t cone_index);

struct Contraction {
  std::size_t index;
  Fan contracted;
};

// Smallest i with rays[i] = rays[i-1] + rays[i+1], and the fan without it.
Contraction find_and_contract(const Fan& fan);

struct BlowupStep {
  Fan coarse;               // fan before the step
  std::size_t cone_index;   // cone of `coarse` that is subdivided
  Vec2 inserted;            // new ray, the sum of that cone's generators
};

// Sequence of elementary subdivisions taking the identity fan to `fan`.
std::vector<BlowupStep> blowup_decomposition(const Fan& fan);

}  // namespace curveinv
