#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace curveinv {

// Lattice point / exponent pair (i, j) standing for x^i y^j.
struct Exponent {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const Exponent&, const Exponent&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Exponent& e) {
    return os << '(' << e.i << ',' << e.j << ')';
  }
};

// Plain integer vector in Z^2; fan rays and edge normals are built on it.
struct Vec2 {
  std::int64_t x1 = 0;
  std::int64_t x2 = 0;
  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.x1 << ',' << v.x2 << ')';
  }
};

constexpr std::int64_t det(Vec2 a, Vec2 b) { return a.x1 * b.x2 - a.x2 * b.x1; }

constexpr std::int64_t dot(Exponent p, Vec2 v) {
  return static_cast<std::int64_t>(p.i) * v.x1 + static_cast<std::int64_t>(p.j) * v.x2;
}

inline Vec2 primitive(Vec2 v) {
  const std::int64_t g = std::gcd(v.x1, v.x2);
  if (g == 0) return v;
  return {v.x1 / g, v.x2 / g};
}

}  // namespace curveinv
