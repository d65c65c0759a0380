#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <random>

#include "curveinv/error.hpp"
#include "curveinv/fan.hpp"
#include "curveinv/harness.hpp"
#include "curveinv/newton.hpp"
#include "test_util.hpp"

using namespace curveinv;
using testutil::P;
using testutil::Q;

namespace {

NewtonDiagram D(std::vector<Exponent> v) { return NewtonDiagram::from_vertices(std::move(v)); }

// Lattice-count oracle working from the raw support only. A point lies in
// the diagram iff it satisfies <p, xi> >= min_support <s, xi> for every
// primitive xi with coordinates up to `bound` (which covers all edge normals
// when the support fits in a bound x bound box). Pick's theorem on the
// complement polygon then gives 2P = 2I + B - 2.
struct BruteForce {
  std::int64_t twice_area = 0, a = 0, b = 0, r = 0;
};

BruteForce brute_force(const BivariatePoly& f, int bound) {
  const auto support = f.support();
  std::vector<std::pair<Vec2, std::int64_t>> halfplanes;
  for (int x1 = 0; x1 <= bound; ++x1)
    for (int x2 = 0; x2 <= bound; ++x2) {
      if (std::gcd(x1, x2) != 1) continue;
      std::int64_t level = std::numeric_limits<std::int64_t>::max();
      for (const auto& s : support) level = std::min(level, dot(s, Vec2{x1, x2}));
      halfplanes.push_back({Vec2{x1, x2}, level});
    }
  auto inside = [&](Exponent p) {
    for (const auto& [xi, l] : halfplanes)
      if (dot(p, xi) < l) return false;
    return true;
  };
  auto on_chain = [&](Exponent p) {
    if (!inside(p)) return false;
    for (const auto& [xi, l] : halfplanes)
      if (xi.x1 > 0 && xi.x2 > 0 && dot(p, xi) == l) return true;
    return false;
  };
  BruteForce out;
  for (const auto& s : support) {
    if (s.j == 0) out.a = out.a == 0 ? s.i : std::min<std::int64_t>(out.a, s.i);
    if (s.i == 0) out.b = out.b == 0 ? s.j : std::min<std::int64_t>(out.b, s.j);
  }
  std::int64_t interior = 0, chain = 0;
  for (int i = 1; i <= out.a; ++i)
    for (int j = 1; j <= out.b; ++j) {
      if (on_chain({i, j})) ++chain;
      else if (!inside({i, j})) ++interior;
    }
  const std::int64_t boundary = out.a + out.b + 1 + chain;
  out.twice_area = 2 * interior + boundary - 2;
  out.r = chain + 1;  // chain points off the axes plus (0,b) and (a,0), minus 1
  return out;
}

}  // namespace

TEST(NewtonDiagram, Examples) {
  EXPECT_EQ(newton_diagram(P({{0, 2, 1}, {3, 0, -1}})).vertices(), (std::vector<Exponent>{{0, 2}, {3, 0}}));
  EXPECT_EQ(newton_diagram(P({{3, 0, 1}, {1, 1, 1}, {0, 2, 1}})).vertices(),
            (std::vector<Exponent>{{0, 2}, {1, 1}, {3, 0}}));
  EXPECT_EQ(newton_diagram(P({{1, 0, 1}, {0, 1, 1}, {1, 1, 1}})).vertices(), (std::vector<Exponent>{{0, 1}, {1, 0}}));
}

TEST(NewtonDiagram, Errors) {
  try {
    newton_diagram(P({{1, 1, 1}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotConvenient);
  }
  EXPECT_THROW(D({{0, 2}, {1, 1}, {2, 0}}), Error);  // collinear middle vertex
  EXPECT_THROW(D({{0, 2}, {3, 3}}), Error);
}

TEST(NewtonDiagram, SupportPointsLieInside) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const BivariatePoly f = testutil::random_convenient(rng, 9, 6);
    const NewtonDiagram d = newton_diagram(f);
    for (const auto& s : f.support()) EXPECT_TRUE(d.contains(s));
    for (const auto& v : d.vertices()) EXPECT_NE(f.coeff(v.i, v.j), 0);
  }
}

TEST(SupportFunction, Examples) {
  const NewtonDiagram cusp = D({{0, 2}, {3, 0}});
  EXPECT_EQ(support_function(cusp, {1, 1}), 2);
  EXPECT_EQ(support_function(cusp, {1, 0}), 0);
  EXPECT_EQ(support_function(cusp, {2, 3}), 6);
}

TEST(DiagramInvariants, Examples) {
  const auto cusp = diagram_invariants(D({{0, 2}, {3, 0}}));
  EXPECT_EQ(cusp.area, Q(3));
  EXPECT_EQ(cusp.a, 3);
  EXPECT_EQ(cusp.b, 2);
  EXPECT_EQ(cusp.mu, 2);
  EXPECT_EQ(cusp.r, 1);
  EXPECT_EQ(cusp.delta, Q(1));

  const auto seg = diagram_invariants(D({{0, 5}, {5, 0}}));
  EXPECT_EQ(seg.area, Q(25, 2));
  EXPECT_EQ(seg.mu, 16);
  EXPECT_EQ(seg.r, 5);
  EXPECT_EQ(seg.delta, Q(10));

  const auto quadrant = diagram_invariants(NewtonDiagram::quadrant());
  EXPECT_EQ(quadrant.area, Q(0));
  EXPECT_EQ(quadrant.mu, 1);
  EXPECT_EQ(quadrant.r, 0);
  EXPECT_EQ(quadrant.delta, Q(0));
}

TEST(DiagramInvariants, SingleEdgeAgainstLatticeCount) {
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= 12; ++b) {
      const BivariatePoly f = P({{a, 0, 1}, {0, b, 1}});
      const BruteForce bf = brute_force(f, 13);
      const auto inv = diagram_invariants(newton_diagram(f));
      EXPECT_EQ(inv.area * 2, Q(bf.twice_area)) << a << "," << b;
      EXPECT_EQ(inv.r, bf.r) << a << "," << b;
      EXPECT_EQ(inv.r, std::gcd(a, b));
      EXPECT_EQ(inv.mu, a * b - a - b + 1);
      EXPECT_EQ(inv.delta * 2, Q(a * b - a - b + std::gcd(a, b)));
    }
}

TEST(DiagramInvariants, RandomDiagramsAgainstLatticeCount) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 150; ++k) {
    const BivariatePoly f = testutil::random_convenient(rng, 10, 5);
    const BruteForce bf = brute_force(f, 11);
    const auto inv = diagram_invariants(newton_diagram(f));
    EXPECT_EQ(inv.area * 2, Q(bf.twice_area));
    EXPECT_EQ(inv.a, bf.a);
    EXPECT_EQ(inv.b, bf.b);
    EXPECT_EQ(inv.r, bf.r);
    EXPECT_EQ(inv.mu, bf.twice_area - bf.a - bf.b + 1);
  }
}

TEST(Minkowski, Examples) {
  const NewtonDiagram cusp = D({{0, 2}, {3, 0}}), cusp5 = D({{0, 2}, {5, 0}});
  EXPECT_EQ(minkowski_mixed(cusp, cusp5).mixed, Q(6));
  for (int d = 1; d <= 10; ++d) {
    const NewtonDiagram seg = D({{0, d}, {d, 0}});
    EXPECT_EQ(minkowski_mixed(seg, seg).mixed, Q(d * d));
  }
  EXPECT_EQ(minkowski_mixed(cusp, NewtonDiagram::quadrant()).mixed, Q(0));
  EXPECT_EQ(minkowski_mixed(cusp, NewtonDiagram::quadrant()).sum, cusp);
}

TEST(Minkowski, Properties) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 100; ++k) {
    const BivariatePoly f = testutil::random_convenient(rng, 7, 4), g = testutil::random_convenient(rng, 7, 4);
    const NewtonDiagram df = newton_diagram(f), dg = newton_diagram(g);
    const MinkowskiMixed fg = minkowski_mixed(df, dg), gf = minkowski_mixed(dg, df);
    EXPECT_EQ(fg.mixed, gf.mixed);
    EXPECT_GE(fg.mixed, 0);
    EXPECT_TRUE(is_integer(fg.mixed));
    EXPECT_EQ(fg.sum, newton_diagram(f * g));
    for (Vec2 xi : {Vec2{1, 0}, Vec2{0, 1}, Vec2{1, 1}, Vec2{2, 3}, Vec2{5, 2}, Vec2{1, 7}})
      EXPECT_EQ(support_function(fg.sum, xi), support_function(df, xi) + support_function(dg, xi));
    EXPECT_EQ(diagram_invariants(minkowski_mixed(df, df).sum).area, 4 * diagram_invariants(df).area);
  }
}

TEST(FacePolynomials, Examples) {
  const auto one = face_polynomials(P({{0, 2, 1}, {3, 0, -1}}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].second, P({{0, 2, 1}, {3, 0, -1}}));

  const auto two = face_polynomials(P({{3, 0, 1}, {1, 1, 1}, {0, 2, 1}}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].first.start, (Exponent{0, 2}));
  EXPECT_EQ(two[0].first.end, (Exponent{1, 1}));
  EXPECT_EQ(two[0].second, P({{0, 2, 1}, {1, 1, 1}}));
  EXPECT_EQ(two[1].second, P({{1, 1, 1}, {3, 0, 1}}));
  EXPECT_EQ(two[0].first.normal, (Vec2{1, 1}));
  EXPECT_EQ(two[1].first.normal, (Vec2{1, 2}));

  const auto circle = face_polynomials(P({{2, 0, 1}, {0, 2, 1}}));
  ASSERT_EQ(circle.size(), 1u);
  EXPECT_EQ(circle[0].second, P({{2, 0, 1}, {0, 2, 1}}));
}

TEST(Nondegenerate, Examples) {
  EXPECT_TRUE(nondegenerate(P({{0, 2, 1}, {3, 0, -1}})));
  EXPECT_FALSE(nondegenerate(P({{0, 2, 1}, {1, 1, -2}, {2, 0, 1}, {3, 0, 1}})));
  EXPECT_TRUE(nondegenerate(P({{2, 0, 1}, {0, 2, 1}})));
  const auto faces = face_polynomials(P({{0, 2, 1}, {1, 1, -2}, {2, 0, 1}, {3, 0, 1}}));
  EXPECT_EQ(face_univariate(faces[0].first, faces[0].second), UniPoly({Q(1), Q(-2), Q(1)}));
}

TEST(Thickened, Examples) {
  const NewtonDiagram cusp = D({{0, 2}, {3, 0}});
  EXPECT_EQ(thickened_diagram(cusp, Fan::identity()), NewtonDiagram::quadrant());
  EXPECT_EQ(thickened_diagram(cusp, Fan::blowup()), D({{0, 2}, {2, 0}}));
  EXPECT_EQ(thickened_diagram(cusp, fan_from_normals({PrimitiveVector(2, 3)})), cusp);
}

TEST(Thickened, Properties) {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 60; ++k) {
    const BivariatePoly f = testutil::random_convenient(rng, 9, 5);
    const NewtonDiagram d = newton_diagram(f);
    EXPECT_EQ(thickened_diagram(d, newton_adapted_fan({f})), d);

    const Fan coarse = random_fan(2 + k % 6, 100 + k);
    const Fan fine = random_refinement(coarse, 3, 200 + k);
    const NewtonDiagram tc = thickened_diagram(d, coarse), tf = thickened_diagram(d, fine);
    for (const auto& v : d.vertices()) EXPECT_TRUE(tf.contains(v));
    for (const auto& v : tf.vertices()) EXPECT_TRUE(tc.contains(v));
    for (const auto& r : fine.rays()) EXPECT_EQ(support_function(tf, r), support_function(d, r));
    EXPECT_LE(diagram_invariants(tc).area, diagram_invariants(tf).area);
  }
}
