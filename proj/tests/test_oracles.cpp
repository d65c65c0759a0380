#include <gtest/gtest.h>

#include <random>

#include "curveinv/error.hpp"
#include "curveinv/harness.hpp"
#include "curveinv/oracles.hpp"
#include "test_util.hpp"

using namespace curveinv;
using testutil::B;
using testutil::P;
using testutil::Q;

namespace {

const BivariatePoly kCusp = P({{0, 2, 1}, {3, 0, -1}});
const BivariatePoly kCusp5 = P({{0, 2, 1}, {5, 0, -1}});

// Independent route: (f, g)_0 = sum over the branches of g of ord f(gamma).
ExtInt via_branches(const BivariatePoly& f, const std::vector<BranchParam>& g_branches) {
  ExtInt total = 0;
  for (const auto& b : g_branches) total += ord_along_branch(f, b);
  return total;
}

// Smooth branch t -> (t, c1 t + c2 t^2 + c3 t^3) with random coefficients.
BranchParam random_smooth_branch(std::mt19937_64& rng, int trunc) {
  return BranchParam(1, Rational(1),
                     {{1, testutil::random_rational(rng, 3, 2)},
                      {2, testutil::random_rational(rng, 3, 2)},
                      {3, testutil::random_rational(rng, 3, 2)}},
                     trunc);
}

BranchParam random_branch(std::mt19937_64& rng, int trunc) {
  std::uniform_int_distribution<int> m(1, 3), k(1, 5);
  const int mm = m(rng);
  int k1 = k(rng), k2 = k1 + k(rng);
  while (std::gcd(std::gcd(mm, k1), k2) != 1) ++k2;
  return BranchParam(mm, testutil::random_nonzero(rng, 3, 2),
                     {{k1, testutil::random_nonzero(rng, 3, 2)}, {k2, testutil::random_nonzero(rng, 3, 2)}}, trunc);
}

}  // namespace

TEST(Intersection, Examples) {
  EXPECT_EQ(intersection_multiplicity(P({{1, 0, 1}}), P({{0, 1, 1}})), 1);
  EXPECT_EQ(intersection_multiplicity(kCusp, kCusp5), 6);
  EXPECT_EQ(intersection_multiplicity(kCusp, kCusp), ExtInt::infinity());
  EXPECT_EQ(intersection_multiplicity(kCusp, P({{0, 0, 1}, {1, 0, 1}})), 0);
  EXPECT_EQ(intersection_multiplicity(kCusp, BivariatePoly()), ExtInt::infinity());
  // Frozen through the branch route.
  EXPECT_EQ(via_branches(kCusp, {B(2, {{5, 1}})}), 6);
}

TEST(Intersection, CommonComponentAwayFromOrigin) {
  // (1 + x) is a common factor but a unit at the origin.
  const BivariatePoly unit = P({{0, 0, 1}, {1, 0, 1}});
  EXPECT_EQ(intersection_multiplicity(unit * kCusp, unit * kCusp5), 6);
}

TEST(Intersection, AgreesWithBranchRoute) {
  std::mt19937_64 rng(83);
  for (int k = 0; k < 40; ++k) {
    std::vector<BranchParam> gb{random_branch(rng, 30)};
    if (k % 2) gb.push_back(random_branch(rng, 30));
    BivariatePoly g = BivariatePoly::constant(1);
    for (const auto& b : gb) g *= packet_polynomial(b);
    const BivariatePoly f = testutil::random_convenient(rng, 5, 3);
    if (gcd(f, g).total_degree() > 0) continue;
    EXPECT_EQ(intersection_multiplicity(f, g), via_branches(f, gb)) << f.to_string() << " / " << g.to_string();
  }
}

TEST(Intersection, RoutesAgreeOnRandomPairs) {
  std::mt19937_64 rng(89);
  int compared = 0;
  while (compared < 60) {
    const BivariatePoly f = testutil::random_convenient(rng, 6, 3), g = testutil::random_convenient(rng, 6, 3);
    if (gcd(f, g).total_degree() > 0) continue;
    int d = 0;
    const std::int64_t q = quotient_dimension(f, g, 128, &d);
    const std::int64_t r = sheared_resultant_order(f, g, 1 + compared);
    EXPECT_EQ(q, r) << f.to_string() << " / " << g.to_string();
    ++compared;
  }
}

TEST(Intersection, Properties) {
  std::mt19937_64 rng(97);
  const BivariatePoly swap_x = BivariatePoly::y(), swap_y = BivariatePoly::x();
  const BivariatePoly shear_x = BivariatePoly::x() + P({{0, 1, 2}}), shear_y = BivariatePoly::y();
  for (int k = 0; k < 25; ++k) {
    const BivariatePoly f = testutil::random_convenient(rng, 5, 2), g = testutil::random_convenient(rng, 5, 2),
                        h = testutil::random_convenient(rng, 4, 2);
    if (gcd(f * h, g).total_degree() > 0) continue;
    const ExtInt fg = intersection_multiplicity(f, g);
    EXPECT_EQ(intersection_multiplicity(g, f), fg);
    EXPECT_EQ(intersection_multiplicity(f * h, g), fg + intersection_multiplicity(h, g));
    const BivariatePoly unit = BivariatePoly::constant(1) + testutil::random_poly(rng, 2, 2) * BivariatePoly::x();
    EXPECT_EQ(intersection_multiplicity(unit * f, g), fg);
    EXPECT_EQ(intersection_multiplicity(f.compose(swap_x, swap_y), g.compose(swap_x, swap_y)), fg);
    EXPECT_EQ(intersection_multiplicity(f.compose(shear_x, shear_y), g.compose(shear_x, shear_y)), fg);
    EXPECT_GE(fg, ExtInt(f.ord_total().value() * g.ord_total().value()));
  }
}

TEST(Intersection, TransverseEqualsProductOfOrders) {
  // Lines of distinct slopes plus higher order terms.
  const BivariatePoly f = P({{0, 1, 1}, {1, 0, -1}}) * P({{0, 1, 1}, {1, 0, 1}}) + P({{3, 0, 1}, {0, 4, 2}});
  const BivariatePoly g = P({{0, 1, 1}, {1, 0, -2}}) * P({{0, 1, 1}, {1, 0, -3}}) * P({{0, 1, 1}}) + P({{4, 0, 1}, {1, 3, 1}});
  EXPECT_EQ(intersection_multiplicity(f, g), 6);
}

TEST(Milnor, Examples) {
  EXPECT_EQ(milnor_number(P({{2, 0, 1}, {0, 2, 1}})), 1);
  EXPECT_EQ(milnor_number(kCusp), 2);
  for (int p = 2; p <= 6; ++p)
    for (int q = 2; q <= 6; ++q) EXPECT_EQ(milnor_number(P({{p, 0, 1}, {0, q, 1}})), (p - 1) * (q - 1));
  const BivariatePoly ymx = P({{0, 1, 1}, {1, 0, -1}});
  EXPECT_EQ(milnor_number(ymx * ymx), ExtInt::infinity());
  EXPECT_THROW(milnor_number(P({{0, 0, 1}, {1, 0, 1}})), Error);
}

// For a union of r smooth branches, delta is the sum of pairwise
// intersection numbers, so mu = 2 * sum - r + 1.
TEST(Milnor, SmoothBranchUnionsFromPairwiseContacts) {
  std::mt19937_64 rng(101);
  int checked = 0;
  while (checked < 25) {
    std::uniform_int_distribution<int> n(2, 4);
    std::vector<BranchParam> bs;
    const int count = n(rng);
    for (int k = 0; k < count; ++k) bs.push_back(random_smooth_branch(rng, 20));
    const CurveSpec spec = curve_from_branches(bs, "smooth branches");
    ValidatedCurve v;
    try {
      v = validate_curve_spec(spec);
    } catch (const Error&) {
      continue;  // coinciding branches
    }
    std::int64_t sum = 0;
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) {
        // Contact of two smooth graphs y = p(x), y = q(x): order of p - q.
        const auto a = bs[i].y_series(), b = bs[j].y_series();
        std::int64_t contact = 0;
        while (a[static_cast<std::size_t>(contact)] == b[static_cast<std::size_t>(contact)]) ++contact;
        EXPECT_EQ(v.pairwise[i][j], contact);
        sum += contact;
      }
    EXPECT_EQ(milnor_number(spec.poly), 2 * sum - count + 1);
    ++checked;
  }
}

TEST(ValidateCurve, Examples) {
  const auto cusp = validate_curve_spec({kCusp, {B(2, {{3, 1}})}, ""});
  EXPECT_EQ(cusp.r0, 1);

  const auto node = validate_curve_spec({P({{0, 2, 1}, {2, 0, -1}}), {B(1, {{1, 1}}), B(1, {{1, -1}})}, ""});
  EXPECT_EQ(node.r0, 2);
  EXPECT_EQ(node.pairwise[0][1], 1);

  const auto two = validate_curve_spec({kCusp * kCusp5, {B(2, {{3, 1}}), B(2, {{5, 1}})}, ""});
  EXPECT_EQ(two.r0, 2);
  EXPECT_EQ(two.pairwise[0][1], 6);
  EXPECT_EQ(two.pairwise[1][0], 6);
}

TEST(ValidateCurve, Errors) {
  auto kind = [](const CurveSpec& s) {
    try {
      validate_curve_spec(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind({kCusp, {B(2, {{5, 1}})}, ""}), ErrorKind::BranchNotOnCurve);
  // Node with one branch missing.
  EXPECT_EQ(kind({P({{0, 2, 1}, {2, 0, -1}}), {B(1, {{1, 1}})}, ""}), ErrorKind::BranchNotOnCurve);
  // Non-primitive parameterization of the cusp.
  EXPECT_EQ(kind({kCusp, {BranchParam(4, Q(1), {{6, Q(1)}}, 24)}, ""}), ErrorKind::InvalidArgument);
}

TEST(LocalInvariants, Examples) {
  const auto cusp = local_invariants(kCusp, 1);
  EXPECT_EQ(cusp.mu, 2);
  EXPECT_EQ(cusp.delta, 1);
  const auto smooth = local_invariants(P({{0, 2, 1}, {1, 0, -1}}), 1);
  EXPECT_EQ(smooth.mu, 0);
  EXPECT_EQ(smooth.delta, 0);
  const auto node = local_invariants(P({{0, 2, 1}, {2, 0, -1}}), 2);
  EXPECT_EQ(node.mu, 1);
  EXPECT_EQ(node.delta, 1);
  const BivariatePoly ymx = P({{0, 1, 1}, {1, 0, -1}});
  EXPECT_EQ(local_invariants(ymx * ymx, 1).delta, ExtInt::infinity());
  try {
    local_invariants(kCusp, 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegerDelta);
  }
}

TEST(Oracles, DegreeCapIsEnforced) {
  OracleOptions opts;
  opts.degree_cap = 9;
  try {
    milnor_number(P({{0, 7, 1}, {9, 0, 1}}), opts);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeCapExceeded);
  }
}
