#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curveinv/bivariate.hpp"
#include "curveinv/branch.hpp"
#include "curveinv/ext_int.hpp"
#include "curveinv/rational.hpp"

namespace curveinv {

struct OracleOptions {
  // Largest truncation degree D tried by the quotient-dimension method.
  int degree_cap = 128;
  // Seed for the shear coefficients of the resultant method.
  std::uint64_t seed = 1;
};

// OracleOptions with degree_cap taken from CURVEINV_DEGREE_CAP when set.
OracleOptions oracle_options_from_env();

struct IntersectionDetail {
  ExtInt value;
  int degree_used = 0;   // D at which the quotient dimension stabilized
  Rational shear;        // shear coefficient used by the resultant route
};

// dim C{x,y}/(f,g) by exact rank of the truncated Macaulay matrix. Stops at
// the first D with dim_D = dim_(D+1). Assumes f, g share no component
// through the origin; throws DegreeCapExceeded otherwise.
std::int64_t quotient_dimension(const BivariatePoly& f, const BivariatePoly& g, int degree_cap,
                                int* degree_used = nullptr);

// ord_x Res_y after the shear x -> x + c y, computed as the x-adic valuation
// of the determinant of multiplication by g on Q[[x]][y]/(f). The shear is
// redrawn until both are y-monic up to a constant and (0, 0) is the only
// common zero on x = 0. Same assumption as quotient_dimension.
std::int64_t sheared_resultant_order(const BivariatePoly& f, const BivariatePoly& g, std::uint64_t seed,
                                     Rational* shear_used = nullptr);

// (f, g)_0. Units give 0, a common factor through the origin gives +inf.
// Otherwise both routes run and must agree (Error(Inconsistent) if not).
IntersectionDetail intersection_detail(const BivariatePoly& f, const BivariatePoly& g,
                                       const OracleOptions& opts = {});
ExtInt intersection_multiplicity(const BivariatePoly& f, const BivariatePoly& g,
                                 const OracleOptions& opts = {});

// mu_0(f) = (f_x, f_y)_0; +inf for a non-isolated critical point.
// Precondition: f(0,0) = 0.
ExtInt milnor_number(const BivariatePoly& f, const OracleOptions& opts = {});
IntersectionDetail milnor_detail(const BivariatePoly& f, const OracleOptions& opts = {});

struct CurveSpec {
  BivariatePoly poly;
  std::vector<BranchParam> branches;
  std::string provenance;
};

struct ValidatedCurve {
  BivariatePoly poly;
  std::vector<BranchParam> branches;
  std::int64_t r0 = 0;
  // pairwise[i][j] = intersection number of branches i and j (i != j).
  std::vector<std::vector<ExtInt>> pairwise;
  std::vector<int> truncations;
};

// Checks that each branch is a root of the curve, that the branches are
// pairwise distinct, and that they account for the whole germ:
// sum of ord x(t) = ord f(0, y) and sum of ord y(t) = ord f(x, 0).
// Errors: BranchNotOnCurve, TruncationTooShort, InvalidArgument.
ValidatedCurve validate_curve_spec(const CurveSpec& spec);

struct LocalInvariants {
  ExtInt mu;
  std::int64_t r = 0;
  ExtInt delta;
};

// mu from the Milnor oracle and delta = (mu + r - 1) / 2. Non-squarefree f
// gives mu = delta = +inf. Throws NonIntegerDelta if delta is not a
// nonnegative integer.
LocalInvariants local_invariants(const BivariatePoly& f, std::int64_t r, const OracleOptions& opts = {});

}  // namespace curveinv
