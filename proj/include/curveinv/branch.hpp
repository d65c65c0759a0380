#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curveinv/bivariate.hpp"
#include "curveinv/ext_int.hpp"
#include "curveinv/rational.hpp"

namespace curveinv {

// Puiseux-style parameterization t -> (cx * t^m, sum_k c_k t^k), known up to
// t^truncation. y-terms have strictly increasing exponents in [1, truncation].
class BranchParam {
 public:
  using YTerm = std::pair<int, Rational>;

  BranchParam(int m, Rational cx, std::vector<YTerm> y_terms, int truncation);

  int m() const { return m_; }
  const Rational& cx() const { return cx_; }
  const std::vector<YTerm>& y_terms() const { return y_terms_; }
  int truncation() const { return truncation_; }

  // Order of x(t), i.e. m.
  int ord_x() const { return m_; }
  // Order of y(t); +inf when y(t) vanishes identically.
  ExtInt ord_y() const;

  // y(t) as a dense coefficient vector of length truncation + 1.
  std::vector<Rational> y_series() const;

  friend bool operator==(const BranchParam&, const BranchParam&) = default;

 private:
  int m_;
  Rational cx_;
  std::vector<YTerm> y_terms_;
  int truncation_;
};

// Order in t of f(x(t), y(t)).
//
// Only coefficients up to t^truncation are trustworthy. If they all vanish
// the branch is reported as a root (+inf) when `declared_root` is set, and
// Error(TruncationTooShort) is thrown otherwise.
ExtInt ord_along_branch(const BivariatePoly& f, const BranchParam& gamma,
                        bool declared_root = false);

// Implicit equation of the (truncated) branch: the characteristic
// polynomial of multiplication by Y(s) on Q[x][s]/(s^m - x/cx), monic in y
// of degree m. It vanishes identically along the truncated parameterization.
BivariatePoly packet_polynomial(const BranchParam& gamma);

}  // namespace curveinv
