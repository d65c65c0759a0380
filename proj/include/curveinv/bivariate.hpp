#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curveinv/ext_int.hpp"
#include "curveinv/lattice.hpp"
#include "curveinv/rational.hpp"
#include "curveinv/unipoly.hpp"

namespace curveinv {

// Polynomial in x, y over Q stored as a sparse exponent -> coefficient map.
// Zero coefficients are never stored, so two polynomials are equal iff their
// term maps are equal.
class BivariatePoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  BivariatePoly() = default;
  explicit BivariatePoly(TermMap terms);

  static BivariatePoly constant(const Rational& c);
  static BivariatePoly monomial(const Rational& c, int i, int j);
  static BivariatePoly x() { return monomial(1, 1, 0); }
  static BivariatePoly y() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(int i, int j) const;
  Rational constant_term() const { return coeff(0, 0); }
  std::vector<Exponent> support() const;

  // Min of i + j over the support; +inf for zero.
  ExtInt ord_total() const;
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;

  Rational eval(const Rational& x, const Rational& y) const;
  // f(0, y) as a polynomial in y.
  UniPoly at_x_zero() const;
  // f(x, 0) as a polynomial in x.
  UniPoly at_y_zero() const;

  BivariatePoly derivative_x() const;
  BivariatePoly derivative_y() const;
  // f(x + dx, y + dy)
  BivariatePoly translated(const Rational& dx, const Rational& dy) const;
  // f(X(x,y), Y(x,y))
  BivariatePoly compose(const BivariatePoly& X, const BivariatePoly& Y) const;
  // Terms with i + j < degree.
  BivariatePoly truncated(int degree) const;
  // Terms with exponent in the given set (face restriction etc.).
  template <typename Pred>
  BivariatePoly filtered(Pred keep) const {
    TermMap out;
    for (const auto& [e, c] : terms_)
      if (keep(e)) out.emplace(e, c);
    return BivariatePoly(std::move(out));
  }
  BivariatePoly pow(int n) const;

  // Coefficients of y^k as polynomials in x, k = 0..deg_y.
  std::vector<UniPoly> y_major() const;
  static BivariatePoly from_y_major(const std::vector<UniPoly>& coeffs);

  BivariatePoly operator-() const;
  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const Rational& c, const BivariatePoly& p);
  BivariatePoly& operator+=(const BivariatePoly& o) { return *this = *this + o; }
  BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

  // Human readable form, e.g. "y^2 - x^3". Variable names are configurable
  // so chart polynomials print in (u, v).
  std::string to_string(char xvar = 'x', char yvar = 'y') const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  TermMap terms_;
};

// True iff the support meets both axes: f(x,0) and f(0,y) are nonzero.
bool is_convenient(const BivariatePoly& f);

// Exact quotient a / b; throws InvalidArgument if b does not divide a.
BivariatePoly divide_exact(const BivariatePoly& a, const BivariatePoly& b);
// Returns a / b if b divides a exactly.
std::optional<BivariatePoly> try_divide(const BivariatePoly& a, const BivariatePoly& b);

// gcd over Q[x,y], normalized so that its leading coefficient (highest y
// power, then highest x power) is 1. gcd(0, 0) = 0.
BivariatePoly gcd(const BivariatePoly& a, const BivariatePoly& b);

// True iff f has no repeated irreducible factor. Precondition: f nonzero.
bool squarefree_check(const BivariatePoly& f);

}  // namespace curveinv
