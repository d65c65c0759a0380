#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curveinv/rational.hpp"

namespace curveinv {

// Dense univariate polynomial over Q, coefficients indexed by degree.
// The coefficient vector never has trailing zeros, so the zero polynomial
// is the empty vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  // The polynomial x - root.
  static UniPoly linear_factor(const Rational& root);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;
  // Largest power of the variable dividing the polynomial; -1 for zero.
  int low_order() const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // p(x + shift)
  UniPoly shifted(const Rational& shift) const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division; throws InvalidArgument on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

struct RootMultiplicity {
  Rational root;
  int multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct RationalRoots {
  // Sorted by increasing root; includes 0 when it is a root.
  std::vector<RootMultiplicity> roots;
  // True iff the multiplicities add up to deg p, i.e. p splits over Q.
  bool complete = false;
};

// All rational roots of a nonzero polynomial, with multiplicities.
RationalRoots rational_roots(const UniPoly& p);

}  // namespace curveinv
