#include "curveinv/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "curveinv/error.hpp"

namespace curveinv {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_factor(const Rational& root) { return UniPoly({-root, Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of 0");
  return coeffs_.back();
}

int UniPoly::low_order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return -1;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::shifted(const Rational& shift) const {
  // Horner in the ring: p(x + s) = (...(a_n (x+s) + a_{n-1})(x+s) + ...)
  UniPoly acc;
  const UniPoly step({shift, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + constant(*it);
  return acc;
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k > 0) {
      if (mag != 1) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lb;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int t = 0; t <= db; ++t)
      rem[static_cast<std::size_t>(k - db + t)] -= c * b.coefficients()[static_cast<std::size_t>(t)];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a;
  UniPoly r1 = b;
  while (!r1.is_zero()) {
    UniPoly r = divmod(r0, r1).second;
    r0 = std::move(r1);
    r1 = r.monic();
  }
  return r0.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Scale to a primitive polynomial with integer coefficients and positive
// leading coefficient.
std::vector<Integer> primitive_integer(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Rational s = c * den;
    out.push_back(s.get_num());
    content = gcd(content, s.get_num());
  }
  if (p.leading() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = sgn(s.eval(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational_roots of 0");
  RationalRoots out;
  if (p.degree() == 0) {
    out.complete = true;
    return out;
  }

  const UniPoly sq = squarefree_part(p);
  const std::vector<Integer> zs = primitive_integer(sq);
  const Integer lc = zs.back();

  // Sturm chain of the squarefree part.
  std::vector<UniPoly> chain{sq, sq.derivative()};
  while (chain.back().degree() > 0) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }

  // Cauchy bound on |root|.
  Rational bound = 0;
  for (int k = 0; k < sq.degree(); ++k) bound = std::max(bound, Rational(abs(sq.coeff(k) / sq.leading())));
  bound += 1;

  // A rational root has the form N / lc. The grid points (2K+1) / (2 lc) are
  // never roots, so Sturm counts between consecutive grid points are exact and
  // each unit cell (K, K+1) holds exactly one candidate N = K + 1.
  const Integer two_lc = 2 * lc;
  auto grid = [&](const Integer& k) {
    Rational g(2 * k + 1, two_lc);
    g.canonicalize();
    return g;
  };
  Rational span = bound * lc;
  Integer kmax = span.get_num() / span.get_den() + 2;
  Integer kmin = -kmax - 1;

  std::vector<Rational> found;
  struct Cell {
    Integer lo, hi;
    int vlo, vhi;
  };
  std::vector<Cell> stack{{kmin, kmax, sign_changes(chain, grid(kmin)), sign_changes(chain, grid(kmax))}};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    if (c.vlo - c.vhi <= 0) continue;
    if (c.hi - c.lo == 1) {
      Rational cand(c.lo + 1, lc);
      cand.canonicalize();
      if (sq.eval(cand) == 0) found.push_back(cand);
      continue;
    }
    Integer mid = (c.lo + c.hi) / 2;
    if (mid <= c.lo) mid = c.lo + 1;
    const int vm = sign_changes(chain, grid(mid));
    stack.push_back({c.lo, mid, c.vlo, vm});
    stack.push_back({mid, c.hi, vm, c.vhi});
  }
  std::sort(found.begin(), found.end());

  int total = 0;
  for (const auto& r : found) {
    int mult = 0;
    UniPoly rest = p;
    const UniPoly lin = UniPoly::linear_factor(r);
    for (;;) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.roots.push_back({r, mult});
    total += mult;
  }
  out.complete = total == p.degree();
  return out;
}

}  // namespace curveinv
