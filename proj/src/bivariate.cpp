#include "curveinv/bivariate.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "curveinv/error.hpp"

namespace curveinv {

BivariatePoly::BivariatePoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  for (const auto& [e, c] : terms_)
    if (e.i < 0 || e.j < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
}

BivariatePoly BivariatePoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BivariatePoly BivariatePoly::monomial(const Rational& c, int i, int j) {
  TermMap t;
  t.emplace(Exponent{i, j}, c);
  return BivariatePoly(std::move(t));
}

void BivariatePoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BivariatePoly::coeff(int i, int j) const {
  auto it = terms_.find(Exponent{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> BivariatePoly::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& kv : terms_) s.push_back(kv.first);
  return s;
}

ExtInt BivariatePoly::ord_total() const {
  if (is_zero()) return ExtInt::infinity();
  int best = std::numeric_limits<int>::max();
  for (const auto& kv : terms_) best = std::min(best, kv.first.i + kv.first.j);
  return best;
}

int BivariatePoly::total_degree() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.i + kv.first.j);
  return d;
}

int BivariatePoly::degree_x() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.i);
  return d;
}

int BivariatePoly::degree_y() const {
  int d = -1;
  for (const auto& kv : terms_) d = std::max(d, kv.first.j);
  return d;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < e.i; ++k) t *= x;
    for (int k = 0; k < e.j; ++k) t *= y;
    acc += t;
  }
  return acc;
}

UniPoly BivariatePoly::at_x_zero() const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_y(), 0)) + 1);
  for (const auto& [e, c] : terms_)
    if (e.i == 0) v[static_cast<std::size_t>(e.j)] = c;
  return UniPoly(std::move(v));
}

UniPoly BivariatePoly::at_y_zero() const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_x(), 0)) + 1);
  for (const auto& [e, c] : terms_)
    if (e.j == 0) v[static_cast<std::size_t>(e.i)] = c;
  return UniPoly(std::move(v));
}

BivariatePoly BivariatePoly::derivative_x() const {
  BivariatePoly out;
  for (const auto& [e, c] : terms_)
    if (e.i > 0) out.add_term({e.i - 1, e.j}, c * e.i);
  return out;
}

BivariatePoly BivariatePoly::derivative_y() const {
  BivariatePoly out;
  for (const auto& [e, c] : terms_)
    if (e.j > 0) out.add_term({e.i, e.j - 1}, c * e.j);
  return out;
}

BivariatePoly BivariatePoly::translated(const Rational& dx, const Rational& dy) const {
  return compose(x() + constant(dx), y() + constant(dy));
}

BivariatePoly BivariatePoly::compose(const BivariatePoly& X, const BivariatePoly& Y) const {
  std::vector<BivariatePoly> xp{constant(1)};
  std::vector<BivariatePoly> yp{constant(1)};
  for (int k = 1; k <= degree_x(); ++k) xp.push_back(xp.back() * X);
  for (int k = 1; k <= degree_y(); ++k) yp.push_back(yp.back() * Y);
  BivariatePoly out;
  for (const auto& [e, c] : terms_) out += c * (xp[static_cast<std::size_t>(e.i)] * yp[static_cast<std::size_t>(e.j)]);
  return out;
}

BivariatePoly BivariatePoly::truncated(int degree) const {
  return filtered([degree](const Exponent& e) { return e.i + e.j < degree; });
}

BivariatePoly BivariatePoly::pow(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  BivariatePoly acc = constant(1);
  BivariatePoly base = *this;
  while (n > 0) {
    if (n & 1) acc *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return acc;
}

std::vector<UniPoly> BivariatePoly::y_major() const {
  const int dy = degree_y();
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(std::max(dy, -1) + 1));
  for (const auto& [e, c] : terms_) {
    auto& r = rows[static_cast<std::size_t>(e.j)];
    if (r.size() <= static_cast<std::size_t>(e.i)) r.resize(static_cast<std::size_t>(e.i) + 1);
    r[static_cast<std::size_t>(e.i)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

BivariatePoly BivariatePoly::from_y_major(const std::vector<UniPoly>& coeffs) {
  TermMap t;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& cs = coeffs[j].coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs[i] != 0) t.emplace(Exponent{static_cast<int>(i), static_cast<int>(j)}, cs[i]);
  }
  return BivariatePoly(std::move(t));
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return a + (-b); }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
  return out;
}

BivariatePoly operator*(const Rational& c, const BivariatePoly& p) {
  if (c == 0) return {};
  BivariatePoly out = p;
  for (auto& kv : out.terms_) kv.second *= c;
  return out;
}

std::string BivariatePoly::to_string(char xvar, char yvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally for curve equations.
  std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
    const int dl = l.first.i + l.first.j, dr = r.first.i + r.first.j;
    if (dl != dr) return dl < dr;
    return l.first.j > r.first.j;
  });
  for (const auto& [e, c] : ts) {
    const Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool unit = e.i == 0 && e.j == 0;
    bool need_star = false;
    if (mag != 1 || unit) {
      os << mag.get_str();
      need_star = true;
    }
    auto var = [&](char name, int power) {
      if (power == 0) return;
      if (need_star) os << '*';
      os << name;
      if (power > 1) os << '^' << power;
      need_star = true;
    };
    var(xvar, e.i);
    var(yvar, e.j);
    first = false;
  }
  return os.str();
}

bool is_convenient(const BivariatePoly& f) {
  bool on_x_axis = false, on_y_axis = false;
  for (const auto& kv : f.terms()) {
    on_x_axis = on_x_axis || kv.first.j == 0;
    on_y_axis = on_y_axis || kv.first.i == 0;
  }
  return on_x_axis && on_y_axis;
}

namespace {

// Leading term in the order (j, then i) descending.
std::pair<Exponent, Rational> leading_term(const BivariatePoly& p) {
  const auto& t = p.terms();
  auto best = t.begin();
  for (auto it = t.begin(); it != t.end(); ++it)
    if (it->first.j > best->first.j || (it->first.j == best->first.j && it->first.i > best->first.i))
      best = it;
  return *best;
}

// Polynomials in y with coefficients in Q[x].
using YPoly = std::vector<UniPoly>;

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly content(const YPoly& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

YPoly divide_by(const YPoly& p, const UniPoly& c) {
  YPoly out;
  out.reserve(p.size());
  for (const auto& a : p) out.push_back(divmod(a, c).first);
  return out;
}

YPoly primitive_part(const YPoly& p) {
  if (p.empty()) return p;
  return divide_by(p, content(p));
}

// lc(b)^(deg a - deg b + 1) * a mod b, with everything in Q[x].
YPoly pseudo_remainder(YPoly a, const YPoly& b) {
  const std::size_t db = b.size() - 1;
  const UniPoly& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const UniPoly la = a.back();
    for (auto& c : a) c = lb * c;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = a[shift + k] - la * b[k];
    trim(a);
  }
  return a;
}

BivariatePoly normalize(const BivariatePoly& p) {
  if (p.is_zero()) return p;
  return Rational(1) / leading_term(p).second * p;
}

// f(a, y) as a polynomial in y.
UniPoly specialize_x(const YPoly& f, const Rational& a) {
  std::vector<Rational> c;
  for (const auto& cf : f) c.push_back(cf.eval(a));
  return UniPoly(std::move(c));
}

// True if a and b provably have no common factor of positive y-degree: a
// factor h of a with deg_y h > 0 keeps its degree under x = t whenever
// lc_y(a)(t) != 0, so it would divide gcd(a(t, y), b(t, y)).
bool no_common_y_factor(const BivariatePoly& a, const BivariatePoly& b) {
  const YPoly pa = a.y_major(), pb = b.y_major();
  for (int t = 1; t <= 8; ++t) {
    if (pa.back().eval(t) == 0) continue;
    if (gcd(specialize_x(pa, t), specialize_x(pb, t)).degree() == 0) return true;
  }
  return false;
}

}  // namespace

std::optional<BivariatePoly> try_divide(const BivariatePoly& a, const BivariatePoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  const auto [lbe, lbc] = leading_term(b);
  BivariatePoly rem = a;
  BivariatePoly quo;
  while (!rem.is_zero()) {
    const auto [le, lc] = leading_term(rem);
    if (le.i < lbe.i || le.j < lbe.j) return std::nullopt;
    const BivariatePoly t = BivariatePoly::monomial(lc / lbc, le.i - lbe.i, le.j - lbe.j);
    quo += t;
    rem = rem - t * b;
  }
  return quo;
}

BivariatePoly divide_exact(const BivariatePoly& a, const BivariatePoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorKind::InvalidArgument, "inexact division of " + a.to_string() + " by " + b.to_string());
  return *q;
}

BivariatePoly gcd(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  // Cheap certificate for the common coprime case.
  const BivariatePoly swap_a = a.compose(BivariatePoly::y(), BivariatePoly::x());
  const BivariatePoly swap_b = b.compose(BivariatePoly::y(), BivariatePoly::x());
  if (no_common_y_factor(a, b) && no_common_y_factor(swap_a, swap_b)) return BivariatePoly::constant(1);
  YPoly pa = a.y_major();
  YPoly pb = b.y_major();
  const UniPoly cg = gcd(content(pa), content(pb));
  pa = primitive_part(pa);
  pb = primitive_part(pb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (pb.size() > 1) {
    YPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  // pb is either zero (pa is the gcd of the primitive parts) or a nonzero
  // element of Q[x] that is primitive, i.e. a unit.
  YPoly g = pb.empty() ? pa : YPoly{UniPoly::constant(1)};
  for (auto& c : g) c = cg * c;
  return normalize(BivariatePoly::from_y_major(g));
}

bool squarefree_check(const BivariatePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree_check of 0");
  const BivariatePoly g = gcd(f, gcd(f.derivative_x(), f.derivative_y()));
  return g.total_degree() <= 0;
}

}  // namespace curveinv
