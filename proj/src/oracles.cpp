#include "curveinv/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "curveinv/error.hpp"

namespace curveinv {

OracleOptions oracle_options_from_env() {
  OracleOptions opts;
  if (const char* cap = std::getenv("CURVEINV_DEGREE_CAP")) {
    try {
      const int v = std::stoi(cap);
      if (v > 0) opts.degree_cap = v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("CURVEINV_DEGREE_CAP is not an integer: ") + cap);
    }
  }
  return opts;
}

namespace {

// ---------------------------------------------------------------------------
// Quotient dimension: rank of the truncated Macaulay matrix.

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

int column_of(int i, int j) {
  const int d = i + j;
  return d * (d + 1) / 2 + i;
}

class Echelon {
 public:
  void insert(SparseRow row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const Rational lead = row.front().second;
        for (auto& e : row) e.second /= lead;
        pivots_.emplace(row.front().first, std::move(row));
        return;
      }
      row = subtract(row, row.front().second, it->second);
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  static SparseRow subtract(const SparseRow& a, const Rational& factor, const SparseRow& p) {
    SparseRow out;
    out.reserve(a.size() + p.size());
    std::size_t i = 0, k = 0;
    while (i < a.size() || k < p.size()) {
      if (k == p.size() || (i < a.size() && a[i].first < p[k].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || p[k].first < a[i].first) {
        out.emplace_back(p[k].first, -factor * p[k].second);
        ++k;
      } else {
        Rational v = a[i].second - factor * p[k].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++k;
      }
    }
    return out;
  }
  std::map<int, SparseRow> pivots_;
};

std::int64_t truncated_quotient_dim(const BivariatePoly& f, const BivariatePoly& g, int degree) {
  Echelon ech;
  for (const BivariatePoly* h : {&f, &g}) {
    const std::int64_t ord = h->ord_total().value();
    for (int d = 0; d + ord < degree; ++d) {
      for (int a = 0; a <= d; ++a) {
        const int b = d - a;
        SparseRow row;
        for (const auto& [e, c] : h->terms()) {
          const int i = e.i + a, j = e.j + b;
          if (i + j < degree) row.emplace_back(column_of(i, j), c);
        }
        std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        ech.insert(std::move(row));
      }
    }
  }
  const std::int64_t columns = static_cast<std::int64_t>(degree) * (degree + 1) / 2;
  return columns - static_cast<std::int64_t>(ech.rank());
}

// ---------------------------------------------------------------------------
// Resultant route: x-adic valuation of det of multiplication by G modulo a
// y-monic F, over Q[[x]] truncated at x^K.

using XSeries = std::vector<Rational>;  // coefficients of x^0..x^(K-1)

std::int64_t valuation(const XSeries& s, std::size_t prec) {
  for (std::size_t k = 0; k < prec && k < s.size(); ++k)
    if (s[k] != 0) return static_cast<std::int64_t>(k);
  return -1;
}

// Returns the valuation of det, or nullopt if precision K was not enough.
std::optional<std::int64_t> det_valuation(std::vector<std::vector<XSeries>> a, std::size_t prec) {
  const std::size_t n = a.size();
  std::int64_t total = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::int64_t best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = step; i < n; ++i)
      for (std::size_t j = step; j < n; ++j) {
        const std::int64_t v = valuation(a[i][j], prec);
        if (v >= 0 && (best < 0 || v < best)) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best < 0) return std::nullopt;
    std::swap(a[step], a[bi]);
    for (auto& row : a) std::swap(row[step], row[bj]);

    const auto v = static_cast<std::size_t>(best);
    const std::size_t newprec = prec - v;
    // unit = pivot / x^v, inverted mod x^newprec.
    const XSeries& piv = a[step][step];
    XSeries inv(newprec);
    inv[0] = Rational(1) / piv[v];
    for (std::size_t k = 1; k < newprec; ++k) {
      Rational s = 0;
      for (std::size_t j = 1; j <= k && v + j < prec; ++j) s += piv[v + j] * inv[k - j];
      inv[k] = -s * inv[0];
    }
    for (std::size_t r = step + 1; r < n; ++r) {
      const XSeries& e = a[r][step];
      if (valuation(e, prec) < 0) continue;
      // factor = (e / x^v) * inv, mod x^newprec.
      XSeries factor(newprec);
      for (std::size_t k = 0; k < newprec; ++k) {
        if (v + k >= prec || e[v + k] == 0) continue;
        for (std::size_t t = 0; k + t < newprec; ++t) factor[k + t] += e[v + k] * inv[t];
      }
      for (std::size_t c = step; c < n; ++c) {
        XSeries& dst = a[r][c];
        const XSeries& src = a[step][c];
        for (std::size_t k = 0; k < newprec; ++k) {
          if (factor[k] == 0) continue;
          for (std::size_t t = 0; k + t < newprec; ++t)
            if (src[t] != 0) dst[k + t] -= factor[k] * src[t];
        }
      }
    }
    total += best;
    prec = newprec;
    if (prec == 0 && step + 1 < n) return std::nullopt;
  }
  return total;
}

// Polynomials in y over Q[x]/(x^prec): entry k is the coefficient of y^k.
using YSeries = std::vector<XSeries>;

XSeries truncate(const UniPoly& p, std::size_t prec) {
  XSeries out(prec);
  const auto& cs = p.coefficients();
  for (std::size_t t = 0; t < prec && t < cs.size(); ++t) out[t] = cs[t];
  return out;
}

// dst -= a * b mod x^prec.
void sub_mul(XSeries& dst, const XSeries& a, const XSeries& b) {
  const std::size_t prec = dst.size();
  for (std::size_t i = 0; i < prec; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < prec; ++j)
      if (b[j] != 0) dst[i + j] -= a[i] * b[j];
  }
}

// p mod f for f monic in y.
void reduce_mod(YSeries& p, const YSeries& f) {
  const std::size_t n = f.size() - 1;
  while (p.size() > n) {
    const XSeries lead = p.back();
    const std::size_t shift = p.size() - 1 - n;
    for (std::size_t k = 0; k < n; ++k) sub_mul(p[shift + k], lead, f[k]);
    p.pop_back();
  }
}

// Coefficients in y of a polynomial over Q, lowest first.
using YCoeffs = std::vector<Rational>;

// Weierstrass factor of a monic F over Q[[x]] mod x^prec: the monic P of
// degree k = ord F(0, y) with P(0, y) = y^k dividing F. F(0, y) = y^k u(y)
// with u(0) != 0, so the other factor is a unit at the origin and the
// resultant valuation only sees P. Linear Hensel lifting, one x-power at a
// time: y^k Q_t + u P_t = E_t.
YSeries weierstrass_factor(const std::vector<UniPoly>& fy, std::size_t k, std::size_t prec) {
  const std::size_t n = fy.size() - 1;
  auto coeff = [&](std::size_t t, std::size_t j) {
    const auto& cs = fy[j].coefficients();
    return t < cs.size() ? cs[t] : Rational(0);
  };
  YCoeffs u(n - k + 1);
  for (std::size_t j = 0; j <= n - k; ++j) u[j] = coeff(0, k + j);
  // u^-1 mod y^k
  YCoeffs uinv(k);
  if (k > 0) {
    uinv[0] = Rational(1) / u[0];
    for (std::size_t m = 1; m < k; ++m) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= m && j < u.size(); ++j) acc += u[j] * uinv[m - j];
      uinv[m] = -acc * uinv[0];
    }
  }
  std::vector<YCoeffs> P(prec, YCoeffs(k)), Q(prec, YCoeffs(n - k));
  for (std::size_t t = 1; t < prec; ++t) {
    YCoeffs e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = coeff(t, j);
    for (std::size_t a = 1; a < t; ++a)
      for (std::size_t i = 0; i < k; ++i) {
        if (P[a][i] == 0) continue;
        for (std::size_t j = 0; j < n - k; ++j)
          if (Q[t - a][j] != 0) e[i + j] -= P[a][i] * Q[t - a][j];
      }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; i + j < k; ++j) P[t][i + j] += e[i] * uinv[j];
    YCoeffs rest = e;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < u.size(); ++j) rest[i + j] -= u[j] * P[t][i];
    for (std::size_t j = 0; j < k; ++j)
      if (rest[j] != 0) throw Error(ErrorKind::Internal, "Weierstrass lifting lost exactness");
    for (std::size_t j = 0; j < n - k; ++j) Q[t][j] = rest[k + j];
  }
  YSeries out(k + 1, XSeries(prec));
  out[k][0] = 1;
  for (std::size_t t = 1; t < prec; ++t)
    for (std::size_t j = 0; j < k; ++j) out[j][t] = P[t][j];
  return out;
}

bool y_monic_constant(const BivariatePoly& p) {
  const auto ym = p.y_major();
  return !ym.empty() && ym.back().degree() == 0 && static_cast<int>(ym.size()) - 1 == p.total_degree();
}

}  // namespace

std::int64_t quotient_dimension(const BivariatePoly& f, const BivariatePoly& g, int degree_cap, int* degree_used) {
  int degree = 8;
  std::int64_t dim = truncated_quotient_dim(f, g, degree);
  for (;;) {
    if (degree + 1 > degree_cap)
      throw Error(ErrorKind::DegreeCapExceeded, "quotient dimension not stable below D = " + std::to_string(degree_cap));
    const std::int64_t next = truncated_quotient_dim(f, g, degree + 1);
    if (next == dim) {
      if (degree_used) *degree_used = degree;
      return dim;
    }
    degree = std::min(std::max(degree + 2, degree * 3 / 2), degree_cap);
    dim = truncated_quotient_dim(f, g, degree);
  }
}

std::int64_t sheared_resultant_order(const BivariatePoly& f, const BivariatePoly& g, std::uint64_t seed,
                                     Rational* shear_used) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Small shears keep the coefficients short; widen the range on retry.
    const Rational c = std::uniform_int_distribution<int>(1, 4 + 16 * attempt)(rng);
    const BivariatePoly sx = BivariatePoly::x() + c * BivariatePoly::y();
    const BivariatePoly F = f.compose(sx, BivariatePoly::y());
    const BivariatePoly G = g.compose(sx, BivariatePoly::y());
    if (!y_monic_constant(F) || !y_monic_constant(G)) continue;
    // Any common zero on x = 0 other than the origin would be counted too.
    const UniPoly common = gcd(F.at_x_zero(), G.at_x_zero());
    if (common.low_order() != common.degree()) continue;

    std::vector<UniPoly> fy = F.y_major();
    const Rational lc = fy.back().coeff(0);
    for (auto& cf : fy) cf = (Rational(1) / lc) * cf;
    const std::size_t n = fy.size() - 1;
    if (n == 0) return 0;  // F is a nonzero constant

    const std::size_t k = static_cast<std::size_t>(F.at_x_zero().low_order());
    if (k == 0) return 0;  // F(0, 0) != 0

    const std::vector<UniPoly> gy = G.y_major();
    std::size_t prec = 16;
    for (;;) {
      const YSeries ps = weierstrass_factor(fy, k, prec);
      YSeries col;
      for (const auto& cf : gy) col.push_back(truncate(cf, prec));
      reduce_mod(col, ps);
      col.resize(k, XSeries(prec));
      // Column j holds y^j G mod P.
      std::vector<std::vector<XSeries>> mat(k, std::vector<XSeries>(k));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t row = 0; row < k; ++row) mat[row][j] = col[row];
        col.insert(col.begin(), XSeries(prec));
        reduce_mod(col, ps);
      }
      if (auto v = det_valuation(std::move(mat), prec)) {
        if (shear_used) *shear_used = c;
        return *v;
      }
      if (prec > 8192) throw Error(ErrorKind::DegreeCapExceeded, "resultant valuation needs more than x^8192");
      prec *= 2;
    }
  }
  throw Error(ErrorKind::RetriesExhausted, "no admissible shear found");
}

IntersectionDetail intersection_detail(const BivariatePoly& f, const BivariatePoly& g, const OracleOptions& opts) {
  IntersectionDetail out;
  if ((!f.is_zero() && f.constant_term() != 0) || (!g.is_zero() && g.constant_term() != 0)) {
    out.value = 0;
    return out;
  }
  if (f.is_zero() || g.is_zero()) {
    out.value = ExtInt::infinity();
    return out;
  }
  BivariatePoly ff = f, gg = g;
  const BivariatePoly h = gcd(f, g);
  if (h.total_degree() > 0) {
    if (h.constant_term() == 0) {
      out.value = ExtInt::infinity();
      return out;
    }
    ff = divide_exact(f, h);
    gg = divide_exact(g, h);
  }
  const std::int64_t q = quotient_dimension(ff, gg, opts.degree_cap, &out.degree_used);
  const std::int64_t r = sheared_resultant_order(ff, gg, opts.seed, &out.shear);
  if (q != r)
    throw Error(ErrorKind::Inconsistent, "quotient dimension " + std::to_string(q) + " != resultant order " +
                                             std::to_string(r) + " for (" + f.to_string() + ", " + g.to_string() + ")");
  out.value = q;
  return out;
}

ExtInt intersection_multiplicity(const BivariatePoly& f, const BivariatePoly& g, const OracleOptions& opts) {
  return intersection_detail(f, g, opts).value;
}

IntersectionDetail milnor_detail(const BivariatePoly& f, const OracleOptions& opts) {
  if (f.is_zero()) return {ExtInt::infinity(), 0, 0};
  if (f.constant_term() != 0) throw Error(ErrorKind::InvalidArgument, "milnor_number needs f(0,0) = 0");
  return intersection_detail(f.derivative_x(), f.derivative_y(), opts);
}

ExtInt milnor_number(const BivariatePoly& f, const OracleOptions& opts) { return milnor_detail(f, opts).value; }

ValidatedCurve validate_curve_spec(const CurveSpec& spec) {
  const BivariatePoly& f = spec.poly;
  if (spec.branches.empty()) throw Error(ErrorKind::InvalidArgument, "curve spec has no branches");
  if (f.is_zero() || !is_convenient(f))
    throw Error(ErrorKind::NotConvenient, "curve spec polynomial must be convenient: " + f.to_string());

  ValidatedCurve out;
  out.poly = f;
  out.branches = spec.branches;
  std::int64_t sum_x = 0, sum_y = 0;
  for (std::size_t k = 0; k < spec.branches.size(); ++k) {
    const auto& b = spec.branches[k];
    int g = b.m();
    for (const auto& t : b.y_terms()) g = std::gcd(g, t.first);
    if (g != 1) throw Error(ErrorKind::InvalidArgument, "branch " + std::to_string(k) + " is not primitively parameterized", k);
    const ExtInt ord = ord_along_branch(f, b, true);
    if (ord.is_finite())
      throw Error(ErrorKind::BranchNotOnCurve,
                  "branch " + std::to_string(k) + " gives order " + ord.to_string() + " on " + f.to_string(), k);
    sum_x += b.ord_x();
    if (b.ord_y().is_infinite()) throw Error(ErrorKind::InvalidArgument, "branch along the x-axis on a convenient curve", k);
    sum_y += b.ord_y().value();
    out.truncations.push_back(b.truncation());
  }
  const std::int64_t on_y_axis = f.at_x_zero().low_order();
  const std::int64_t on_x_axis = f.at_y_zero().low_order();
  if (sum_x != on_y_axis || sum_y != on_x_axis)
    throw Error(ErrorKind::BranchNotOnCurve,
                "branches do not account for the whole germ: sum ord x = " + std::to_string(sum_x) + " vs " +
                    std::to_string(on_y_axis) + ", sum ord y = " + std::to_string(sum_y) + " vs " +
                    std::to_string(on_x_axis));

  const std::size_t n = spec.branches.size();
  out.pairwise.assign(n, std::vector<ExtInt>(n, ExtInt::infinity()));
  std::vector<BivariatePoly> packets;
  for (const auto& b : spec.branches) packets.push_back(packet_polynomial(b));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.pairwise[i][j] = ord_along_branch(packets[i], spec.branches[j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (out.pairwise[i][j] != out.pairwise[j][i])
        throw Error(ErrorKind::Inconsistent, "branch intersection numbers are not symmetric");
  out.r0 = static_cast<std::int64_t>(n);
  return out;
}

LocalInvariants local_invariants(const BivariatePoly& f, std::int64_t r, const OracleOptions& opts) {
  LocalInvariants out;
  out.r = r;
  if (!squarefree_check(f)) {
    out.mu = ExtInt::infinity();
    out.delta = ExtInt::infinity();
    return out;
  }
  out.mu = milnor_number(f, opts);
  if (out.mu.is_infinite()) {
    out.delta = ExtInt::infinity();
    return out;
  }
  const std::int64_t twice = out.mu.value() + r - 1;
  if (twice < 0 || twice % 2 != 0)
    throw Error(ErrorKind::NonIntegerDelta,
                "mu + r - 1 = " + std::to_string(twice) + " is not a nonnegative even number");
  out.delta = twice / 2;
  return out;
}

}  // namespace curveinv
