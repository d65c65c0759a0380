#include "curveinv/branch.hpp"

#include "curveinv/error.hpp"

namespace curveinv {

BranchParam::BranchParam(int m, Rational cx, std::vector<YTerm> y_terms, int truncation)
    : m_(m), cx_(std::move(cx)), y_terms_(std::move(y_terms)), truncation_(truncation) {
  if (m_ <= 0) throw Error(ErrorKind::InvalidArgument, "branch x-exponent must be positive");
  if (cx_ == 0) throw Error(ErrorKind::InvalidArgument, "branch x-coefficient must be nonzero");
  if (truncation_ < m_) throw Error(ErrorKind::InvalidArgument, "truncation below x-exponent");
  std::erase_if(y_terms_, [](const YTerm& t) { return t.second == 0; });
  int last = 0;
  for (const auto& [k, c] : y_terms_) {
    if (k <= last) throw Error(ErrorKind::InvalidArgument, "y-term exponents must be >= 1 and strictly increasing");
    if (k > truncation_) throw Error(ErrorKind::InvalidArgument, "y-term exponent beyond truncation");
    last = k;
  }
}

ExtInt BranchParam::ord_y() const {
  if (y_terms_.empty()) return ExtInt::infinity();
  return y_terms_.front().first;
}

std::vector<Rational> BranchParam::y_series() const {
  std::vector<Rational> y(static_cast<std::size_t>(truncation_) + 1);
  for (const auto& [k, c] : y_terms_) y[static_cast<std::size_t>(k)] = c;
  return y;
}

namespace {

std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const std::size_t n = a.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

ExtInt ord_along_branch(const BivariatePoly& f, const BranchParam& gamma, bool declared_root) {
  const std::size_t n = static_cast<std::size_t>(gamma.truncation()) + 1;
  const std::vector<Rational> y = gamma.y_series();

  std::vector<std::vector<Rational>> ypow;
  ypow.emplace_back(n);
  ypow[0][0] = 1;
  for (int k = 1; k <= f.degree_y(); ++k) ypow.push_back(mul_trunc(ypow.back(), y));

  std::vector<Rational> acc(n);
  for (const auto& [e, c] : f.terms()) {
    const std::size_t shift = static_cast<std::size_t>(gamma.m()) * static_cast<std::size_t>(e.i);
    if (shift >= n) continue;
    Rational coef = c;
    for (int k = 0; k < e.i; ++k) coef *= gamma.cx();
    const auto& yp = ypow[static_cast<std::size_t>(e.j)];
    for (std::size_t t = 0; t + shift < n; ++t)
      if (yp[t] != 0) acc[t + shift] += coef * yp[t];
  }
  for (std::size_t t = 0; t < n; ++t)
    if (acc[t] != 0) return static_cast<std::int64_t>(t);
  if (declared_root) return ExtInt::infinity();
  throw Error(ErrorKind::TruncationTooShort,
              "f vanishes along the branch up to t^" + std::to_string(gamma.truncation()));
}

BivariatePoly packet_polynomial(const BranchParam& gamma) {
  const int m = gamma.m();
  const Rational inv_cx = Rational(1) / gamma.cx();
  using Matrix = std::vector<std::vector<UniPoly>>;
  const auto msize = static_cast<std::size_t>(m);

  // s^k = s^(k mod m) * (x / cx)^(k div m) in Q[x][s]/(s^m - x/cx).
  auto reduce_power = [&](int k) {
    Rational c = 1;
    for (int q = 0; q < k / m; ++q) c *= inv_cx;
    return std::pair{k % m, UniPoly::monomial(c, k / m)};
  };

  Matrix a(msize, std::vector<UniPoly>(msize));
  for (int r = 0; r < m; ++r) {
    for (const auto& [k, c] : gamma.y_terms()) {
      auto [row, xpoly] = reduce_power(r + k);
      auto& cell = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(r)];
      cell = cell + c * xpoly;
    }
  }

  auto mul = [&](const Matrix& l, const Matrix& r) {
    Matrix out(msize, std::vector<UniPoly>(msize));
    for (std::size_t i = 0; i < msize; ++i)
      for (std::size_t k = 0; k < msize; ++k) {
        if (l[i][k].is_zero()) continue;
        for (std::size_t j = 0; j < msize; ++j) out[i][j] = out[i][j] + l[i][k] * r[k][j];
      }
    return out;
  };

  // Faddeev-LeVerrier: only divisions by the integers 1..m are needed.
  std::vector<UniPoly> charpoly(msize + 1);
  charpoly[msize] = UniPoly::constant(1);
  Matrix mk(msize, std::vector<UniPoly>(msize));
  for (int k = 1; k <= m; ++k) {
    Matrix am = mul(a, mk);
    for (std::size_t i = 0; i < msize; ++i)
      am[i][i] = am[i][i] + charpoly[msize - static_cast<std::size_t>(k) + 1];
    mk = std::move(am);
    const Matrix amk = mul(a, mk);
    UniPoly trace;
    for (std::size_t i = 0; i < msize; ++i) trace = trace + amk[i][i];
    charpoly[msize - static_cast<std::size_t>(k)] = (Rational(-1) / k) * trace;
  }
  return BivariatePoly::from_y_major(charpoly);
}

}  // namespace curveinv
