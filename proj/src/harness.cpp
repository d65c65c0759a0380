#include "curveinv/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "curveinv/error.hpp"

namespace curveinv {

bool VerificationReport::passed() const {
  return std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.passed; });
}

bool VerificationReport::compare(std::string label, ExtInt lhs, std::string relation, ExtInt rhs) {
  bool ok = false;
  if (relation == "=") ok = lhs == rhs;
  else if (relation == ">=") ok = lhs >= rhs;
  else if (relation == "<=") ok = lhs <= rhs;
  else throw Error(ErrorKind::Internal, "unknown relation " + relation);
  comparisons.push_back({std::move(label), lhs.to_string(), std::move(relation), rhs.to_string(), ok});
  return ok;
}

bool VerificationReport::check(std::string label, bool ok, std::string detail) {
  comparisons.push_back({std::move(label), ok ? "true" : "false", "=", "true", ok});
  if (!ok && !detail.empty()) notes.push_back(comparisons.back().label + ": " + detail);
  return ok;
}

namespace {

using Clock = std::chrono::steady_clock;

ExtInt integral(const Rational& q, const char* what) {
  if (!is_integer(q)) throw Error(ErrorKind::Internal, std::string(what) + " is not an integer: " + to_string(q));
  return static_cast<std::int64_t>(q.get_num().get_si());
}

struct Prepared {
  std::optional<ValidatedCurve> validated;
  std::optional<std::int64_t> r0;
};

Prepared prepare(const NamedCurve& c, VerificationReport& rep) {
  Prepared p;
  if (c.spec.branches.empty()) {
    rep.notes.push_back(c.name + ": no branch data, r0 and delta checks skipped");
    return p;
  }
  p.validated = validate_curve_spec(c.spec);
  p.r0 = p.validated->r0;
  for (int t : p.validated->truncations) rep.truncations.push_back(t);
  return p;
}

ExtInt milnor_logged(const BivariatePoly& f, const OracleOptions& opts, VerificationReport& rep) {
  const IntersectionDetail d = milnor_detail(f, opts);
  if (d.degree_used > 0) rep.oracle_degrees.push_back(d.degree_used);
  return d.value;
}

ExtInt intersection_logged(const BivariatePoly& f, const BivariatePoly& g, const OracleOptions& opts,
                           VerificationReport& rep) {
  const IntersectionDetail d = intersection_detail(f, g, opts);
  if (d.degree_used > 0) rep.oracle_degrees.push_back(d.degree_used);
  return d.value;
}

// delta = (mu + r - 1) / 2 for finite mu; inf otherwise.
ExtInt delta_of(ExtInt mu, std::int64_t r) {
  if (mu.is_infinite()) return ExtInt::infinity();
  const std::int64_t twice = mu.value() + r - 1;
  if (twice < 0 || twice % 2 != 0)
    throw Error(ErrorKind::NonIntegerDelta, "mu = " + mu.to_string() + ", r = " + std::to_string(r));
  return twice / 2;
}

// Per-point data of one curve under a fan.
struct PointData {
  PointKey key;
  BivariatePoly localized;
  ExtInt mu;
  std::int64_t r = 0;
};

std::string key_label(const PointKey& k) {
  return "chart " + std::to_string(k.chart) + (k.axis == Axis::U ? " u=0 v=" : " v=0 u=") + to_string(k.coordinate);
}

// Exceptional points of a curve with their branch counts. For the identity
// fan the only point is the origin itself with the curve unchanged.
std::vector<PointData> curve_points(const NamedCurve& c, const Prepared& prep, const Fan& fan,
                                    const OracleOptions& opts, VerificationReport& rep, const std::string& tag) {
  std::vector<PointData> out;
  if (fan.is_identity()) {
    PointData p{{0, Axis::V, 0}, c.spec.poly, milnor_logged(c.spec.poly, opts, rep), prep.r0.value_or(0)};
    out.push_back(std::move(p));
    return out;
  }
  for (const auto& ep : exceptional_points(c.spec.poly, fan))
    out.push_back({ep.key, ep.localized, milnor_logged(ep.localized, opts, rep), 0});
  if (!prep.validated) return out;

  std::map<PointKey, std::int64_t> landed;
  for (const auto& b : prep.validated->branches) ++landed[transport_branch(b, fan).landing];
  std::int64_t total = 0, stray = 0;
  for (const auto& [key, n] : landed) {
    auto it = std::find_if(out.begin(), out.end(), [&](const PointData& p) { return p.key == key; });
    if (it == out.end()) {
      stray += n;
      rep.notes.push_back(tag + ": branch landed off the transform at " + key_label(key));
    } else {
      it->r = n;
    }
    total += n;
  }
  rep.compare(tag + " branches: r0 = sum over points of r_p", *prep.r0, "=", total);
  rep.compare(tag + " branches landing off the transform", stray, "=", 0);
  std::int64_t empty = 0;
  for (const auto& p : out)
    if (p.r == 0) ++empty;
  rep.compare(tag + " points of the transform without a branch", empty, "=", 0);
  return out;
}

// Order of each chart residual at the chart origin.
void chart_orders(const NamedCurve& c, const Fan& fan, VerificationReport& rep, const std::string& tag) {
  const NewtonDiagram d = newton_diagram(c.spec.poly);
  for (std::size_t k = 0; k < fan.cone_count(); ++k) {
    const ProperTransform pt = proper_transform(c.spec.poly, fan.cone(k), k);
    rep.compare(tag + " chart " + std::to_string(k) + " residual order at origin", pt.residual.ord_total(), "=",
                chart_origin_order(d, fan.cone(k)));
  }
}

}  // namespace

VerificationReport verify_generalized(const NamedCurve& f, const NamedCurve* g, const Fan& fan,
                                      const OracleOptions& opts) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.theorem = "t3";
  rep.inputs.push_back(f.name);
  if (g) rep.inputs.push_back(g->name);
  {
    std::string rays = "fan";
    for (const auto& r : fan.rays()) rays += " (" + std::to_string(r.x1) + "," + std::to_string(r.x2) + ")";
    rep.inputs.push_back(rays);
  }

  const Prepared pf = prepare(f, rep);
  const NewtonDiagram tf = thickened_diagram(newton_diagram(f.spec.poly), fan);
  const DiagramInvariants inv = diagram_invariants(tf);
  const auto fpoints = curve_points(f, pf, fan, opts, rep, "f");
  if (fan.is_identity()) {
    rep.compare("identity: mu(D~f) = 1", inv.mu, "=", 1);
    rep.compare("identity: r(D~f) = 0", inv.r, "=", 0);
    rep.compare("identity: delta(D~f) = 0", integral(inv.delta, "delta(D~f)"), "=", 0);
    rep.compare("identity: [D~f,D~f] = 0", integral(minkowski_mixed(tf, tf).mixed, "[D~f,D~f]"), "=", 0);
  } else {
    chart_orders(f, fan, rep, "f");
  }

  for (const auto& p : fpoints) {
    PointReport pr{"f", p.key, p.localized.to_string('u', 'v'), p.mu, p.r, std::nullopt, std::nullopt};
    if (pf.r0) pr.delta = delta_of(p.mu, p.r);
    rep.points.push_back(std::move(pr));
  }

  // Milnor number identity. Points where the transform does not vanish do
  // not occur in the list, so the sum runs over the right set.
  const ExtInt mu0 = milnor_logged(f.spec.poly, opts, rep);
  ExtInt mu_rhs = inv.mu + inv.r - static_cast<std::int64_t>(fpoints.size());
  for (const auto& p : fpoints) mu_rhs += p.mu;
  rep.compare("milnor: mu0(f) = mu(D~f) + r(D~f) + sum (mu_p - 1)", mu0, "=", mu_rhs);

  if (pf.r0) {
    const ExtInt delta0 = delta_of(mu0, *pf.r0);
    ExtInt delta_rhs = integral(inv.delta, "delta(D~f)");
    for (const auto& p : fpoints) delta_rhs += delta_of(p.mu, p.r);
    rep.compare("delta: delta0(f) = delta(D~f) + sum delta_p", delta0, "=", delta_rhs);
  }

  if (g) {
    const Prepared pg = prepare(*g, rep);
    const NewtonDiagram tg = thickened_diagram(newton_diagram(g->spec.poly), fan);
    const ExtInt mixed = integral(minkowski_mixed(tf, tg).mixed, "[D~f,D~g]");
    const auto gpoints = curve_points(*g, pg, fan, opts, rep, "g");
    if (!fan.is_identity()) chart_orders(*g, fan, rep, "g");
    ExtInt rhs = mixed;
    for (const auto& q : gpoints) {
      PointReport pr{"g", q.key, q.localized.to_string('u', 'v'), q.mu, q.r, std::nullopt, std::nullopt};
      auto it = std::find_if(fpoints.begin(), fpoints.end(), [&](const PointData& p) { return p.key == q.key; });
      if (it != fpoints.end()) {
        const ExtInt ip = intersection_logged(it->localized, q.localized, opts, rep);
        pr.intersection = ip;
        rhs += ip;
      }
      rep.points.push_back(std::move(pr));
    }
    const ExtInt lhs = intersection_logged(f.spec.poly, g->spec.poly, opts, rep);
    rep.compare("intersection: (f,g)0 = [D~f,D~g] + sum (f~,g~)_p", lhs, "=", rhs);
  }

  rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

VerificationReport verify_noether(const NamedCurve& f, const NamedCurve* g, const OracleOptions& opts) {
  const auto start = Clock::now();
  const Fan fan = Fan::blowup();
  VerificationReport rep = verify_generalized(f, g, fan, opts);
  rep.theorem = "t2";

  // The diagram terms of the blow-up specialize to expressions in ord.
  const std::int64_t df = f.spec.poly.ord_total().value();
  const NewtonDiagram tf = thickened_diagram(newton_diagram(f.spec.poly), fan);
  const DiagramInvariants inv = diagram_invariants(tf);
  rep.compare("blow-up: delta(D~f) = ord f (ord f - 1) / 2", integral(inv.delta, "delta"), "=", df * (df - 1) / 2);
  rep.compare("blow-up: mu(D~f) + r(D~f) - 1 = ord f (ord f - 1)", inv.mu + inv.r - 1, "=", df * (df - 1));
  if (g) {
    const std::int64_t dg = g->spec.poly.ord_total().value();
    const NewtonDiagram tg = thickened_diagram(newton_diagram(g->spec.poly), fan);
    rep.compare("blow-up: [D~f,D~g] = ord f ord g", integral(minkowski_mixed(tf, tg).mixed, "mixed"), "=", df * dg);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

VerificationReport verify_kouchnirenko(const NamedCurve& f, const NamedCurve* g, const OracleOptions& opts) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.theorem = "t1";
  rep.inputs.push_back(f.name);
  if (g) rep.inputs.push_back(g->name);

  const Prepared pf = prepare(f, rep);
  const NewtonDiagram df = newton_diagram(f.spec.poly);
  const DiagramInvariants inv = diagram_invariants(df);
  const bool nd = nondegenerate(f.spec.poly);
  rep.notes.push_back(f.name + (nd ? " is nondegenerate" : " is degenerate"));

  const ExtInt mu0 = milnor_logged(f.spec.poly, opts, rep);
  rep.compare("milnor: mu0(f) >= mu(Df)", mu0, ">=", inv.mu);
  if (nd) rep.compare("milnor: mu0(f) = mu(Df) (nondegenerate)", mu0, "=", inv.mu);
  if (pf.r0) {
    const ExtInt delta0 = delta_of(mu0, *pf.r0);
    const ExtInt dd = integral(inv.delta, "delta(Df)");
    rep.compare("delta: delta0(f) >= delta(Df)", delta0, ">=", dd);
    rep.compare("branches: r0(f) <= r(Df)", *pf.r0, "<=", inv.r);
    if (nd) {
      rep.compare("delta: delta0(f) = delta(Df) (nondegenerate)", delta0, "=", dd);
      rep.compare("branches: r0(f) = r(Df) (nondegenerate)", *pf.r0, "=", inv.r);
    }
  }

  std::vector<BivariatePoly> polys{f.spec.poly};
  bool pair_nd = false;
  if (g) {
    prepare(*g, rep);
    const NewtonDiagram dg = newton_diagram(g->spec.poly);
    const ExtInt mixed = integral(minkowski_mixed(df, dg).mixed, "[Df,Dg]");
    const ExtInt fg = intersection_logged(f.spec.poly, g->spec.poly, opts, rep);
    rep.compare("intersection: (f,g)0 >= [Df,Dg]", fg, ">=", mixed);
    pair_nd = nondegenerate_pair(f.spec.poly, g->spec.poly);
    rep.notes.push_back(pair_nd ? "pair is nondegenerate" : "pair is degenerate");
    if (pair_nd) rep.compare("intersection: (f,g)0 = [Df,Dg] (nondegenerate pair)", fg, "=", mixed);
    polys.push_back(g->spec.poly);
  }

  // Expected for nondegenerate input: with a fan adapted to the polygons the
  // transforms are smooth on the divisor and, for a nondegenerate pair, have
  // no common point there.
  if (nd) {
    const Fan fan = newton_adapted_fan(polys);
    std::vector<ExceptionalPoint> fpts;
    try {
      fpts = exceptional_points(f.spec.poly, fan);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IrrationalExceptionalPoint) throw;
      rep.notes.push_back("divisor checks skipped: " + std::string(e.what()));
      rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      return rep;
    }
    std::int64_t singular = 0;
    for (const auto& p : fpts)
      if (milnor_logged(p.localized, opts, rep) != 0) ++singular;
    rep.compare("expected: singular points of f~ on the divisor", singular, "=", 0);
    if (g && pair_nd) {
      std::set<PointKey> fk;
      for (const auto& p : fpts) fk.insert(p.key);
      std::int64_t common = 0;
      try {
        for (const auto& q : exceptional_points(g->spec.poly, fan)) common += fk.count(q.key);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::IrrationalExceptionalPoint) throw;
        rep.notes.push_back("common point check skipped: " + std::string(e.what()));
        common = -1;
      }
      if (common >= 0)
        rep.compare("expected: common points of f~ and g~ on the divisor", common, "=", 0);
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

VerificationReport verify_decomposition(const Fan& fan) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.theorem = "t4";
  {
    std::string rays = "fan";
    for (const auto& r : fan.rays()) rays += " (" + std::to_string(r.x1) + "," + std::to_string(r.x2) + ")";
    rep.inputs.push_back(rays);
  }
  // A polynomial with distinct exponents in general position, to compare
  // chart maps also through their action on functions.
  const BivariatePoly probe = BivariatePoly::constant(1) + BivariatePoly::monomial(2, 1, 0) +
                              BivariatePoly::monomial(3, 0, 1) + BivariatePoly::monomial(5, 2, 1) +
                              BivariatePoly::monomial(7, 1, 3);

  const auto steps = blowup_decomposition(fan);
  Fan current = Fan::identity();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto& st = steps[s];
    const std::string tag = "step " + std::to_string(s + 1);
    rep.check(tag + ": starts from the previous fan", st.coarse == current);
    const Fan fine = subdivide(st.coarse, st.cone_index);
    const std::size_t k = st.cone_index;
    rep.check(tag + ": inserted ray is the cone sum", fine.rays()[k + 1] == st.inserted);
    const MonomialMap coarse = MonomialMap::chart(st.coarse.cone(k));
    const MonomialMap first = MonomialMap::chart(fine.cone(k));
    const MonomialMap second = MonomialMap::chart(fine.cone(k + 1));
    rep.check(tag + ": first chart = coarse chart o (uv, v)", first == coarse.compose(MonomialMap::blowup_first()));
    rep.check(tag + ": second chart = coarse chart o (u, uv)", second == coarse.compose(MonomialMap::blowup_second()));
    rep.check(tag + ": first chart pullback factors",
              first.pullback(probe) == MonomialMap::blowup_first().pullback(coarse.pullback(probe)));
    rep.check(tag + ": second chart pullback factors",
              second.pullback(probe) == MonomialMap::blowup_second().pullback(coarse.pullback(probe)));
    bool same = true;
    for (std::size_t j = 0; j < st.coarse.cone_count(); ++j) {
      if (j < k) same = same && st.coarse.cone(j) == fine.cone(j);
      if (j > k) same = same && st.coarse.cone(j) == fine.cone(j + 1);
    }
    rep.check(tag + ": unaffected charts are unchanged", same);
    current = fine;
  }
  rep.check("replay reproduces the fan", current == fan);
  rep.compare("number of steps = rays - 2", static_cast<std::int64_t>(steps.size()), "=",
              static_cast<std::int64_t>(fan.rays().size()) - 2);
  rep.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

// --- Generation ------------------------------------------------------------

namespace {

Rational small_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(1, num_bound), den(1, den_bound), sign(0, 1);
  Rational q(num(rng) * (sign(rng) ? 1 : -1), den(rng));
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, std::int64_t e) {
  Rational b = e < 0 ? Rational(1) / base : base;
  Rational acc = 1;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) acc *= b;
  return acc;
}

// alpha * q - beta * p = 1 for coprime p, q >= 0.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t q, std::int64_t p) {
  std::int64_t old_r = q, r = p, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
    std::tie(old_t, t) = std::pair{t, old_t - quot * t};
  }
  // old_s * q + old_t * p = 1
  return {old_s, -old_t};
}

using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n);
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series series_inverse(const Series& a, std::size_t n) {
  Series out(n);
  out[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational s = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * out[k - j];
    out[k] = -s * out[0];
  }
  return out;
}

// F(t, Z) = sum c * t^shift * Z^j with the shifts precomputed.
struct ShiftedTerm {
  std::size_t shift;
  int j;
  Rational coef;
};

// F and dF/dZ at Z, modulo t^n.
std::pair<Series, Series> eval_shifted(const std::vector<ShiftedTerm>& terms, int max_j, const Series& z,
                                       std::size_t n) {
  std::vector<Series> pw;
  pw.emplace_back(n);
  pw[0][0] = 1;
  for (int k = 1; k <= max_j; ++k) pw.push_back(series_mul(pw.back(), z, n));
  Series f(n), fz(n);
  for (const auto& t : terms) {
    if (t.shift >= n) continue;
    for (std::size_t k = 0; k + t.shift < n; ++k) {
      f[k + t.shift] += t.coef * pw[static_cast<std::size_t>(t.j)][k];
      if (t.j > 0) fz[k + t.shift] += t.coef * t.j * pw[static_cast<std::size_t>(t.j - 1)][k];
    }
  }
  return {f, fz};
}

}  // namespace

NewtonDiagram random_convenient_diagram(std::mt19937_64& rng, int box) {
  std::uniform_int_distribution<int> axis(1, box), inner(1, std::max(1, box - 1)), extra(0, 4);
  BivariatePoly::TermMap t;
  t[{axis(rng), 0}] = 1;
  t[{0, axis(rng)}] = 1;
  const int n = extra(rng);
  for (int k = 0; k < n; ++k) t[{inner(rng), inner(rng)}] = 1;
  return newton_diagram(BivariatePoly(std::move(t)));
}

BivariatePoly generate_nondegenerate(const NewtonDiagram& diagram, std::uint64_t seed) {
  if (!diagram.is_convenient()) throw Error(ErrorKind::NotConvenient, "generate_nondegenerate");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Rational lambda = small_rational(rng, 5, 1);
    BivariatePoly::TermMap terms;
    if (diagram.vertices().size() == 1) terms[diagram.vertices().front()] = lambda;
    for (const auto& face : diagram.edges()) {
      const int g = static_cast<int>(face.lattice_length());
      const int p = (face.end.i - face.start.i) / g;
      const int q = (face.start.j - face.end.j) / g;
      std::set<Rational> roots;
      while (static_cast<int>(roots.size()) < g) roots.insert(small_rational(rng, 6, 3));
      // lambda x^i0 y^j1 prod (y^q - c x^p); its coefficient at the start
      // vertex is lambda.
      BivariatePoly fp = lambda * BivariatePoly::monomial(1, face.start.i, face.end.j);
      for (const auto& c : roots) fp *= BivariatePoly::monomial(1, 0, q) - BivariatePoly::monomial(c, p, 0);
      for (const auto& [e, c] : fp.terms()) terms[e] = c;
      lambda = fp.coeff(face.end.i, face.end.j);
    }
    BivariatePoly f(std::move(terms));
    if (!(newton_diagram(f) == diagram) || !nondegenerate(f)) continue;
    bool split = true;
    for (const auto& [face, fp] : face_polynomials(f)) split = split && rational_roots(face_univariate(face, fp)).complete;
    if (split) return f;
  }
  throw Error(ErrorKind::RetriesExhausted, "generate_nondegenerate: no admissible coefficients after 100 draws");
}

std::vector<BranchParam> lift_branches(const BivariatePoly& f, int truncation) {
  std::vector<BranchParam> out;
  for (const auto& [face, fp] : face_polynomials(f)) {
    const std::int64_t g = face.lattice_length();
    const std::int64_t p = (face.end.i - face.start.i) / g;  // ord y(t)
    const std::int64_t q = (face.start.j - face.end.j) / g;  // ord x(t)
    const std::int64_t level = dot(face.start, face.normal);
    const RationalRoots roots = rational_roots(face_univariate(face, fp));
    if (!roots.complete)
      throw Error(ErrorKind::IrrationalExceptionalPoint, "lift_branches: face polynomial does not split over Q");
    const auto [alpha, beta] = bezout(q, p);
    const std::int64_t k_terms = truncation - p + 1;
    if (k_terms < 1) throw Error(ErrorKind::TruncationTooShort, "lift_branches: truncation below ord y");
    const auto n = static_cast<std::size_t>(k_terms);

    for (const auto& r : roots.roots) {
      if (r.multiplicity != 1) throw Error(ErrorKind::InvalidArgument, "lift_branches: repeated packet root");
      // x = a t^q, y = t^p Z(t) with Z(0) = b and b^q / a^p = s.
      const Rational a = rational_pow(r.root, beta);
      const Rational b = rational_pow(r.root, alpha);
      std::vector<ShiftedTerm> terms;
      for (const auto& [e, c] : f.terms()) {
        const std::int64_t shift = q * e.i + p * e.j - level;
        terms.push_back({static_cast<std::size_t>(shift), e.j, c * rational_pow(a, e.i)});
      }
      const int max_j = f.degree_y();
      Series z{b};
      std::size_t prec = 1;
      while (prec < n) {
        prec = std::min(2 * prec, n);
        z.resize(prec);
        auto [fv, fz] = eval_shifted(terms, max_j, z, prec);
        const Series step = series_mul(fv, series_inverse(fz, prec), prec);
        for (std::size_t k = 0; k < prec; ++k) z[k] -= step[k];
      }
      const auto [fv, fz] = eval_shifted(terms, max_j, z, n);
      if (std::any_of(fv.begin(), fv.end(), [](const Rational& v) { return v != 0; }))
        throw Error(ErrorKind::Internal, "lift_branches: Newton iteration did not converge");
      std::vector<BranchParam::YTerm> ys;
      for (std::size_t k = 0; k < n; ++k)
        if (z[k] != 0) ys.emplace_back(static_cast<int>(p + static_cast<std::int64_t>(k)), z[k]);
      out.emplace_back(static_cast<int>(q), a, std::move(ys), truncation);
    }
  }
  return out;
}

CurveSpec curve_from_branches(std::vector<BranchParam> branches, std::string provenance) {
  BivariatePoly f = BivariatePoly::constant(1);
  for (const auto& b : branches) f *= packet_polynomial(b);
  return {std::move(f), std::move(branches), std::move(provenance)};
}

CurveSpec nondegenerate_curve(const NewtonDiagram& diagram, std::uint64_t seed, int truncation) {
  BivariatePoly f = generate_nondegenerate(diagram, seed);
  auto branches = lift_branches(f, truncation);
  return {std::move(f), std::move(branches), "generated nondegenerate, seed " + std::to_string(seed)};
}

CurveSpec degenerate_curve(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mdist(1, 3), kdist(1, 4), gap(1, 3), count(0, 1);
  auto random_branch = [&](int m, int k1, const Rational& c1) {
    // A second term keeps the parameterization primitive when gcd(m, k1) > 1.
    int k2 = k1 + gap(rng);
    while (std::gcd(std::gcd(m, k1), k2) != 1) ++k2;
    return std::vector<BranchParam::YTerm>{{k1, c1}, {k2, small_rational(rng, 4, 2)}};
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    const int m = mdist(rng), k1 = kdist(rng);
    const Rational c1 = small_rational(rng, 3, 2);
    auto y1 = random_branch(m, k1, c1);
    auto y2 = random_branch(m, k1, c1);
    if (y1 == y2) continue;
    std::vector<std::vector<BranchParam::YTerm>> ys{y1, y2};
    std::vector<int> ms{m, m};
    if (count(rng)) {
      const int m3 = mdist(rng);
      ys.push_back(random_branch(m3, kdist(rng), small_rational(rng, 3, 2)));
      ms.push_back(m3);
    }
    int trunc = 0;
    for (const auto& y : ys) trunc = std::max(trunc, y.back().first);
    for (int m_ : ms) trunc = std::max(trunc, m_);
    std::vector<BranchParam> branches;
    for (std::size_t k = 0; k < ys.size(); ++k) branches.emplace_back(ms[k], Rational(1), ys[k], trunc);
    CurveSpec spec = curve_from_branches(std::move(branches), "degenerate from branches, seed " + std::to_string(seed));
    if (nondegenerate(spec.poly)) continue;
    try {
      validate_curve_spec(spec);
    } catch (const Error&) {
      continue;
    }
    return spec;
  }
  throw Error(ErrorKind::RetriesExhausted, "degenerate_curve: no admissible branch set after 100 draws");
}

Fan random_refinement(const Fan& base, std::size_t steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Fan fan = base;
  for (std::size_t s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, fan.cone_count() - 1);
    fan = subdivide(fan, pick(rng));
  }
  return fan;
}

Fan random_fan(std::size_t rays, std::uint64_t seed) {
  if (rays < 2) throw Error(ErrorKind::InvalidArgument, "a fan has at least 2 rays");
  return random_refinement(Fan::identity(), rays - 2, seed);
}

Fan newton_adapted_fan(const std::vector<BivariatePoly>& polys) {
  std::vector<PrimitiveVector> normals;
  for (const auto& p : polys)
    for (const auto& face : newton_diagram(p).edges()) normals.emplace_back(face.normal);
  return fan_from_normals(normals);
}

}  // namespace curveinv
