// Acceptance run: one PASS/FAIL line per criterion, with the time spent and
// the time allowed. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "curveinv/error.hpp"
#include "curveinv/harness.hpp"

using namespace curveinv;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  if (!in_time) out.detail << "over time limit; ";
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %2d  %-58s %8.3f s / %6.0f s  %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), secs, limit_s,
              out.detail.str().c_str());
  std::fflush(stdout);
}

BivariatePoly monomial(std::int64_t i, std::int64_t j, const Rational& c = 1) {
  return BivariatePoly::monomial(c, static_cast<int>(i), static_cast<int>(j));
}

Rational small(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

// Convenient polynomial of order exactly d: x^d and y^d present, other terms
// of degree >= d.
BivariatePoly order_d_series(std::mt19937_64& rng, int d) {
  BivariatePoly f = monomial(d, 0, small(rng)) + monomial(0, d, small(rng));
  std::uniform_int_distribution<int> deg(d, d + 4), terms(0, 6);
  const int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    const int t = deg(rng);
    const int i = std::uniform_int_distribution<int>(0, t)(rng);
    f += monomial(i, t - i, small(rng));
  }
  if (f.ord_total() != ExtInt(d) || !is_convenient(f)) return monomial(d, 0) + monomial(0, d);
  return f;
}

// Polynomial with the given diagram: all vertices plus random points above it.
BivariatePoly with_diagram(std::mt19937_64& rng, const NewtonDiagram& d) {
  BivariatePoly f;
  for (const auto& v : d.vertices()) f += monomial(v.i, v.j, small(rng));
  std::uniform_int_distribution<int> coord(0, 12), terms(0, 5);
  const int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    const Exponent e{coord(rng), coord(rng)};
    if (d.contains(e)) f += monomial(e.i, e.j, small(rng));
  }
  return f;
}

bool all_present_and_passed(const VerificationReport& rep, const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    bool found = false;
    for (const auto& c : rep.comparisons) found = found || (c.label == l && c.passed);
    if (!found) return false;
  }
  return rep.passed();
}

std::string value_of(const VerificationReport& rep, const std::string& label, bool lhs) {
  for (const auto& c : rep.comparisons)
    if (c.label == label) return lhs ? c.lhs : c.rhs;
  return "?";
}

}  // namespace

int main() {
  const auto corpus = builtin_corpus();

  criterion(1, "blow-up closed forms for order d = 1..10", 1, [](Outcome& o) {
    std::mt19937_64 rng(1);
    for (int d = 1; d <= 10; ++d) {
      for (int rep = 0; rep < 3; ++rep) {
        const BivariatePoly f = order_d_series(rng, d);
        const NewtonDiagram t = thickened_diagram(newton_diagram(f), Fan::blowup());
        const DiagramInvariants inv = diagram_invariants(t);
        const std::string tag = "d=" + std::to_string(d);
        o.require(t == NewtonDiagram::from_vertices({{0, d}, {d, 0}}), tag + " segment");
        o.require(inv.mu == (d - 1) * (d - 1), tag + " mu");
        o.require(inv.r == d, tag + " r");
        o.require(inv.delta * 2 == d * (d - 1), tag + " delta");
        o.require(inv.area * 2 == d * d, tag + " P");
        o.require(minkowski_mixed(t, t).mixed == d * d, tag + " [D,D]");
      }
    }
    o.detail << "30 series";
  });

  criterion(2, "identity fan is trivial on the corpus", 1, [&](Outcome& o) {
    int n = 0;
    for (const auto& e : corpus) {
      const NamedCurve* g = e.g ? &*e.g : nullptr;
      const auto rep = verify_generalized(e.f, g, Fan::identity());
      o.require(all_present_and_passed(rep, {"identity: mu(D~f) = 1", "identity: r(D~f) = 0",
                                             "identity: delta(D~f) = 0", "identity: [D~f,D~f] = 0"}),
                e.name);
      ++n;
    }
    o.detail << n << " curves";
  });

  criterion(3, "nondegenerate series: equalities for mu, delta, r, (f,g)", 60, [](Outcome& o) {
    std::mt19937_64 rng(3);
    int singles = 0, pairs = 0;
    for (int k = 0; singles < 20 || pairs < 10; ++k) {
      const NewtonDiagram df = random_convenient_diagram(rng, 10);
      const NamedCurve f{"f", nondegenerate_curve(df, 3000 + k)};
      const NamedCurve* gp = nullptr;
      NamedCurve g;
      if (pairs < 10) {
        g = {"g", nondegenerate_curve(random_convenient_diagram(rng, 10), 5000 + k)};
        if (nondegenerate_pair(f.spec.poly, g.spec.poly)) gp = &g;
      }
      const auto rep = verify_kouchnirenko(f, gp);
      o.require(all_present_and_passed(rep, {"milnor: mu0(f) = mu(Df) (nondegenerate)",
                                             "delta: delta0(f) = delta(Df) (nondegenerate)",
                                             "branches: r0(f) = r(Df) (nondegenerate)"}),
                f.spec.poly.to_string());
      ++singles;
      if (gp) {
        o.require(all_present_and_passed(rep, {"intersection: (f,g)0 = [Df,Dg] (nondegenerate pair)"}),
                  g.spec.poly.to_string());
        ++pairs;
      }
    }
    o.detail << singles << " series, " << pairs << " pairs";
  });

  criterion(4, "degenerate series: inequalities for mu, delta, r, (f,g)", 60, [](Outcome& o) {
    int n = 0, strict = 0;
    for (std::uint64_t seed = 0; n < 20; ++seed) {
      const NamedCurve f{"f", degenerate_curve(seed)};
      const NamedCurve g{"g", degenerate_curve(seed + 7919)};
      if (gcd(f.spec.poly, g.spec.poly).total_degree() > 0) continue;
      o.require(!nondegenerate(f.spec.poly), "generated curve is degenerate");
      const auto rep = verify_kouchnirenko(f, &g);
      o.require(all_present_and_passed(rep, {"milnor: mu0(f) >= mu(Df)", "delta: delta0(f) >= delta(Df)",
                                             "branches: r0(f) <= r(Df)", "intersection: (f,g)0 >= [Df,Dg]"}),
                f.spec.poly.to_string());
      if (value_of(rep, "milnor: mu0(f) >= mu(Df)", true) != value_of(rep, "milnor: mu0(f) >= mu(Df)", false))
        ++strict;
      ++n;
    }
    o.detail << n << " curves, " << strict << " with mu0 > mu(D)";
  });

  criterion(5, "Noether formulas on the corpus", 30, [&](Outcome& o) {
    int n = 0;
    for (const auto& e : corpus) {
      const NamedCurve* g = e.g ? &*e.g : nullptr;
      const auto rep = verify_noether(e.f, g);
      o.require(all_present_and_passed(rep, {"delta: delta0(f) = delta(D~f) + sum delta_p",
                                             "milnor: mu0(f) = mu(D~f) + r(D~f) + sum (mu_p - 1)",
                                             "blow-up: delta(D~f) = ord f (ord f - 1) / 2"}),
                e.name);
      if (g)
        o.require(all_present_and_passed(rep, {"intersection: (f,g)0 = [D~f,D~g] + sum (f~,g~)_p",
                                               "blow-up: [D~f,D~g] = ord f ord g"}),
                  e.name + " pair");
      ++n;
    }
    // The cusp pair: 6 = 2 * 2 + 2.
    const auto p = [](int a) { return BivariatePoly::monomial(1, 0, 2) - BivariatePoly::monomial(1, a, 0); };
    const NamedCurve f{"y^2-x^3", {p(3), {BranchParam(2, 1, {{3, 1}}, 16)}, ""}};
    const NamedCurve g{"y^2-x^5", {p(5), {BranchParam(2, 1, {{5, 1}}, 16)}, ""}};
    const auto rep = verify_noether(f, &g);
    o.require(rep.passed(), "cusp pair");
    o.require(value_of(rep, "intersection: (f,g)0 = [D~f,D~g] + sum (f~,g~)_p", true) == "6", "(f,g)0 = 6");
    o.require(value_of(rep, "blow-up: [D~f,D~g] = ord f ord g", true) == "4", "[D~f,D~g] = 4");
    std::int64_t at_points = 0;
    for (const auto& pt : rep.points)
      if (pt.intersection) at_points += pt.intersection->value();
    o.require(at_points == 2, "sum at points = 2");
    o.detail << n << " corpus entries, cusp pair 6 = 4 + " << at_points;
  });

  criterion(6, "toric modification formulas on corpus x fans", 300, [&](Outcome& o) {
    int combos = 0, points = 0;
    for (const auto& e : corpus) {
      const NamedCurve* g = e.g ? &*e.g : nullptr;
      for (const auto& fan : e.fans) {
        const auto rep = verify_generalized(e.f, g, fan);
        std::vector<std::string> labels{"milnor: mu0(f) = mu(D~f) + r(D~f) + sum (mu_p - 1)",
                                        "delta: delta0(f) = delta(D~f) + sum delta_p"};
        if (g) labels.emplace_back("intersection: (f,g)0 = [D~f,D~g] + sum (f~,g~)_p");
        o.require(all_present_and_passed(rep, labels), e.name + " / " + rep.inputs.back());
        o.require(!rep.points.empty(), e.name + " per-point breakdown");
        points += static_cast<int>(rep.points.size());
        ++combos;
      }
    }
    o.require(combos >= 30, "at least 30 combinations");
    o.detail << combos << " combinations, " << points << " points";
  });

  criterion(7, "chart factorization along blow-up sequences", 10, [](Outcome& o) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Fan fan = random_fan(2 + seed % 7, 7000 + seed);
      o.require(verify_decomposition(fan).passed(), "fan seed " + std::to_string(seed));
    }
    o.detail << "50 fans, 2..8 rays";
  });

  criterion(8, "residual order at chart origins", 30, [](Outcome& o) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 100; ++k) {
      const NewtonDiagram d = random_convenient_diagram(rng, 10);
      const BivariatePoly f = with_diagram(rng, d);
      const Fan fan = random_fan(2 + k % 9, 8000 + k);
      const std::size_t c = std::uniform_int_distribution<std::size_t>(0, fan.cone_count() - 1)(rng);
      const SimpleCone cone = fan.cone(c);
      const std::int64_t expected =
          support_function(d, cone.xi + cone.nu) - support_function(d, cone.xi) - support_function(d, cone.nu);
      o.require(proper_transform(f, cone, c).residual.ord_total() == ExtInt(expected), f.to_string());
    }
    o.detail << "100 triples";
  });

  criterion(9, "oracle agreement and delta integrality", 120, [&](Outcome& o) {
    std::mt19937_64 rng(9);
    int pairs = 0;
    while (pairs < 50) {
      const NewtonDiagram df = random_convenient_diagram(rng, 7), dg = random_convenient_diagram(rng, 7);
      const BivariatePoly f = with_diagram(rng, df), g = with_diagram(rng, dg);
      if (gcd(f, g).total_degree() > 0) continue;
      const std::int64_t q = quotient_dimension(f, g, 128);
      const std::int64_t r = sheared_resultant_order(f, g, 1 + pairs);
      o.require(q == r, f.to_string() + " / " + g.to_string());
      ++pairs;
    }
    int curves = 0;
    for (const auto& e : corpus)
      for (const NamedCurve* c : {&e.f, e.g ? &*e.g : nullptr}) {
        if (!c || c->spec.branches.empty()) continue;
        const auto v = validate_curve_spec(c->spec);
        const auto li = local_invariants(c->spec.poly, v.r0);
        o.require(li.delta.is_finite() && 2 * li.delta.value() == li.mu.value() + v.r0 - 1, c->name);
        ++curves;
      }
    o.detail << pairs << " pairs, " << curves << " corpus curves";
  });

  criterion(10, "fan round trips and decomposition replay", 5, [](Outcome& o) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Fan fan = random_fan(2 + seed % 10, 10000 + seed);
      std::mt19937_64 rng(seed);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, fan.cone_count() - 1)(rng);
      const Fan fine = subdivide(fan, k);
      std::vector<Vec2> rays = fine.rays();
      rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(k + 1));
      o.require(validate_fan(rays) == fan, "contract after subdivide");
      const auto c = find_and_contract(fine);
      o.require(subdivide(c.contracted, c.index - 1) == fine, "subdivide after contract");
      Fan replay = Fan::identity();
      for (const auto& st : blowup_decomposition(fan)) replay = subdivide(replay, st.cone_index);
      o.require(replay == fan, "replay");
    }
    o.detail << "200 fans";
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
