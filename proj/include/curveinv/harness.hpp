#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curveinv/bivariate.hpp"
#include "curveinv/fan.hpp"
#include "curveinv/newton.hpp"
#include "curveinv/oracles.hpp"
#include "curveinv/toric.hpp"

namespace curveinv {

// One compared identity or inequality. Both sides are exact values rendered
// as strings ("inf" for +infinity).
struct Comparison {
  std::string label;
  std::string lhs;
  std::string relation;  // "=", ">=" or "<="
  std::string rhs;
  bool passed = false;
};

struct PointReport {
  std::string curve;  // "f" or "g"
  PointKey key;
  std::string localized;
  ExtInt mu;
  std::int64_t r = 0;
  std::optional<ExtInt> delta;
  // (f~, g~)_p, present for points on both transforms.
  std::optional<ExtInt> intersection;
};

struct VerificationReport {
  std::string theorem;
  std::vector<std::string> inputs;
  std::vector<Comparison> comparisons;
  std::vector<PointReport> points;
  std::vector<int> truncations;
  std::vector<int> oracle_degrees;
  std::vector<std::string> notes;
  double wall_ms = 0;

  bool passed() const;
  // Appends a comparison and returns its outcome.
  bool compare(std::string label, ExtInt lhs, std::string relation, ExtInt rhs);
  bool check(std::string label, bool ok, std::string detail = {});
};

// Named curve for the harness. `spec.branches` may be empty, in which case
// checks that need r_0 (hence delta_0) are skipped and noted.
struct NamedCurve {
  std::string name;
  CurveSpec spec;
};

// Kouchnirenko/Bernstein bounds for mu, delta, r and (f,g); equalities when nondegenerate.
VerificationReport verify_kouchnirenko(const NamedCurve& f, const NamedCurve* g, const OracleOptions& opts = {});
// Noether formulas for delta, mu and (f,g) through the blow-up fan.
VerificationReport verify_noether(const NamedCurve& f, const NamedCurve* g, const OracleOptions& opts = {});
// Toric-modification formulas for mu, delta and (f,g) over an arbitrary fan.
VerificationReport verify_generalized(const NamedCurve& f, const NamedCurve* g, const Fan& fan,
                                      const OracleOptions& opts = {});
// Chart factorization of every step of the blow-up decomposition.
VerificationReport verify_decomposition(const Fan& fan);

// --- Generation ------------------------------------------------------------

// Random convenient diagram with vertices in [0, box]^2.
NewtonDiagram random_convenient_diagram(std::mt19937_64& rng, int box);

// Polynomial supported on the lattice points of the polygon of `diagram`,
// nondegenerate, with every face polynomial split over Q. Deterministic in
// `seed`. Throws RetriesExhausted.
BivariatePoly generate_nondegenerate(const NewtonDiagram& diagram, std::uint64_t seed);

// Branches of a nondegenerate f whose face polynomials split over Q: one per
// packet root, lifted to y-truncation at least `truncation`.
std::vector<BranchParam> lift_branches(const BivariatePoly& f, int truncation);

// The product of the packet polynomials of the branches.
CurveSpec curve_from_branches(std::vector<BranchParam> branches, std::string provenance);

// Nondegenerate curve with lifted branches.
CurveSpec nondegenerate_curve(const NewtonDiagram& diagram, std::uint64_t seed, int truncation = 40);

// Curve built from random branches where two of them share their leading
// packet, so the result is degenerate; the branch list is exact.
CurveSpec degenerate_curve(std::uint64_t seed);

// A fan obtained by `steps` random subdivisions of `base`.
Fan random_refinement(const Fan& base, std::size_t steps, std::uint64_t seed);

// Random fan with exactly `rays` rays (>= 2).
Fan random_fan(std::size_t rays, std::uint64_t seed);

// Fan whose rays contain every edge normal of the given polynomials' polygons.
Fan newton_adapted_fan(const std::vector<BivariatePoly>& polys);

// --- Corpus ----------------------------------------------------------------

struct CorpusEntry {
  std::string name;
  NamedCurve f;
  std::optional<NamedCurve> g;
  std::vector<Fan> fans;
};

// Curated curves: smooth, nodes, cusps, tacnodes, products of branch
// packets, shifted units. Each gets identity, blow-up, Newton-adapted and a
// random refinement fan.
std::vector<CorpusEntry> builtin_corpus();

}  // namespace curveinv
