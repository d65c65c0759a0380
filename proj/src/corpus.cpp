#include <string>
#include <utility>
#include <vector>

#include "curveinv/harness.hpp"

namespace curveinv {
namespace {

BivariatePoly X = BivariatePoly::x();
BivariatePoly Y = BivariatePoly::y();

BivariatePoly mono(long c, int i, int j) { return BivariatePoly::monomial(c, i, j); }

BranchParam branch(int m, std::vector<BranchParam::YTerm> y, int trunc = 24) {
  return BranchParam(m, Rational(1), std::move(y), trunc);
}

NamedCurve named(std::string name, BivariatePoly f, std::vector<BranchParam> branches, std::string provenance) {
  return {std::move(name), CurveSpec{std::move(f), std::move(branches), std::move(provenance)}};
}

NamedCurve from_branches(std::string name, std::vector<BranchParam> branches, std::string provenance) {
  return {std::move(name), curve_from_branches(std::move(branches), std::move(provenance))};
}

void add(std::vector<CorpusEntry>& out, std::string name, NamedCurve f, std::optional<NamedCurve> g) {
  CorpusEntry e;
  e.name = name;
  e.f = std::move(f);
  e.g = std::move(g);
  std::vector<BivariatePoly> polys{e.f.spec.poly};
  if (e.g) polys.push_back(e.g->spec.poly);
  const Fan adapted = newton_adapted_fan(polys);
  e.fans = {Fan::identity(), Fan::blowup(), adapted,
            random_refinement(adapted, 2, 1000 + static_cast<std::uint64_t>(out.size()))};
  out.push_back(std::move(e));
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> out;

  add(out, "smooth-line", named("y-2x", Y - mono(2, 1, 0), {branch(1, {{1, 2}})}, "line"),
      named("y+x", Y + X, {branch(1, {{1, -1}})}, "line"));

  add(out, "parabola", named("y-x^2", Y - mono(1, 2, 0), {branch(1, {{2, 1}})}, "smooth, tangent to y=0"),
      named("x-y^2", X - mono(1, 0, 2), {branch(2, {{1, 1}})}, "smooth, tangent to x=0"));

  add(out, "node", named("y^2-x^2", mono(1, 0, 2) - mono(1, 2, 0), {branch(1, {{1, 1}}), branch(1, {{1, -1}})}, "node"),
      named("y-3x", Y - mono(3, 1, 0), {branch(1, {{1, 3}})}, "line"));

  add(out, "tacnode",
      named("y^2-x^4", mono(1, 0, 2) - mono(1, 4, 0), {branch(1, {{2, 1}}), branch(1, {{2, -1}})}, "tacnode"),
      named("y-2x^2", Y - mono(2, 2, 0), {branch(1, {{2, 2}})}, "smooth"));

  add(out, "cusp", named("y^2-x^3", mono(1, 0, 2) - mono(1, 3, 0), {branch(2, {{3, 1}})}, "cusp"),
      named("y^2-x^5", mono(1, 0, 2) - mono(1, 5, 0), {branch(2, {{5, 1}})}, "higher cusp"));

  add(out, "e6", named("y^3-x^4", mono(1, 0, 3) - mono(1, 4, 0), {branch(3, {{4, 1}})}, "E6"),
      named("y^2-x^3", mono(1, 0, 2) - mono(1, 3, 0), {branch(2, {{3, 1}})}, "cusp"));

  add(out, "two-cusps", from_branches("(y^2-x^3)(y^2-x^5)", {branch(2, {{3, 1}}), branch(2, {{5, 1}})}, "two cusps"),
      named("y+x", Y + X, {branch(1, {{1, -1}})}, "line"));

  add(out, "triple-point",
      from_branches("(y-x)(y+x)(y-2x)", {branch(1, {{1, 1}}), branch(1, {{1, -1}}), branch(1, {{1, 2}})},
                    "three lines"),
      named("y-3x", Y - mono(3, 1, 0), {branch(1, {{1, 3}})}, "line"));

  add(out, "branch-packets",
      from_branches("packets (t^2,t^3+t^4),(t^3,t^4+t^5)", {branch(2, {{3, 1}, {4, 1}}), branch(3, {{4, 1}, {5, 1}})},
                    "product of branch packets"),
      named("y-5x", Y - mono(5, 1, 0), {branch(1, {{1, 5}})}, "line"));

  add(out, "degenerate-tacnode",
      from_branches("(y-x-x^2)(y-x+x^2)", {branch(1, {{1, 1}, {2, 1}}), branch(1, {{1, 1}, {2, -1}})},
                    "two smooth branches with a common tangent"),
      named("y+x", Y + X, {branch(1, {{1, -1}})}, "line"));

  {
    const BivariatePoly cusp = mono(1, 0, 2) - mono(1, 3, 0);
    add(out, "shifted-unit",
        named("(1+x+y)(y^2-x^3)", (BivariatePoly::constant(1) + X + Y) * cusp, {branch(2, {{3, 1}})},
              "cusp times a unit"),
        named("y^2-x^5", mono(1, 0, 2) - mono(1, 5, 0), {branch(2, {{5, 1}})}, "higher cusp"));
  }

  add(out, "cusp-and-line",
      from_branches("(y^2-x^3)(y-x)", {branch(2, {{3, 1}}), branch(1, {{1, 1}})}, "cusp with a transverse line"),
      named("y^3-x^2", mono(1, 0, 3) - mono(1, 2, 0), {branch(3, {{2, 1}})}, "cusp tangent to x=0"));

  return out;
}

}  // namespace curveinv
