#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curveinv/error.hpp"
#include "curveinv/harness.hpp"
#include "curveinv/json_io.hpp"

using namespace curveinv;

namespace {

std::vector<PrimitiveVector> normals_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("--normals: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorKind::Parse, "--normals must be a JSON array of pairs");
  std::vector<PrimitiveVector> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw Error(ErrorKind::Parse, "--normals entries must be integer pairs");
    out.emplace_back(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
  }
  return out;
}

void print(const Json& j) { std::cout << dump_pretty(j) << "\n"; }

NamedCurve load_curve(const std::string& path) { return {path, curve_from_json(read_json_file(path))}; }

int run_diagram(const std::string& input, const std::string& fan_path) {
  const BivariatePoly f = poly_from_json(read_json_file(input));
  const NewtonDiagram d = newton_diagram(f);
  Json out{{"diagram", to_json(d)}, {"invariants", to_json(diagram_invariants(d))}};
  out["nondegenerate"] = nondegenerate(f);
  if (!fan_path.empty()) {
    const NewtonDiagram t = thickened_diagram(d, fan_from_json(read_json_file(fan_path)));
    out["thickened"] = to_json(t);
    out["thickened_invariants"] = to_json(diagram_invariants(t));
  }
  print(out);
  return 0;
}

int run_fan(const std::string& normals, const std::string& decompose) {
  if (!normals.empty()) {
    print(to_json(fan_from_normals(normals_from_text(normals))));
    return 0;
  }
  const Fan fan = fan_from_json(read_json_file(decompose));
  Json steps = Json::array();
  for (const auto& st : blowup_decomposition(fan))
    steps.push_back(Json{{"fan", to_json(st.coarse)},
                         {"cone", st.cone_index},
                         {"inserted", Json::array({st.inserted.x1, st.inserted.x2})}});
  print(Json{{"steps", steps}});
  return 0;
}

int run_transform(const std::string& input, const std::string& fan_path) {
  const BivariatePoly f = poly_from_json(read_json_file(input));
  const Fan fan = fan_from_json(read_json_file(fan_path));
  Json charts = Json::array();
  for (std::size_t k = 0; k < fan.cone_count(); ++k) {
    Json c = to_json(proper_transform(f, fan.cone(k), k));
    const SimpleCone cone = fan.cone(k);
    c["cone"] = Json::array({Json::array({cone.xi.x1, cone.xi.x2}), Json::array({cone.nu.x1, cone.nu.x2})});
    charts.push_back(c);
  }
  Json points = Json::array();
  for (const auto& p : exceptional_points(f, fan))
    points.push_back(Json{{"point", to_json(p.key)},
                          {"localized", to_json(p.localized)["poly"]},
                          {"localized_text", p.localized.to_string('u', 'v')}});
  print(Json{{"charts", charts}, {"exceptional_points", points}});
  return 0;
}

int run_invariants(const std::string& input, const OracleOptions& opts) {
  const CurveSpec c = curve_from_json(read_json_file(input));
  Json out{{"ord", to_json(c.poly.ord_total())}};
  const IntersectionDetail mu = milnor_detail(c.poly, opts);
  out["mu"] = to_json(mu.value);
  if (!c.branches.empty()) {
    const ValidatedCurve v = validate_curve_spec(c);
    const LocalInvariants li = local_invariants(c.poly, v.r0, opts);
    out["r"] = v.r0;
    out["delta"] = to_json(li.delta);
  } else {
    out["r"] = nullptr;
    out["delta"] = nullptr;
  }
  out["degree_used"] = mu.degree_used;
  print(out);
  return 0;
}

int run_intersect(const std::string& fpath, const std::string& gpath, const OracleOptions& opts) {
  const BivariatePoly f = poly_from_json(read_json_file(fpath));
  const BivariatePoly g = poly_from_json(read_json_file(gpath));
  const IntersectionDetail d = intersection_detail(f, g, opts);
  print(Json{{"intersection", to_json(d.value)}, {"degree_used", d.degree_used}, {"shear", to_string(d.shear)}});
  return 0;
}

struct VerifyArgs {
  std::string theorem = "all";
  std::string f, g, fan, corpus, report;
  std::uint64_t seed = 1;
  bool timing = false;
};

int run_verify(const VerifyArgs& a, OracleOptions opts) {
  opts.seed = a.seed;
  std::vector<VerificationReport> reports;
  const bool all = a.theorem == "all";
  auto wants = [&](const char* t) { return all || a.theorem == t; };

  if (!a.f.empty()) {
    const NamedCurve f = load_curve(a.f);
    std::optional<NamedCurve> g;
    if (!a.g.empty()) g = load_curve(a.g);
    const NamedCurve* gp = g ? &*g : nullptr;
    std::optional<Fan> fan;
    if (!a.fan.empty()) fan = fan_from_json(read_json_file(a.fan));
    if (wants("t1")) reports.push_back(verify_kouchnirenko(f, gp, opts));
    if (wants("t2")) reports.push_back(verify_noether(f, gp, opts));
    if (wants("t3")) reports.push_back(verify_generalized(f, gp, fan ? *fan : Fan::blowup(), opts));
    if (wants("t4") && fan) reports.push_back(verify_decomposition(*fan));
  } else if (!a.fan.empty() && a.theorem == "t4") {
    reports.push_back(verify_decomposition(fan_from_json(read_json_file(a.fan))));
  } else {
    const auto corpus = a.corpus.empty() ? builtin_corpus() : corpus_from_json(read_json_file(a.corpus));
    for (const auto& e : corpus) {
      const NamedCurve* gp = e.g ? &*e.g : nullptr;
      if (wants("t1")) reports.push_back(verify_kouchnirenko(e.f, gp, opts));
      if (wants("t2")) reports.push_back(verify_noether(e.f, gp, opts));
      for (const auto& fan : e.fans) {
        if (wants("t3")) reports.push_back(verify_generalized(e.f, gp, fan, opts));
        if (wants("t4")) reports.push_back(verify_decomposition(fan));
      }
    }
  }

  bool ok = true;
  Json all_reports = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.theorem;
    for (const auto& in : r.inputs) std::cout << " | " << in;
    std::cout << "\n";
    for (const auto& c : r.comparisons)
      if (!c.passed) std::cout << "  failed: " << c.label << ": " << c.lhs << " " << c.relation << " " << c.rhs << "\n";
    all_reports.push_back(to_json(r, a.timing));
  }
  std::cout << reports.size() << " reports, " << (ok ? "all passed" : "FAILURES") << "\n";
  if (!a.report.empty()) {
    std::ofstream out(a.report);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.report);
    out << dump_pretty(Json{{"passed", ok}, {"reports", all_reports}}) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local invariants of plane curve germs via Newton diagrams and toric modifications"};
  app.require_subcommand(1);

  std::string input, fan_path, normals, decompose, fpath, gpath, corpus_out;

  auto* diagram = app.add_subcommand("diagram", "Newton diagram invariants, optionally thickened by a fan");
  diagram->add_option("-i,--input", input, "polynomial JSON")->required();
  diagram->add_option("--fan", fan_path, "fan JSON");

  auto* fan = app.add_subcommand("fan", "Fan construction and blow-up decomposition");
  auto* normals_opt = fan->add_option("--normals", normals, "JSON list of primitive normals, e.g. '[[2,3]]'");
  auto* decompose_opt = fan->add_option("--decompose", decompose, "fan JSON to factor into blow-ups");
  normals_opt->excludes(decompose_opt);
  fan->require_option(1);

  auto* transform = app.add_subcommand("transform", "Proper transforms per chart and exceptional points");
  transform->add_option("-i,--input", input, "polynomial JSON")->required();
  transform->add_option("--fan", fan_path, "fan JSON")->required();

  auto* invariants = app.add_subcommand("invariants", "mu, r, delta and ord of a curve from the oracles");
  invariants->add_option("-i,--input", input, "curve JSON (polynomial with optional branches)")->required();

  auto* intersect = app.add_subcommand("intersect", "Intersection multiplicity at the origin");
  intersect->add_option("-f", fpath, "polynomial JSON")->required();
  intersect->add_option("-g", gpath, "polynomial JSON")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify the formulas on a curve, a pair or a corpus");
  verify->add_option("--theorem", va.theorem, "t1, t2, t3, t4 or all")
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4", "all"}));
  verify->add_option("-f", va.f, "curve JSON");
  verify->add_option("-g", va.g, "second curve JSON");
  verify->add_option("--fan", va.fan, "fan JSON (t3 defaults to the blow-up fan)");
  verify->add_option("--corpus", va.corpus, "corpus JSON (default: built-in corpus)");
  verify->add_option("--seed", va.seed, "seed for the resultant shear");
  verify->add_option("--report", va.report, "write the reports as JSON");
  verify->add_flag("--timing", va.timing, "include wall time in the report");

  auto* corpus = app.add_subcommand("corpus", "Write the built-in corpus as JSON");
  corpus->add_option("-o,--output", corpus_out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;  // --help exits 0, usage errors 2
  }

  try {
    const OracleOptions opts = oracle_options_from_env();
    if (*diagram) return run_diagram(input, fan_path);
    if (*fan) return run_fan(normals, decompose);
    if (*transform) return run_transform(input, fan_path);
    if (*invariants) return run_invariants(input, opts);
    if (*intersect) return run_intersect(fpath, gpath, opts);
    if (*verify) return run_verify(va, opts);
    if (*corpus) {
      const std::string text = dump_pretty(corpus_to_json(builtin_corpus())) + "\n";
      if (corpus_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(corpus_out);
        out << text;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
