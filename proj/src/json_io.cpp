#include "curveinv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "curveinv/error.hpp"

namespace curveinv {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::int64_t natural(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw Error(ErrorKind::Parse, std::string(what) + " must be a nonnegative integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::Parse, std::string(what) + " must be an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

Rational coefficient(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  throw Error(ErrorKind::Parse, "coefficient must be an exact string, got " + j.dump());
}

Json pair(std::int64_t a, std::int64_t b) { return Json::array({a, b}); }

std::vector<std::pair<std::int64_t, std::int64_t>> int_pairs(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array");
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, std::string(what) + " entries must be pairs");
    out.emplace_back(integer(e[0], what), integer(e[1], what));
  }
  return out;
}

}  // namespace

Json to_json(const ExtInt& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

Json to_json(const BivariatePoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e.i, e.j, to_string(c)}));
  return Json{{"poly", terms}};
}

BivariatePoly poly_from_json(const Json& j) {
  const Json& terms = field(j, "poly");
  if (!terms.is_array()) throw Error(ErrorKind::Parse, "\"poly\" must be an array");
  BivariatePoly::TermMap map;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::Parse, "polynomial terms are [i, j, \"coef\"]");
    const auto i = natural(t[0], "exponent"), jj = natural(t[1], "exponent");
    map[Exponent{static_cast<int>(i), static_cast<int>(jj)}] += coefficient(t[2]);
  }
  std::erase_if(map, [](const auto& kv) { return kv.second == 0; });
  return BivariatePoly(std::move(map));
}

Json to_json(const BranchParam& b) {
  Json ys = Json::array();
  for (const auto& [k, c] : b.y_terms()) ys.push_back(Json::array({k, to_string(c)}));
  return Json{{"m", b.m()}, {"cx", to_string(b.cx())}, {"y", ys}, {"trunc", b.truncation()}};
}

BranchParam branch_from_json(const Json& j) {
  const auto m = natural(field(j, "m"), "m");
  const Rational cx = coefficient(field(j, "cx"));
  const Json& ys = field(j, "y");
  if (!ys.is_array()) throw Error(ErrorKind::Parse, "\"y\" must be an array");
  std::vector<BranchParam::YTerm> terms;
  for (const auto& t : ys) {
    if (!t.is_array() || t.size() != 2) throw Error(ErrorKind::Parse, "branch y-terms are [k, \"coef\"]");
    terms.emplace_back(static_cast<int>(natural(t[0], "exponent")), coefficient(t[1]));
  }
  const auto trunc = natural(field(j, "trunc"), "trunc");
  return BranchParam(static_cast<int>(m), cx, std::move(terms), static_cast<int>(trunc));
}

Json to_json(const NewtonDiagram& d) {
  Json v = Json::array();
  for (const auto& e : d.vertices()) v.push_back(pair(e.i, e.j));
  return Json{{"vertices", v}};
}

NewtonDiagram diagram_from_json(const Json& j) {
  std::vector<Exponent> v;
  for (const auto& [i, jj] : int_pairs(field(j, "vertices"), "vertices"))
    v.push_back({static_cast<int>(i), static_cast<int>(jj)});
  return NewtonDiagram::from_vertices(std::move(v));
}

Json to_json(const Fan& fan) {
  Json r = Json::array();
  for (const auto& v : fan.rays()) r.push_back(pair(v.x1, v.x2));
  return Json{{"rays", r}};
}

Fan fan_from_json(const Json& j) { return validate_fan(int_pairs(field(j, "rays"), "rays")); }

Json to_json(const CurveSpec& c) {
  Json j = to_json(c.poly);
  if (!c.branches.empty()) {
    Json bs = Json::array();
    for (const auto& b : c.branches) bs.push_back(to_json(b));
    j["branches"] = bs;
  }
  if (!c.provenance.empty()) j["provenance"] = c.provenance;
  return j;
}

CurveSpec curve_from_json(const Json& j) {
  CurveSpec c;
  c.poly = poly_from_json(j);
  if (j.contains("branches")) {
    if (!j["branches"].is_array()) throw Error(ErrorKind::Parse, "\"branches\" must be an array");
    for (const auto& b : j["branches"]) c.branches.push_back(branch_from_json(b));
  }
  if (j.contains("provenance")) c.provenance = j["provenance"].get<std::string>();
  return c;
}

Json to_json(const DiagramInvariants& inv) {
  return Json{{"P", to_string(inv.area)}, {"a", inv.a}, {"b", inv.b},
              {"mu", inv.mu}, {"r", inv.r}, {"delta", to_string(inv.delta)}};
}

Json to_json(const ProperTransform& pt) {
  return Json{{"chart", pt.chart},
              {"l_xi", pt.l_xi},
              {"l_nu", pt.l_nu},
              {"residual", to_json(pt.residual)["poly"]},
              {"residual_text", pt.residual.to_string('u', 'v')}};
}

Json to_json(const PointKey& key) {
  return Json{{"chart", key.chart}, {"axis", key.axis == Axis::U ? "u" : "v"}, {"coordinate", to_string(key.coordinate)}};
}

Json to_json(const VerificationReport& rep, bool include_timing) {
  Json comps = Json::array();
  for (const auto& c : rep.comparisons)
    comps.push_back(Json{{"label", c.label}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"passed", c.passed}});
  Json points = Json::array();
  for (const auto& p : rep.points) {
    Json pj{{"curve", p.curve}, {"point", to_json(p.key)}, {"localized", p.localized}, {"mu", to_json(p.mu)}, {"r", p.r}};
    if (p.delta) pj["delta"] = to_json(*p.delta);
    if (p.intersection) pj["intersection"] = to_json(*p.intersection);
    points.push_back(pj);
  }
  Json j{{"theorem", rep.theorem}, {"inputs", rep.inputs}, {"passed", rep.passed()}, {"comparisons", comps},
         {"points", points}, {"truncations", rep.truncations}, {"oracle_degrees", rep.oracle_degrees},
         {"notes", rep.notes}};
  if (include_timing) j["wall_ms"] = rep.wall_ms;
  return j;
}

Json to_json(const CorpusEntry& e) {
  Json j{{"name", e.name}, {"f", to_json(e.f.spec)}};
  if (e.g) j["g"] = to_json(e.g->spec);
  Json fans = Json::array();
  for (const auto& fan : e.fans) fans.push_back(to_json(fan));
  j["fans"] = fans;
  return j;
}

CorpusEntry corpus_entry_from_json(const Json& j) {
  CorpusEntry e;
  e.name = field(j, "name").get<std::string>();
  e.f = {e.name + ".f", curve_from_json(field(j, "f"))};
  if (j.contains("g")) e.g = NamedCurve{e.name + ".g", curve_from_json(j["g"])};
  const Json& fans = field(j, "fans");
  if (!fans.is_array()) throw Error(ErrorKind::Parse, "\"fans\" must be an array");
  for (const auto& f : fans) e.fans.push_back(fan_from_json(f));
  return e;
}

std::vector<CorpusEntry> corpus_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw Error(ErrorKind::Parse, "\"entries\" must be an array");
  std::vector<CorpusEntry> out;
  for (const auto& e : entries) out.push_back(corpus_entry_from_json(e));
  return out;
}

Json corpus_to_json(const std::vector<CorpusEntry>& corpus) {
  Json entries = Json::array();
  for (const auto& e : corpus) entries.push_back(to_json(e));
  return Json{{"entries", entries}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array())
      for (const auto& x : e)
        if (x.is_structured()) return false;
  }
  return true;
}

void pretty(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(k).dump() + ": ";
      pretty(v, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (k) out += ",\n";
      out += pad;
      pretty(j[k], indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
  }
}

}  // namespace

std::string dump_pretty(const Json& j) {
  std::string out;
  pretty(j, 0, out);
  return out;
}

}  // namespace curveinv
