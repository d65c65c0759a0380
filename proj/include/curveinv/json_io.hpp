#pragma once

#include <string>
#include <vector>

#include "curveinv/bivariate.hpp"
#include "curveinv/branch.hpp"
#include "curveinv/fan.hpp"
#include "curveinv/harness.hpp"
#include "curveinv/newton.hpp"
#include "curveinv/oracles.hpp"
#include "curveinv/toric.hpp"
#include "json.hpp"

namespace curveinv {

using Json = nlohmann::ordered_json;

// Exponents are naturals, coefficients exact strings:
//   polynomial {"poly": [[i, j, "num/den"], ...]}
//   branch     {"m": 2, "cx": "1", "y": [[3, "1"]], "trunc": 64}
//   diagram    {"vertices": [[0, 2], [3, 0]]}
//   fan        {"rays": [[1, 0], [1, 1], [0, 1]]}
//   curve      polynomial fields plus optional "branches" and "provenance"
// All readers throw Error(Parse) on malformed input.

Json to_json(const BivariatePoly& f);
BivariatePoly poly_from_json(const Json& j);

Json to_json(const BranchParam& b);
BranchParam branch_from_json(const Json& j);

Json to_json(const NewtonDiagram& d);
NewtonDiagram diagram_from_json(const Json& j);

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json to_json(const CurveSpec& c);
CurveSpec curve_from_json(const Json& j);

Json to_json(const DiagramInvariants& inv);
Json to_json(const ProperTransform& pt);
Json to_json(const PointKey& key);
Json to_json(const ExtInt& v);

// `include_timing` adds the wall time; it is off by default so that equal
// inputs give byte-identical reports.
Json to_json(const VerificationReport& rep, bool include_timing = false);

Json to_json(const CorpusEntry& e);
CorpusEntry corpus_entry_from_json(const Json& j);
// {"entries": [{"name": ..., "f": curve, "g": curve, "fans": [fan, ...]}]}
std::vector<CorpusEntry> corpus_from_json(const Json& j);
Json corpus_to_json(const std::vector<CorpusEntry>& corpus);

// Indented JSON text with short arrays (scalars, or arrays of scalars such as
// exponent pairs) kept on one line.
std::string dump_pretty(const Json& j);

// Reads and parses a JSON file; Error(Parse) on failure.
Json read_json_file(const std::string& path);

}  // namespace curveinv
