#pragma once

#include <string>

#include "json.hpp"
#include "swcx/code.hpp"
#include "swcx/construct.hpp"
#include "swcx/psinj.hpp"

namespace swcx {

// nlohmann json with the default (alphabetically ordered) object type, so a
// given value always serializes to the same bytes.
using Json = nlohmann::json;

Json to_json(const FieldSpec& s);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Subspace& s);
Json to_json(const MatGroup& g);
Json to_json(const OrbitPartition& p);
Json to_json(const SwcVector& s);
Json to_json(const MonomialMap& h);
Json to_json(const ProjPoint& p);
Json to_json(const PsinjWitness& w);
Json to_json(const ConstructVerifyReport& r);
Json to_json(const SubcodeReport& r);
Json to_json(const BoundReport& r);
Json to_json(const CounterexampleReport& r);
Json to_json(const F23Report& r);

// Full construction payload: field, quadratic, points, per-point matrices,
// and both generator matrices.
Json construction_json(const ConstructionResult& r);

// Code and code-map files: {q, p, k, modulus, ell, n, gen[, mu]}.
Json code_json(const Code& c);
Json code_map_json(const CodeMap& m);

// Loaders; throw std::invalid_argument on malformed input. Fields may give
// the field as q alone (canonical modulus) or as p, k, modulus. Report
// envelopes are accepted: when the flat keys are absent, the loaders descend
// into a nested "code", "group", or "field" object.
Field field_from_json(const Json& j);
Mat mat_from_json(const Json& j);
Code load_code(const Json& j);
CodeMap load_code_map(const Json& j);
// {n, q | p/k/modulus, generators}; the group is generated from the list.
MatGroup load_group(const Json& j, std::uint64_t guard = kDefaultGroupGuard);

// Canonical serialization: two-space indent plus trailing newline.
std::string dump_report(const Json& j);

}  // namespace swcx
