#pragma once

#include <nlohmann/json.hpp>

#include "propcalc/fixtures.hpp"
#include "propcalc/lifting.hpp"
#include "propcalc/prop.hpp"

namespace propcalc {

using Json = nlohmann::json;

// All parsers throw Error(ParseError) with the offending field in the message.
// Serializers emit the formats parsed by the corresponding *_from_json, with
// rationals as strings "p/q" (or "p" for integers). nlohmann::json keeps
// object keys sorted, so dump() output is canonical for a given value.

// {"degrees": {"0": ["a","b"], "-1": ["c"]}, "differential": {"a": {"c": "1"}}}
Json complex_to_json(const ChainComplex& cx);
ChainComplex complex_from_json(const Json& j);

// {"source": <complex>, "target": <complex>, "entries": {"a": {"b": "1/2"}}}
// where entries["a"]["b"] is the coefficient of target basis element b in the
// image of source basis element a.
Json chain_map_to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j);

// {"bound": {"A": 2, "total": -1},
//  "components": {"m,n": <complex>},
//  "actions": {"m,n": {"right": {"s1": <matrix>}, "left": {...}}}}
// where <matrix> maps source label -> {target label -> coefficient}.
Json biobject_to_json(const BiObject& b);
BiObject biobject_from_json(const Json& j);

// Biobject fields plus
//  "units": {"n": {label: coeff}},
//  "vertical": {"m,k,n": {"a⋆b": {label: coeff}}},
//  "horizontal": {"m1,n1,m2,n2": {"a⋆b": {label: coeff}}},
// and optionally "presentation": <presentation>. Tables are keyed by basis
// label pairs joined with "⋆"; absent pairs compose to zero.
Json prop_to_json(const Prop& p);
Json prop_to_json(const Prop& p, const QuasiFreePresentation* pres);
std::shared_ptr<TableProp> prop_from_json(const Json& j);

// Words: {"gen": 0} | {"unit": n} | {"zero": [m, n]} | {"vcomp": [a, b]}
// | {"hcomp": [a, b]} | {"lperm": [[perm...], a]} | {"rperm": [a, [perm...]]}
// | {"scale": ["p/q", a]} | {"sum": {"at": [m, n], "terms": [...]}}.
Json word_to_json(const GeneratorWord& w);
WordPtr word_from_json(const Json& j);

// {"generators": [{"label": "g", "at": [2,1], "degree": 0, "dword": <word>?}],
//  "words": {"m,n": [<word>, ...]}}
Json presentation_to_json(const QuasiFreePresentation& pres);
QuasiFreePresentation presentation_from_json(const Json& j);

// Generators may carry a "value" field ({label: coeff} in their component of
// p) naming the element they present; required by the lifting pipeline.
Json presentation_to_json(const QuasiFreePresentation& pres, const Prop& p,
                          const std::vector<PropElement>& values);
std::vector<PropElement> presentation_values_from_json(const Json& j, const Prop& p);

// An algebra over the prop of a separate file:
// {"carrier": <complex>,
//  "action": {"m,n": {plabel: [[rows: carrier^{⊗n} basis] x [cols: ^{⊗m}]]}}}
// Dense matrices of rational strings; basis order of the powers is the
// lexicographic tensor-word order on the carrier's global basis.
struct AlgebraInput {
    ChainComplex carrier;
    std::map<Biarity, std::map<std::string, std::vector<std::vector<Rational>>>> action;
};
Json algebra_to_json(const PAlgebra& alg);
AlgebraInput algebra_input_from_json(const Json& j);
// Resolve an AlgebraInput against a prop into a checked PAlgebra.
PAlgebra resolve_algebra(const PropPtr& p, const AlgebraInput& in, BiarityBound end_bound);

Json report_to_json(const CheckReport& r);

// Load any of the above from a file; throws Error(ParseError) on bad JSON or
// missing file.
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, bool canonical);
// canonical: sorted keys (always true for nlohmann), indent 1, '\n'-terminated.
std::string dump_json(const Json& j, bool canonical);

}  // namespace propcalc
