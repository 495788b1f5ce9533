#pragma once

#include <json.hpp>

#include <span>
#include <variant>
#include <vector>

#include "hafs/bridge.hpp"
#include "hafs/element_set.hpp"
#include "hafs/equations.hpp"
#include "hafs/framework.hpp"
#include "hafs/labellings.hpp"
#include "hafs/logic.hpp"

namespace hafs::json {

using nlohmann::json;

/// {"arg:a": "1", "supp:t1": "1/2", ...}
json labelling(const Framework& h, const Labelling3& l);
/// {"labellings": [...]}
json labellings(const Framework& h, std::span<const Labelling3> ls);
/// ["arg:a", "att:r1"]
json element_set(const Framework& h, const ElementSet& e);
/// {"extensions": [[...], ...]}
json extensions(const Framework& h, std::span<const ElementSet> es);

/// {"var": "arg:a"} | {"op": "top"} | {"op": "bottom"} | {"op": "not"|"and"|"or"|"implies"|"iff", "args": [...]}
json formula(const Formula& f);
/// Inverse of formula(); variables are resolved against h.
Formula formula_from_json(const json& j, const Framework& h);

/// Rounds to 12 significant digits.
double round12(double x);

json solve_report(const Framework& h, const SolveReport& r);
json ternary_solutions(const Framework& h, std::span<const std::vector<Truth3>> sols);
json verification_report(const VerificationReport& r);

/// Parsed `--assignment`: exact when every value is an integer or "p/q"
/// string, floating point when any value is a decimal.
using Assignment = std::variant<std::vector<Rational>, std::vector<double>>;

/// Accepts {"arg:a": "1/2", "a": 0.25, ...}; keys may be qualified ids or bare
/// names. Must be total over U.
Assignment parse_assignment(const json& j, const Framework& h);

}  // namespace hafs::json
