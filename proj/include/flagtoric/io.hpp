#pragma once

#include <string>

#include <json.hpp>

#include "flagtoric/catalan.hpp"
#include "flagtoric/fan.hpp"
#include "flagtoric/matroid.hpp"
#include "flagtoric/orbit.hpp"
#include "flagtoric/polytope.hpp"

namespace flagtoric {

using nlohmann::json;

// {"ambient_dim": n, "vertices": [[ints]], "labels": ["3412", ...]}
json polytope_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

// {"rank": r, "rays": [[ints]], "cones": [[ray indices]]}
json fan_json(const Fan& f);
Fan fan_from_json(const json& j);

// {"n": 7, "elements": ["..."]}
json matroid_json(const CoxeterSubset& m);
CoxeterSubset matroid_from_json(const json& j);

// {"n": k, "diagonals": [[a, b]]}
json triangulation_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

// {"parents": {"2": 1, ...}, "signs": {"2": "+", ...}}
json forest_json(const SignedForest& f);
SignedForest forest_from_json(const json& j);

// CSV of rationals "p/q", row major.
FlagMatrix flag_matrix_from_csv(const std::string& text);
std::string retraction_table_csv(const std::map<Perm, Perm>& table);

}  // namespace flagtoric
