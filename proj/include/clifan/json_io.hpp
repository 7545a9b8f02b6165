#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "clifan/classifier.hpp"
#include "clifan/polyfield.hpp"
#include "clifan/psi.hpp"
#include "clifan/solver.hpp"
#include "clifan/structural_set.hpp"

namespace clifan {

using nlohmann::json;

/// [{"alpha": [..], "blade": [..], "coef": "p/q"}, ...] in canonical order.
json field_to_json(const PolyField& f);
PolyField field_from_json(const json& j, int m);

/// m x m array of rational strings.
json matrix_to_json(const TransitionMatrix& t);
TransitionMatrix matrix_from_json(const json& j);

json verdict_to_json(const Verdict& v);
json membership_to_json(const ClassMembership& c);
json dimensions_to_json(const ClassDimensions& d);

/// Named structural-set specs:
///   standard | reversed | signedperm:<p1,...,pm> | rot2:<c1> | refl2:<c1> |
///   matrix:<path to JSON file> | vectors:<mv>;<mv>;...
/// rot2/refl2 need m = 2 and a rational c2 = sqrt(1 - c1²).
/// Throws std::invalid_argument on malformed or invalid specs.
StructuralSet parse_set_spec(const std::string& spec, int m);

}  // namespace clifan
