#pragma once

#include <json.hpp>

#include "latgerm/atf.hpp"
#include "latgerm/germ.hpp"
#include "latgerm/markov.hpp"
#include "latgerm/polytope.hpp"

namespace latgerm::detail {

using nlohmann::json;

json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

std::int64_t int_to_i64(const Int& x);
json int_vec_json(const IntVec& v);
IntVec int_vec_from_json(const json& j);

json polytope_json(const RationalPolytope& p);
RationalPolytope polytope_from(const json& j);

json diagram_json(const ATFDiagram& d);
ATFDiagram diagram_from(const json& j);

json markov_tree_json(const MarkovTree& tree);

json germ_json(const Germ& g);
Germ germ_from(const json& j);

json matrix_json(const IntMatrix& m);
json germ_invariants_json(const GermInvariants& inv);

// Canonical textual rendering used by every CLI output.
std::string dump(const json& j);

}  // namespace latgerm::detail
