#pragma once

#include <string>

#include "latgerm/atf.hpp"
#include "latgerm/germ.hpp"
#include "latgerm/markov.hpp"
#include "latgerm/polytope.hpp"

namespace latgerm {

// Wire formats. Rationals travel as strings "p" / "p/q" in lowest terms
// with positive denominator; integer entries as JSON numbers (rejected
// with IntegerOverflow when they do not fit 64 bits). All emitters are
// byte-deterministic for equal inputs.

std::string polytope_to_json(const RationalPolytope& p);
RationalPolytope polytope_from_json(const std::string& text);

std::string diagram_to_json(const ATFDiagram& d);
ATFDiagram diagram_from_json(const std::string& text);

std::string markov_tree_to_json(const MarkovTree& tree);

std::string germ_to_json(const Germ& g);
Germ germ_from_json(const std::string& text);

}  // namespace latgerm
