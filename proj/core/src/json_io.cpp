#include "latgerm/json_io.hpp"

#include <limits>

#include "json_detail.hpp"

namespace latgerm {

namespace detail {

json rat_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
  if (!j.is_string()) fail("BadJson", "expected a rational string");
  return parse_rat(j.get<std::string>());
}

std::int64_t int_to_i64(const Int& x) {
  if (x < std::numeric_limits<std::int64_t>::min() || x > std::numeric_limits<std::int64_t>::max())
    fail("IntegerOverflow", "integer entry does not fit the wire format");
  return static_cast<std::int64_t>(x);
}

json int_vec_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_i64(x));
  return a;
}

IntVec int_vec_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail("BadJson", "expected a nonempty integer array");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail("BadJson", "expected an integer entry");
    v.emplace_back(x.get<std::int64_t>());
  }
  return v;
}

json polytope_json(const RationalPolytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets())
    facets.push_back({{"normal", int_vec_json(f.normal.coords())}, {"offset", rat_json(f.offset)}});
  return {{"dim", p.dim()}, {"facets", facets}};
}

RationalPolytope polytope_from(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("facets"))
    fail("BadJson", "polytope needs \"dim\" and \"facets\"");
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<Facet> facets;
  for (const auto& fj : j.at("facets")) {
    IntVec normal = int_vec_from_json(fj.at("normal"));
    Rat offset = rat_from_json(fj.at("offset"));
    facets.push_back(Facet{PrimVec(std::move(normal)), std::move(offset)});
  }
  return RationalPolytope::from_facets(dim, std::move(facets));
}

json diagram_json(const ATFDiagram& d) {
  json nodes = json::array();
  for (const auto& n : d.nodes()) {
    json pos = json::array();
    for (const Rat& c : n.position) pos.push_back(rat_json(c));
    nodes.push_back({{"position", pos},
                     {"cut", int_vec_json(n.cut.coords())},
                     {"sheared_half", n.sheared_sign > 0 ? "+" : "-"}});
  }
  return {{"polytope", polytope_json(d.polytope())}, {"nodes", nodes}};
}

ATFDiagram diagram_from(const json& j) {
  if (!j.is_object() || !j.contains("polytope") || !j.contains("nodes"))
    fail("BadJson", "diagram needs \"polytope\" and \"nodes\"");
  RationalPolytope p = polytope_from(j.at("polytope"));
  std::vector<DiagramNode> nodes;
  for (const auto& nj : j.at("nodes")) {
    RatVec pos;
    for (const auto& c : nj.at("position")) pos.push_back(rat_from_json(c));
    IntVec cut = int_vec_from_json(nj.at("cut"));
    std::string half = nj.at("sheared_half").get<std::string>();
    if (half != "+" && half != "-") fail("BadJson", "sheared_half must be \"+\" or \"-\"");
    nodes.push_back(DiagramNode{std::move(pos), PrimVec(std::move(cut)), half == "+" ? +1 : -1});
  }
  return ATFDiagram(std::move(p), std::move(nodes));
}

json markov_tree_json(const MarkovTree& tree) {
  json nodes = json::array();
  for (const auto& n : tree.nodes) {
    json t = json::array();
    for (const Int& x : n.triple) t.push_back(int_to_i64(x));
    json entry = {{"triple", t},
                  {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                  {"slot", n.slot ? json(*n.slot) : json(nullptr)}};
    nodes.push_back(std::move(entry));
  }
  return {{"root", {1, 1, 1}}, {"nodes", nodes}};
}

json germ_json(const Germ& g) {
  json vs = json::array();
  for (const auto& v : g.vectors()) vs.push_back(int_vec_json(v));
  return {{"constant", rat_json(g.constant())}, {"vectors", vs}};
}

Germ germ_from(const json& j) {
  if (!j.is_object() || !j.contains("constant") || !j.contains("vectors"))
    fail("BadJson", "germ needs \"constant\" and \"vectors\"");
  Rat constant = rat_from_json(j.at("constant"));
  std::vector<IntVec> vs;
  for (const auto& vj : j.at("vectors")) vs.push_back(int_vec_from_json(vj));
  return Germ(std::move(constant), std::move(vs));
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_to_i64(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json germ_invariants_json(const GermInvariants& inv) {
  json pairs = json::array();
  for (const Int& x : inv.pair_index_multiset) pairs.push_back(int_to_i64(x));
  json triples = json::array();
  for (const Int& x : inv.triple_index_multiset) triples.push_back(int_to_i64(x));
  return {{"constant", rat_json(inv.constant)},
          {"dim", inv.dim},
          {"count", inv.count},
          {"pairwise_index", pairs},
          {"triple_index", triples},
          {"full_index", inv.full_index ? json(int_to_i64(*inv.full_index)) : json(nullptr)},
          {"canonical_matrix", matrix_json(inv.canonical_matrix)},
          {"canonical_exact", inv.canonical_exact}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

std::string polytope_to_json(const RationalPolytope& p) {
  return detail::dump(detail::polytope_json(p));
}

RationalPolytope polytope_from_json(const std::string& text) {
  return detail::polytope_from(detail::json::parse(text, nullptr, true));
}

std::string diagram_to_json(const ATFDiagram& d) { return detail::dump(detail::diagram_json(d)); }

ATFDiagram diagram_from_json(const std::string& text) {
  return detail::diagram_from(detail::json::parse(text));
}

std::string markov_tree_to_json(const MarkovTree& tree) {
  return detail::dump(detail::markov_tree_json(tree));
}

std::string germ_to_json(const Germ& g) { return detail::dump(detail::germ_json(g)); }

Germ germ_from_json(const std::string& text) {
  return detail::germ_from(detail::json::parse(text));
}

}  // namespace latgerm
