#include "latgerm/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "json_detail.hpp"
#include "latgerm/json_io.hpp"
#include "latgerm/locality.hpp"
#include "latgerm/svg.hpp"

namespace latgerm {

namespace {

using detail::json;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& p : split_commas(text)) out.push_back(parse_rat(p));
  return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  for (const auto& p : split_commas(text)) {
    Rat r = parse_rat(p);
    if (den(r) != 1) fail("BadInteger", "expected an integer, got " + p);
    out.push_back(num(r));
  }
  return out;
}

MarkovTriple parse_triple(const std::string& text) {
  auto xs = parse_int_list(text);
  if (xs.size() != 3) fail("BadTriple", "expected three comma-separated integers");
  return MarkovTriple(xs[0], xs[1], xs[2]);
}

std::vector<int> parse_slot_list(const std::string& text) {
  std::vector<int> out;
  for (const Int& x : parse_int_list(text)) {
    if (x < 1 || x > 3) fail("BadSlot", "path slots must be 1, 2 or 3");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

std::optional<Rat> parse_lambda(const std::string& text) {
  if (text == "inf") return std::nullopt;
  return parse_rat(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("FileNotFound", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("FileError", "cannot write " + path);
  out << contents;
}

// Markov triangle reached by the given walk, or by the canonical descent
// walk to the triple when no path is given. The walk must reach the triple.
MarkovTriangle triangle_for(const MarkovTriple& triple, const std::vector<int>& path,
                            bool path_given) {
  std::vector<int> walk = path_given ? path : markov_path(triple);
  MarkovTriangle tri = delta_m(walk);
  std::array<Int, 3> got = tri.triple;
  std::sort(got.begin(), got.end());
  if (got != triple.sorted())
    fail("BadPath", "the walk does not reach the requested triple");
  return tri;
}

json cs_json(const CsResult& r) {
  return {{"cs", r.cs},
          {"slack_capacity", rat_to_string(r.margins.slack_capacity)},
          {"slack_sphere",
           r.margins.slack_sphere ? json(rat_to_string(*r.margins.slack_sphere)) : json("inf")}};
}

json invariant_values_json(const Germ& left, const Germ& right, const std::string& name) {
  GermInvariants li = germ_invariants(left);
  GermInvariants ri = germ_invariants(right);
  auto multiset = [](const std::vector<Int>& xs) {
    json a = json::array();
    for (const Int& x : xs) a.push_back(detail::int_to_i64(x));
    return a;
  };
  if (name == "constant")
    return {{"left", rat_to_string(li.constant)}, {"right", rat_to_string(ri.constant)}};
  if (name == "cardinality") return {{"left", li.count}, {"right", ri.count}};
  if (name == "pairwise_index")
    return {{"left", multiset(li.pair_index_multiset)}, {"right", multiset(ri.pair_index_multiset)}};
  if (name == "triple_index")
    return {{"left", multiset(li.triple_index_multiset)},
            {"right", multiset(ri.triple_index_multiset)}};
  if (name == "full_index")
    return {{"left", li.full_index ? json(detail::int_to_i64(*li.full_index)) : json(nullptr)},
            {"right", ri.full_index ? json(detail::int_to_i64(*ri.full_index)) : json(nullptr)}};
  return {{"left", detail::matrix_json(li.canonical_matrix)},
          {"right", detail::matrix_json(ri.canonical_matrix)}};
}

json compare_json(const Germ& left, const Germ& right) {
  GermComparison cmp = germ_equivalent(left, right);
  json out;
  if (const auto* eq = std::get_if<Equivalent>(&cmp)) {
    out["result"] = "equivalent";
    out["witness"] = detail::matrix_json(eq->witness);
  } else if (const auto* ineq = std::get_if<Inequivalent>(&cmp)) {
    out["result"] = "inequivalent";
    out["invariant"] = ineq->invariant;
    json values = invariant_values_json(left, right, ineq->invariant);
    out["left"] = values["left"];
    out["right"] = values["right"];
    json flags = json::array();
    if (ineq->invariant == "triple_index") flags.push_back("paper-remark-1.7-discrepancy");
    out["flags"] = flags;
  } else {
    out["result"] = "undecided";
    out["reason"] = std::get<Undecided>(cmp).reason;
  }
  out["left_invariants"] = detail::germ_invariants_json(germ_invariants(left));
  out["right_invariants"] = detail::germ_invariants_json(germ_invariants(right));
  return out;
}

struct Options {
  std::string triple;
  std::string path;
  std::string in_file;
  std::string out_file;
  std::string left_file;
  std::string right_file;
  std::string areas;
  std::string tail;
  std::string point;
  std::string lambda_s = "inf";
  std::string family;
  std::string mode = "literal";
  std::string a1, a2, area, radius;
  std::int64_t max_entry = 0;
  std::int64_t k = 0;
  std::int64_t node = 0;
  std::int64_t samples = 1000;
  std::int64_t seed = 0;
  RenderOptions render;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice polytopes, base-diagram mutations and displacement germs"};
  app.require_subcommand(1);
  Options o;

  auto* markov = app.add_subcommand("markov", "Markov triple enumeration");
  markov->require_subcommand(1);
  auto* markov_tree_cmd = markov->add_subcommand("tree", "Enumerate the mutation tree");
  markov_tree_cmd->add_option("--max-entry", o.max_entry, "Largest entry kept")->required();

  auto* diagram = app.add_subcommand("diagram", "Base diagrams and mutations");
  diagram->require_subcommand(1);
  auto* delta_cmd = diagram->add_subcommand("delta-m", "Triangle diagram of a Markov triple");
  delta_cmd->add_option("--triple", o.triple, "Markov triple a,b,c")->required();
  auto* path_opt = delta_cmd->add_option("--path", o.path, "Mutation slots s1,s2,...");
  auto* mutate_cmd = diagram->add_subcommand("mutate", "Mutate a diagram at a node");
  mutate_cmd->add_option("--in", o.in_file, "Input diagram JSON")->required();
  mutate_cmd->add_option("--node", o.node, "Node index (1-based)")->required();
  mutate_cmd->add_option("--out", o.out_file, "Output diagram JSON file")->required();
  auto* render_cmd = diagram->add_subcommand("render", "Render a diagram to SVG");
  render_cmd->add_option("--in", o.in_file, "Input diagram JSON")->required();
  render_cmd->add_option("--out", o.out_file, "Output SVG file")->required();
  render_cmd->add_flag("--chambers", o.render.show_chambers, "Shade closest-facet chambers");
  render_cmd->add_flag("--labels", o.render.show_labels, "Label the vertices");
  render_cmd->add_option("--width", o.render.width, "Viewport width in pixels");
  render_cmd->add_option("--height", o.render.height, "Viewport height in pixels");

  auto* germ = app.add_subcommand("germ", "Displacement energy germs");
  germ->require_subcommand(1);
  auto* ups_cmd = germ->add_subcommand("upsilon", "Germ of an orbifold-lift torus");
  ups_cmd->add_option("-k", o.k, "Orbifold order (>= 2)")->required();
  ups_cmd->add_option("--a1", o.a1, "First area parameter")->required();
  ups_cmd->add_option("--a2", o.a2, "Second area parameter")->required();
  auto* theta_cmd = germ->add_subcommand("theta", "Germ of a lifted triangle torus");
  theta_cmd->add_option("--triple", o.triple, "Markov triple a,b,c")->required();
  theta_cmd->add_option("--area", o.area, "Total area parameter")->required();
  auto* tail_opt = theta_cmd->add_option("--tail", o.tail, "Extra product factors p,q,...");
  theta_cmd->add_option("--mode", o.mode, "Vector normalization: literal|cone")
      ->check(CLI::IsMember({"literal", "cone"}));
  auto* prod_cmd = germ->add_subcommand("product", "Germ of a product torus");
  prod_cmd->add_option("--a", o.areas, "Factor areas p,q,...")->required();
  auto* toric_cmd = germ->add_subcommand("toric", "Germ of a toric fibre");
  toric_cmd->add_option("--polytope", o.in_file, "Polytope JSON file")->required();
  toric_cmd->add_option("--point", o.point, "Interior point x,y,...")->required();
  auto* compare_cmd = germ->add_subcommand("compare", "Decide germ equivalence");
  compare_cmd->add_option("--left", o.left_file, "Left germ JSON file")->required();
  compare_cmd->add_option("--right", o.right_file, "Right germ JSON file")->required();
  auto* inv_cmd = germ->add_subcommand("invariants", "Invariants of a germ");
  inv_cmd->add_option("--in", o.in_file, "Germ JSON file")->required();

  auto* check = app.add_subcommand("check", "Arithmetic embedding criteria");
  check->require_subcommand(1);
  auto* cs_cmd = check->add_subcommand("cs", "Chart smallness for a product torus");
  cs_cmd->add_option("--torus", o.areas, "Factor areas p,q,...")->required();
  cs_cmd->add_option("--radius", o.radius, "Chart capacity R")->required();
  cs_cmd->add_option("--lambda-s", o.lambda_s, "Minimal sphere area or inf");
  auto* eps_cmd = check->add_subcommand("epsilon", "Size threshold of a torus family");
  eps_cmd->add_option("--family", o.family, "upsilon|theta")
      ->required()
      ->check(CLI::IsMember({"upsilon", "theta"}));
  eps_cmd->add_option("--radius", o.radius, "Chart capacity R")->required();
  eps_cmd->add_option("--lambda-s", o.lambda_s, "Minimal sphere area or inf");
  auto* thd_cmd = check->add_subcommand("embedding", "Product-family embedding conditions");
  thd_cmd->add_option("--area", o.area, "Triangle area parameter")->required();
  thd_cmd->add_option("--tail", o.tail, "Extra factors p,q,...")->required();
  thd_cmd->add_option("--radius", o.radius, "Chart capacity R")->required();
  thd_cmd->add_option("--lambda-s", o.lambda_s, "Minimal sphere area or inf");

  auto* verify = app.add_subcommand("verify", "Exact verification suites");
  verify->require_subcommand(1);
  auto* dia_cmd = verify->add_subcommand("dia-invariance",
                                         "Boundary-distance invariance along a mutation walk");
  dia_cmd->add_option("--triple", o.triple, "Markov triple a,b,c")->required();
  dia_cmd->add_option("--samples", o.samples, "Sample count per step");
  dia_cmd->add_option("--seed", o.seed, "Sampling seed");

  // CLI11 consumes the vector from the back.
  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (markov_tree_cmd->parsed()) {
      out << markov_tree_to_json(markov_tree(Int(o.max_entry)));
      return 0;
    }
    if (delta_cmd->parsed()) {
      MarkovTriple triple = parse_triple(o.triple);
      std::vector<int> path = path_opt->count() ? parse_slot_list(o.path) : std::vector<int>{};
      MarkovTriangle tri = triangle_for(triple, path, path_opt->count() > 0);
      out << diagram_to_json(tri.diagram);
      return 0;
    }
    if (mutate_cmd->parsed()) {
      ATFDiagram d = diagram_from_json(read_file(o.in_file));
      if (o.node < 1 || static_cast<std::size_t>(o.node) > d.nodes().size())
        fail("BadNode", "node index out of range");
      MutationResult res = mutate_diagram(d, static_cast<std::size_t>(o.node - 1));
      std::string text = diagram_to_json(res.diagram);
      write_file(o.out_file, text);
      out << text;
      return 0;
    }
    if (render_cmd->parsed()) {
      ATFDiagram d = diagram_from_json(read_file(o.in_file));
      std::string svg = render_svg(d, o.render);
      write_file(o.out_file, svg);
      out << detail::dump(json{{"written", o.out_file}, {"bytes", svg.size()}});
      return 0;
    }
    if (ups_cmd->parsed()) {
      UpsilonParams p(Int(o.k), parse_rat(o.a1), parse_rat(o.a2));
      out << germ_to_json(germ_upsilon(p));
      return 0;
    }
    if (theta_cmd->parsed()) {
      MarkovTriple triple = parse_triple(o.triple);
      MarkovTriangle tri = triangle_for(triple, {}, false);
      Rat area = parse_rat(o.area);
      if (tail_opt->count()) {
        if (o.mode != "literal") {
          err << "--tail only supports the literal mode\n";
          return 2;
        }
        out << germ_to_json(germ_theta_product(tri, area, parse_rat_list(o.tail)));
      } else {
        ThetaVectorMode mode =
            o.mode == "cone" ? ThetaVectorMode::cone : ThetaVectorMode::literal;
        out << germ_to_json(germ_theta(tri, area, mode));
      }
      return 0;
    }
    if (prod_cmd->parsed()) {
      out << germ_to_json(germ_product_torus(ProductTorusSpec(parse_rat_list(o.areas))));
      return 0;
    }
    if (toric_cmd->parsed()) {
      RationalPolytope p = polytope_from_json(read_file(o.in_file));
      RatVec x = parse_rat_list(o.point);
      out << germ_to_json(germ_toric_fibre(p, x));
      return 0;
    }
    if (compare_cmd->parsed()) {
      Germ left = germ_from_json(read_file(o.left_file));
      Germ right = germ_from_json(read_file(o.right_file));
      out << detail::dump(compare_json(left, right));
      return 0;
    }
    if (inv_cmd->parsed()) {
      Germ g = germ_from_json(read_file(o.in_file));
      out << detail::dump(detail::germ_invariants_json(germ_invariants(g)));
      return 0;
    }
    if (cs_cmd->parsed()) {
      ProductTorusSpec torus(parse_rat_list(o.areas));
      ChartSpec chart = ChartSpec::make(parse_rat(o.radius), parse_lambda(o.lambda_s));
      out << detail::dump(cs_json(has_property_cs(torus, chart)));
      return 0;
    }
    if (eps_cmd->parsed()) {
      ChartSpec chart = ChartSpec::make(parse_rat(o.radius), parse_lambda(o.lambda_s));
      TorusFamily family = o.family == "upsilon" ? TorusFamily::upsilon : TorusFamily::theta;
      out << detail::dump(json{{"family", o.family},
                               {"epsilon", rat_to_string(epsilon_threshold(family, chart))}});
      return 0;
    }
    if (thd_cmd->parsed()) {
      ChartSpec chart = ChartSpec::make(parse_rat(o.radius), parse_lambda(o.lambda_s));
      EmbeddingReport r = embedding_condition(parse_rat(o.area), parse_rat_list(o.tail), chart);
      out << detail::dump(json{{"ok", r.ok},
                               {"tail_ok", r.tail_ok},
                               {"capacity_ok", r.capacity_ok},
                               {"sphere_ok", r.sphere_ok},
                               {"capacity_lhs", rat_to_string(r.capacity_lhs)},
                               {"area_third", rat_to_string(r.area_third)}});
      return 0;
    }
    if (dia_cmd->parsed()) {
      MarkovTriple triple = parse_triple(o.triple);
      std::vector<int> slots = markov_path(triple);
      if (o.samples < 1) fail("BadSampleCount", "need at least one sample");
      json steps = json::array();
      std::size_t total_failures = 0;
      MarkovWalk walk;
      for (std::size_t step = 0; step < slots.size(); ++step) {
        ATFDiagram before = walk.diagram();
        PiecewiseShear tau = walk.step(slots[step]);
        InvarianceReport rep =
            check_dia_invariance(before, walk.diagram(), tau, static_cast<std::size_t>(o.samples),
                                 static_cast<std::uint64_t>(o.seed) + step);
        total_failures += rep.failures.size();
        steps.push_back(json{{"index", step},
                             {"slot", slots[step]},
                             {"samples", rep.samples},
                             {"failures", rep.failures.size()}});
      }
      json t = json::array();
      for (const Int& x : triple.sorted()) t.push_back(detail::int_to_i64(x));
      json w = json::array();
      for (int s : slots) w.push_back(s);
      out << detail::dump(json{{"triple", t},
                               {"path", w},
                               {"steps", steps},
                               {"total_failures", total_failures}});
      return 0;
    }
    err << "no subcommand selected\n";
    return 2;
  } catch (const DomainError& e) {
    out << detail::dump(json{{"error", e.code()}, {"message", e.what()}});
    return 1;
  } catch (const detail::json::exception& e) {
    out << detail::dump(json{{"error", "BadJson"}, {"message", e.what()}});
    return 1;
  }
}

}  // namespace latgerm
