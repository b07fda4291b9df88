// Command-line front end: every library operation on JSON files, plus SVG
// export. Exit codes: 0 = property holds / artifact produced, 1 = property
// fails (witness on stdout), 2 = usage or input error, 3 = budget exhausted
// or verdict unknown.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sapath/gadgets.hpp"
#include "sapath/io_json.hpp"
#include "sapath/svg.hpp"
#include "sapath/tree_draw.hpp"

namespace {

using namespace sapath;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnknown = 3;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::invalid_argument("cannot open input file: " + path);
  return json::parse(in);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump() << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out.good()) throw std::invalid_argument("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out.good()) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
  }
}

struct CommonFlags {
  std::string input, out;
  std::string mode = "sa";
  std::string algo = "linear";
  double tol = 1e-9;
  std::uint64_t budget = kDefaultSearchBudget;
  std::uint64_t seed = 1;
  double eps = 0.1;
  bool cross_check = false;
  bool show_slabs = false;
};

CheckVerdict run_check(const Polyline<double>& p, const std::string& mode,
                       const std::string& algo, const Tolerance& t) {
  if (mode == "ic") return increasing_chords(p, t);
  if (algo == "brute") return sa_bruteforce(p, t);
  return sa_check(p, t);  // dispatches to the linear 2D or 3D checker
}

int cmd_check_path(const CommonFlags& f) {
  auto p = polyline_from_json<double>(load_json(f.input));
  Tolerance t{f.tol};
  CheckVerdict v = run_check(p, f.mode, f.algo, t);
  if (f.cross_check) {
    CheckVerdict other = run_check(p, f.mode, f.algo == "brute" ? "linear" : "brute", t);
    if (v.ok != other.ok || v.witness != other.witness) {
      std::cerr << "cross-check: checkers disagree\n";
      return kExitInput;
    }
  }
  emit(verdict_to_json(v), f.out);
  return v.ok ? kExitOk : kExitFails;
}

int cmd_check_drawing(const CommonFlags& f) {
  auto g = drawing_from_json<double>(load_json(f.input));
  Tolerance t{f.tol};
  DrawingVerdict v = f.mode == "ic" ? is_ic_drawing(g, t, f.budget)
                                    : is_sa_drawing(g, t, f.budget);
  json j;
  j["status"] = v.status == DrawingStatus::Yes   ? "yes"
                : v.status == DrawingStatus::No  ? "no"
                                                 : "unknown";
  j["failing_pair"] =
      v.failing_pair ? json{v.failing_pair->first, v.failing_pair->second} : json(nullptr);
  emit(j, f.out);
  if (v.status == DrawingStatus::Yes) return kExitOk;
  return v.status == DrawingStatus::No ? kExitFails : kExitUnknown;
}

int cmd_find_path(const CommonFlags& f, int from, int to) {
  auto g = drawing_from_json<double>(load_json(f.input));
  Tolerance t{f.tol};
  SearchMode m = f.mode == "ic" ? SearchMode::IncreasingChord : SearchMode::SelfApproaching;
  PathResult r = find_sa_path(g, from, to, m, t, f.budget);
  json j;
  j["found"] = r.found;
  j["path"] = r.path ? json(*r.path) : json(nullptr);
  j["nodes_expanded"] = r.nodes_expanded;
  emit(j, f.out);
  if (r.found) return kExitOk;
  return r.budget_exhausted ? kExitUnknown : kExitFails;
}

const char* class_name(const TreeClass& c) {
  if (c.tag == TreeClassTag::K14Subdivision) return "K14_SUBDIVISION";
  if (c.tag == TreeClassTag::WindmillSubgraph) return "WINDMILL_SUBGRAPH";
  switch (c.reason) {
    case NotDrawableReason::DegreeGe5: return "DEGREE_GE_5";
    case NotDrawableReason::Degree4NotK14: return "DEGREE_4_NOT_K14";
    default: return "TWO_CANONICAL";
  }
}

int cmd_tree(const CommonFlags& f, const std::string& op) {
  Tolerance t{f.tol};
  if (op == "verify") {
    auto g = drawing_from_json<double>(load_json(f.input));
    auto v = verify_tree_drawing(g, t);
    json j;
    j["ok"] = v.ok;
    if (v.witness) {
      j["edge"] = {v.witness->edge.first, v.witness->edge.second};
      if (v.witness->offending_is_vertex)
        j["offending_vertex"] = v.witness->offending_vertex;
      else
        j["offending_edge"] = {v.witness->offending_edge.first, v.witness->offending_edge.second};
    }
    emit(j, f.out);
    return v.ok ? kExitOk : kExitFails;
  }
  auto tree = tree_from_json(load_json(f.input));
  TreeClass c = classify_tree(tree);
  if (op == "drawable") {
    json j;
    j["drawable"] = c.tag != TreeClassTag::NotDrawable;
    j["class"] = class_name(c);
    j["witness"] = c.witness;
    emit(j, f.out);
    return c.tag != TreeClassTag::NotDrawable ? kExitOk : kExitFails;
  }
  if (op == "draw") {
    auto r = draw_tree(tree);
    if (r.status == DrawStatus::NotDrawable) {
      json j;
      j["drawable"] = false;
      j["class"] = class_name(c);
      emit(j, f.out);
      return kExitFails;
    }
    if (r.status == DrawStatus::ConstructionFailed) {
      std::cerr << "tree draw: construction failed\n";
      return kExitUnknown;
    }
    json j = drawing_to_json(r.drawing);
    j["eps_used"] = r.eps_used;
    emit(j, f.out);
    return kExitOk;
  }
  std::cerr << "tree: unknown --op (expected drawable|draw|verify)\n";
  return kExitInput;
}

int cmd_steiner_build(const std::string& points_path, double eps, const std::string& out) {
  auto pts = points_from_json<double>(load_json(points_path));
  SteinerNetwork net = build_network(pts, eps);
  emit(network_to_json(net), out);
  return kExitOk;
}

int cmd_steiner_route(const std::string& net_path, int from, int to, const std::string& out) {
  SteinerNetwork net = network_from_json(load_json(net_path));
  RouteResult r;
  try {
    r = route(net, from, to);
  } catch (const std::runtime_error& e) {
    std::cerr << "route: " << e.what() << "\n";
    return kExitFails;
  }
  json j;
  j["frame"] = r.frame == RouteResult::Frame::Axis ? "axis" : "rotated";
  json path = json::array();
  for (const auto& p : r.path) path.push_back(point_to_json(p));
  j["path"] = path;
  emit(j, out);
  return kExitOk;
}

int cmd_gen_set_intersection(const CommonFlags& f) {
  json in = load_json(f.input);
  std::vector<int> A = in.at("A").get<std::vector<int>>();
  std::vector<int> B = in.at("B").get<std::vector<int>>();
  emit(polyline_to_json(gen_set_intersection_path(A, B)), f.out);
  return kExitOk;
}

int cmd_gen_sat(const CommonFlags& f) {
  std::ifstream in(f.input);
  if (!in.good()) throw std::invalid_argument("cannot open input file: " + f.input);
  CnfFormula formula = parse_dimacs(in);
  SatGadget g = gen_sat_graph(formula);
  json j = drawing_to_json(g.drawing);
  j["s"] = g.s;
  j["t"] = g.t;
  emit(j, f.out);
  return kExitOk;
}

int cmd_gen_delaunay_cex(const CommonFlags& f) {
  auto cex = find_delaunay_counterexample(f.seed, f.budget);
  json j;
  j["seed"] = f.seed;
  j["trials"] = cex.trials_used;
  if (cex.found) {
    j["points"] = points_to_json(cex.points).at("points");
    j["failing_pair"] = {cex.s, cex.t};
  }
  emit(j, f.out);
  return cex.found ? kExitOk : kExitFails;
}

int cmd_export_svg(const CommonFlags& f, int slab_edge) {
  json in = load_json(f.input);
  SvgOptions opt;
  opt.show_slabs = f.show_slabs;
  opt.slab_edge = slab_edge;
  std::string svg = in.contains("edges")
                        ? drawing_to_svg(drawing_from_json<double>(in), opt)
                        : polyline_to_svg(polyline_from_json<double>(in), opt);
  emit_text(svg, f.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-approaching path and drawing toolkit"};
  app.require_subcommand(1);
  CommonFlags f;
  int from = 0, to = 1, slab_edge = 0;
  std::string tree_op = "drawable";

  auto add_common = [&](CLI::App* c, bool needs_input = true) {
    auto* i = c->add_option("--input", f.input, "input JSON file");
    if (needs_input) i->required();
    c->add_option("--out", f.out, "output file (default stdout)");
    c->add_option("--tol", f.tol, "floating-point tolerance");
    c->add_option("--seed", f.seed, "random seed");
    c->add_option("--budget", f.budget, "search/trial budget");
  };

  auto* check_path = app.add_subcommand("check-path", "check a polyline");
  add_common(check_path);
  check_path->add_option("--mode", f.mode, "sa|ic")->check(CLI::IsMember({"sa", "ic"}));
  check_path->add_option("--algo", f.algo, "linear|brute")
      ->check(CLI::IsMember({"linear", "brute"}));
  check_path->add_flag("--cross-check", f.cross_check, "run both algorithms and compare");

  auto* check_drawing = app.add_subcommand("check-drawing", "check a graph drawing");
  add_common(check_drawing);
  check_drawing->add_option("--mode", f.mode, "sa|ic")->check(CLI::IsMember({"sa", "ic"}));

  auto* find_path = app.add_subcommand("find-path", "search for a path in a drawing");
  add_common(find_path);
  find_path->add_option("--mode", f.mode, "sa|ic")->check(CLI::IsMember({"sa", "ic"}));
  find_path->add_option("--from", from, "source vertex")->required();
  find_path->add_option("--to", to, "target vertex")->required();

  auto* tree = app.add_subcommand("tree", "tree drawability operations");
  add_common(tree);
  tree->add_option("--op", tree_op, "drawable|draw|verify")
      ->check(CLI::IsMember({"drawable", "draw", "verify"}));

  auto* steiner = app.add_subcommand("steiner", "Steiner network operations");
  steiner->require_subcommand(1);
  std::string points_path, net_path;
  auto* sbuild = steiner->add_subcommand("build", "build a network from points");
  sbuild->add_option("--points", points_path, "points JSON file")->required();
  sbuild->add_option("--eps", f.eps, "separation parameter");
  sbuild->add_option("--out", f.out, "output file (default stdout)");
  auto* sroute = steiner->add_subcommand("route", "route between two terminals");
  sroute->add_option("--net", net_path, "network JSON file")->required();
  sroute->add_option("--from", from, "source terminal index")->required();
  sroute->add_option("--to", to, "target terminal index")->required();
  sroute->add_option("--out", f.out, "output file (default stdout)");

  auto* gen = app.add_subcommand("gen", "generate reduction instances");
  gen->require_subcommand(1);
  auto* gsi = gen->add_subcommand("set-intersection", "path from two integer sets");
  add_common(gsi);
  auto* gsat = gen->add_subcommand("sat", "drawing from a DIMACS 3-CNF formula");
  add_common(gsat);
  auto* gcex = gen->add_subcommand("delaunay-cex", "search for a Delaunay counterexample");
  add_common(gcex, /*needs_input=*/false);

  auto* svg = app.add_subcommand("export-svg", "render a drawing or polyline");
  add_common(svg);
  svg->add_flag("--show-slabs", f.show_slabs, "shade one edge's perpendicular slab");
  svg->add_option("--edge", slab_edge, "edge index for --show-slabs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check_path) return cmd_check_path(f);
    if (*check_drawing) return cmd_check_drawing(f);
    if (*find_path) return cmd_find_path(f, from, to);
    if (*tree) return cmd_tree(f, tree_op);
    if (*sbuild) return cmd_steiner_build(points_path, f.eps, f.out);
    if (*sroute) return cmd_steiner_route(net_path, from, to, f.out);
    if (*gsi) return cmd_gen_set_intersection(f);
    if (*gsat) return cmd_gen_sat(f);
    if (*gcex) return cmd_gen_delaunay_cex(f);
    if (*svg) return cmd_export_svg(f, slab_edge);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknown;
  }
  return kExitInput;
}
