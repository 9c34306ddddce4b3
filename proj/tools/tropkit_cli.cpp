// Command-line front end: JSON in, JSON (or SVG) out.
//
// Exit codes: 0 success, 1 domain error, 2 input error. Errors are written to
// stderr as {"error": {"kind": ..., "message": ...}}.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tropkit/enumeration.hpp"
#include "tropkit/errors.hpp"
#include "tropkit/io.hpp"
#include "tropkit/jacobian.hpp"
#include "tropkit/metricgraph.hpp"
#include "tropkit/moduli.hpp"
#include "tropkit/planecurve.hpp"
#include "tropkit/svg.hpp"

using namespace tropkit;
using io::json;

namespace {

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string doc(const json& j) { return j.dump(2) + "\n"; }

// Point as "x1,x2,..." or a JSON file holding an array of rationals.
std::vector<Rational> parse_point(const std::string& arg) {
  std::vector<Rational> out;
  if (arg.ends_with(".json")) {
    const json j = io::read_json_file(arg);
    if (!j.is_array()) throw InputError("point file must hold an array");
    for (const auto& x : j) out.push_back(io::rational_from_json(x));
    return out;
  }
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InputError("empty point");
  return out;
}

// Curve file, or a polynomial file whose corner locus is taken.
PlaneTropicalCurve load_curve(const std::string& path) {
  const json j = io::read_json_file(path);
  if (j.is_object() && j.contains("terms")) return corner_locus(io::polynomial_from_json(j));
  return io::curve_from_json(j);
}

int report(const std::string& kind, const std::string& message, int code) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropkit: exact tropical geometry toolkit", "tropkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

  std::string poly_path, point_arg;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a point");
  eval->add_option("polynomial", poly_path)->required();
  eval->add_option("point", point_arg, "x1,x2,... (use -- before negative values) or a JSON array file")->required();

  std::string svg_path, bbox_arg;
  auto* curve = app.add_subcommand("curve", "Corner locus of a polynomial in two variables");
  curve->add_option("polynomial", poly_path)->required();
  curve->add_option("--svg", svg_path, "Also draw the curve to this SVG file");
  curve->add_option("--bbox", bbox_arg, "Drawing window x0,y0,x1,y1");

  std::string curve1, curve2;
  std::uint64_t seed = 0;
  auto* intersect = app.add_subcommand("intersect", "Stable intersection of two curves");
  intersect->add_option("curve1", curve1)->required();
  intersect->add_option("curve2", curve2)->required();
  intersect->add_option("--seed", seed, "Seed for the generic translate");

  std::string graph_path, second_path, q_name;
  auto* graph = app.add_subcommand("graph", "Divisor theory on metric graphs");
  graph->require_subcommand(1);
  auto* g_genus = graph->add_subcommand("genus", "First Betti number");
  auto* g_canonical = graph->add_subcommand("canonical", "Canonical divisor");
  auto* g_divisor_of = graph->add_subcommand("divisor-of", "Divisor of a rational function");
  auto* g_rank = graph->add_subcommand("rank", "Rank of a divisor");
  auto* g_rr = graph->add_subcommand("rr-check", "Check Riemann-Roch for a divisor");
  auto* g_reduce = graph->add_subcommand("reduce", "q-reduced representative of a divisor");
  for (auto* sub : {g_genus, g_canonical}) sub->add_option("graph", graph_path)->required();
  g_divisor_of->add_option("graph", graph_path)->required();
  g_divisor_of->add_option("function", second_path)->required();
  for (auto* sub : {g_rank, g_rr, g_reduce}) {
    sub->add_option("graph", graph_path)->required();
    sub->add_option("divisor", second_path)->required();
  }
  g_reduce->add_option("--q", q_name, "Base vertex (default: the first vertex)");

  auto* jac = app.add_subcommand("jacobian", "Period lattice and Abel-Jacobi map");
  jac->require_subcommand(1);
  auto* j_period = jac->add_subcommand("period", "Period matrix");
  auto* j_aj = jac->add_subcommand("abel-jacobi", "Abel-Jacobi image of a degree-0 divisor");
  j_period->add_option("graph", graph_path)->required();
  j_aj->add_option("graph", graph_path)->required();
  j_aj->add_option("divisor", second_path)->required();

  int degree = 0, genus_arg = 0, max_degree = kDefaultMaxDegree;
  bool list_diagrams = false;
  auto* count = app.add_subcommand("count", "Number of plane curves through generic points");
  count->add_option("--degree", degree)->required();
  count->add_option("--genus", genus_arg)->required();
  count->add_flag("--list-diagrams", list_diagrams, "Also print the floor diagrams");
  count->add_option("--max-degree", max_degree, "Raise the degree limit");

  std::string tree_path;
  auto* moduli = app.add_subcommand("moduli", "Rational curves with marked points");
  moduli->require_subcommand(1);
  auto* cross = moduli->add_subcommand("cross-ratio", "Cross-ratio coordinates of a tree");
  cross->add_option("tree", tree_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report("input", e.what(), 2);
  }

  try {
    std::string text;
    if (*eval) {
      const auto f = io::polynomial_from_json(io::read_json_file(poly_path));
      text = doc(to_string(evaluate(f, parse_point(point_arg))));
    } else if (*curve) {
      const auto c = corner_locus(io::polynomial_from_json(io::read_json_file(poly_path)));
      if (!svg_path.empty()) {
        const auto box = bbox_arg.empty() ? default_bbox(c) : parse_bbox(bbox_arg);
        write_text(curve_svg(c, box), svg_path);
      } else if (!bbox_arg.empty()) {
        throw InputError("--bbox needs --svg");
      }
      text = doc(io::to_json(c));
    } else if (*intersect) {
      text = doc(io::to_json(stable_intersection(load_curve(curve1), load_curve(curve2), seed)));
    } else if (*graph) {
      const auto g = io::graph_from_json(io::read_json_file(graph_path));
      if (*g_genus) {
        text = doc(genus(g));
      } else if (*g_canonical) {
        text = doc(io::to_json(g, canonical_divisor(g)));
      } else if (*g_divisor_of) {
        text = doc(io::to_json(g, divisor_of(io::function_from_json(g, io::read_json_file(second_path)))));
      } else {
        const auto d = io::divisor_from_json(g, io::read_json_file(second_path));
        if (*g_rank) {
          text = doc(rank(g, d));
        } else if (*g_rr) {
          text = doc(riemann_roch_check(g, d));
        } else {
          std::size_t q = 0;
          if (!q_name.empty()) {
            const auto found = g.find_vertex(q_name);
            if (!found) throw InputError("unknown vertex '" + q_name + "'");
            q = *found;
          }
          text = doc(io::to_json(g, reduced_divisor(g, d, GraphPoint::vertex(q))));
        }
      }
    } else if (*jac) {
      const auto g = io::graph_from_json(io::read_json_file(graph_path));
      if (*j_period) {
        text = doc(io::to_json(period_matrix(g)));
      } else {
        text = doc(io::to_json(abel_jacobi(g, io::divisor_from_json(g, io::read_json_file(second_path)))));
      }
    } else if (*count) {
      text = to_string(count_curves(degree, genus_arg, Exec::parallel, max_degree)) + "\n";
      if (list_diagrams) {
        json list = json::array();
        for (const auto& fd : enumerate_floor_diagrams(degree, genus_arg)) list.push_back(io::to_json(fd));
        text += doc(list);
      }
    } else if (*moduli) {
      text = doc(io::to_json(cross_ratios(io::tree_from_json(io::read_json_file(tree_path)))));
    }
    write_text(text, output);
    return 0;
  } catch (const DomainError& e) {
    return report("domain", e.what(), 1);
  } catch (const InputError& e) {
    return report("input", e.what(), 2);
  } catch (const json::exception& e) {
    return report("input", e.what(), 2);
  }
}
