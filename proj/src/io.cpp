#include "tropkit/io.hpp"

#include <fstream>
#include <set>

#include "tropkit/errors.hpp"

namespace tropkit::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return a;
}

long integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::size_t index_of(const std::vector<std::string>& names, const json& j) {
  if (!j.is_string()) throw InputError("vertex reference must be a name string");
  const auto name = j.get<std::string>();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InputError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

json point_json(const Point2& p) { return json::array({to_json(p[0]), to_json(p[1])}); }

GraphPoint point_from_json(const MetricGraph& g, const json& at) {
  if (at.is_string()) return GraphPoint::vertex(index_of(g.vertex_names(), at));
  const long e = integer(field(at, "edge"), "edge index");
  if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) throw InputError("edge index out of range");
  return point_on(g, static_cast<std::size_t>(e), rational_from_json(field(at, "offset")));
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw InputError("rationals must be JSON strings \"p/q\" or \"p\"");
  return parse_rational(j.get<std::string>());
}

json to_json(const Rational& q) { return to_string(q); }

TropicalPolynomial polynomial_from_json(const json& j) {
  const long n = integer(field(j, "n"), "n");
  if (n < 1) throw InputError("n must be at least 1");
  std::vector<Monomial> terms;
  for (const auto& t : array_field(j, "terms")) {
    Monomial m;
    for (const auto& x : array_field(t, "exp")) m.exponent.push_back(integer(x, "exponent"));
    m.coefficient = rational_from_json(field(t, "coeff"));
    terms.push_back(std::move(m));
  }
  return TropicalPolynomial(static_cast<std::size_t>(n), std::move(terms));
}

json to_json(const TropicalPolynomial& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back({{"exp", t.exponent}, {"coeff", to_json(t.coefficient)}});
  return {{"n", f.dim()}, {"terms", terms}};
}

PlaneTropicalCurve curve_from_json(const json& j) {
  std::vector<Point2> vertices;
  for (const auto& v : array_field(j, "vertices")) {
    if (!v.is_array() || v.size() != 2) throw InputError("curve vertex must be a pair of rationals");
    vertices.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
  }
  auto vertex_index = [&](const json& x) {
    const long i = integer(x, "vertex index");
    if (i < 0) throw InputError("negative vertex index");
    return static_cast<std::size_t>(i);
  };
  std::vector<CurveEdge> edges;
  for (const auto& e : array_field(j, "edges")) {
    const auto kind = field(e, "kind");
    const long w = integer(field(e, "w"), "weight");
    if (kind == "seg") {
      edges.push_back({Segment{vertex_index(field(e, "a")), vertex_index(field(e, "b"))}, w});
    } else if (kind == "ray") {
      const auto& dir = array_field(e, "dir");
      if (dir.size() != 2) throw InputError("ray direction must have two entries");
      edges.push_back({Ray{vertex_index(field(e, "v")), {integer(dir[0], "direction"), integer(dir[1], "direction")}}, w});
    } else {
      throw InputError("edge kind must be \"seg\" or \"ray\"");
    }
  }
  return PlaneTropicalCurve(std::move(vertices), std::move(edges));
}

json to_json(const PlaneTropicalCurve& c) {
  json vertices = json::array();
  for (const auto& v : c.vertices()) vertices.push_back(point_json(v));
  json edges = json::array();
  for (const auto& e : c.edges()) {
    if (const auto* s = std::get_if<Segment>(&e.shape)) {
      edges.push_back({{"kind", "seg"}, {"a", s->a}, {"b", s->b}, {"w", e.weight}});
    } else {
      const auto& r = std::get<Ray>(e.shape);
      edges.push_back({{"kind", "ray"}, {"v", r.v}, {"dir", {r.dir[0], r.dir[1]}}, {"w", e.weight}});
    }
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

json to_json(const IntersectionReport& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back({{"at", point_json(p.at)}, {"mult", p.multiplicity}});
  return {{"points", points}, {"total", r.total}, {"perturbed", r.perturbed}, {"translation", point_json(r.translation)}};
}

MetricGraph graph_from_json(const json& j) {
  std::vector<std::string> names;
  for (const auto& v : array_field(j, "vertices")) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<GraphEdge> edges;
  for (const auto& e : array_field(j, "edges")) {
    GraphEdge edge{index_of(names, field(e, "u")), index_of(names, field(e, "v")), std::nullopt};
    const auto& len = field(e, "len");
    if (!(len.is_string() && len.get<std::string>() == "inf")) edge.length = rational_from_json(len);
    edges.push_back(std::move(edge));
  }
  return MetricGraph(std::move(names), std::move(edges));
}

json to_json(const MetricGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", g.vertex_names()[e.u]},
                     {"v", g.vertex_names()[e.v]},
                     {"len", e.length ? to_json(*e.length) : json("inf")}});
  }
  return {{"vertices", g.vertex_names()}, {"edges", edges}};
}

Divisor divisor_from_json(const MetricGraph& g, const json& j) {
  Divisor d;
  for (const auto& entry : array_field(j, "entries")) {
    d.add(point_from_json(g, field(entry, "at")), integer(field(entry, "c"), "divisor coefficient"));
  }
  return d;
}

json to_json(const MetricGraph& g, const Divisor& d) {
  json entries = json::array();
  for (const auto& [p, c] : d.entries()) {
    json at = p.is_vertex() ? json(g.vertex_names()[p.vertex_id()])
                            : json{{"edge", p.edge_id()}, {"offset", to_json(p.offset())}};
    entries.push_back({{"at", at}, {"c", c}});
  }
  return {{"entries", entries}};
}

RationalFunction function_from_json(const MetricGraph& g, const json& j) {
  const auto& values = field(j, "values");
  if (!values.is_object()) throw InputError("'values' must map vertex names to rationals");
  std::vector<std::optional<Rational>> given(g.vertex_count());
  for (const auto& [name, value] : values.items()) {
    given[index_of(g.vertex_names(), json(name))] = rational_from_json(value);
  }
  std::vector<Rational> vertex_values;
  for (std::size_t v = 0; v < given.size(); ++v) {
    if (!given[v]) throw InputError("missing value for vertex '" + g.vertex_names()[v] + "'");
    vertex_values.push_back(*given[v]);
  }
  std::vector<Breakpoint> breaks;
  if (j.contains("breakpoints")) {
    for (const auto& b : array_field(j, "breakpoints")) {
      const long e = integer(field(b, "edge"), "edge index");
      if (e < 0) throw InputError("negative edge index");
      breaks.push_back({static_cast<std::size_t>(e), rational_from_json(field(b, "offset")),
                        rational_from_json(field(b, "value"))});
    }
  }
  return RationalFunction(g, std::move(vertex_values), std::move(breaks));
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const JacobianPoint& p) {
  json coords = json::array();
  for (const auto& x : p.coords) coords.push_back(to_json(x));
  return {{"coords", coords}};
}

TropicalTree tree_from_json(const json& j) {
  std::vector<std::string> nodes;
  for (const auto& v : array_field(j, "nodes")) {
    if (!v.is_string()) throw InputError("node names must be strings");
    nodes.push_back(v.get<std::string>());
  }
  if (std::set<std::string>(nodes.begin(), nodes.end()).size() != nodes.size()) {
    throw InputError("duplicate node name");
  }
  std::vector<TreeEdge> edges;
  for (const auto& e : array_field(j, "edges")) {
    edges.push_back({index_of(nodes, field(e, "u")), index_of(nodes, field(e, "v")), rational_from_json(field(e, "len"))});
  }
  std::vector<TreeLeaf> leaves;
  for (const auto& l : array_field(j, "leaves")) {
    leaves.push_back({integer(field(l, "label"), "leaf label"), index_of(nodes, field(l, "at"))});
  }
  return TropicalTree(std::move(nodes), std::move(edges), std::move(leaves));
}

json to_json(const std::vector<CrossRatio>& ratios) {
  json out = json::array();
  for (const auto& r : ratios) {
    out.push_back({{"pairs", {{r.labels[0], r.labels[1]}, {r.labels[2], r.labels[3]}}}, {"value", to_json(r.value)}});
  }
  return out;
}

json to_json(const FloorDiagram& d) {
  json edges = json::array();
  for (const auto& e : d.edges) edges.push_back({{"from", e.from + 1}, {"to", e.to + 1}, {"w", e.weight}});
  return {{"floors", d.degree},
          {"edges", edges},
          {"markings_count", to_int64(marking_count(d))},
          {"multiplicity", to_int64(multiplicity(d))}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace tropkit::io
