#pragma once

// Tropical curves as metric graphs, and divisor theory on them.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tropkit/parallel.hpp"
#include "tropkit/rational.hpp"

namespace tropkit {

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  /// nullopt means infinite length.
  std::optional<Rational> length;

  bool infinite() const { return !length.has_value(); }
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Connected finite graph with positive rational (or infinite leaf) edge
/// lengths. Loops and parallel edges are allowed. Immutable.
class MetricGraph {
 public:
  /// Throws InputError when the graph is empty or disconnected, a vertex name
  /// repeats, a finite length is not positive, or an infinite edge has no
  /// 1-valent endpoint.
  MetricGraph(std::vector<std::string> vertex_names, std::vector<GraphEdge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(std::size_t e) const { return edges_.at(e); }
  /// Loops count twice.
  std::size_t valence(std::size_t v) const { return valence_.at(v); }
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  bool all_finite() const;

  friend bool operator==(const MetricGraph&, const MetricGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<GraphEdge> edges_;
  std::vector<std::size_t> valence_;
};

/// A vertex, or a point strictly inside an edge at `offset` from its u end.
class GraphPoint {
 public:
  static GraphPoint vertex(std::size_t v);
  /// Requires offset > 0; the upper bound is checked against a graph by
  /// validate_point.
  static GraphPoint on_edge(std::size_t edge, Rational offset);

  bool is_vertex() const { return !edge_.has_value(); }
  std::size_t vertex_id() const;
  std::size_t edge_id() const;
  const Rational& offset() const;

  friend bool operator==(const GraphPoint& a, const GraphPoint& b);
  friend bool operator<(const GraphPoint& a, const GraphPoint& b);

 private:
  std::size_t vertex_ = 0;
  std::optional<std::size_t> edge_;
  Rational offset_;
};

/// Canonical point at distance `offset` along edge e: endpoints become vertex
/// points. Throws InputError if offset is outside [0, length].
GraphPoint point_on(const MetricGraph& g, std::size_t e, const Rational& offset);
void validate_point(const MetricGraph& g, const GraphPoint& p);

class Divisor {
 public:
  Divisor() = default;
  static Divisor point(const GraphPoint& p, long coefficient = 1);

  void add(const GraphPoint& p, long coefficient);
  long operator[](const GraphPoint& p) const;
  const std::map<GraphPoint, long>& entries() const { return entries_; }
  long degree() const;
  bool is_effective() const;
  bool empty() const { return entries_.empty(); }

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  Divisor operator-() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<GraphPoint, long> entries_;
};

struct Breakpoint {
  std::size_t edge = 0;
  Rational offset;
  Rational value;
};

/// Continuous piecewise-linear function with integer slopes, given by values
/// at every vertex and at extra breakpoints inside edges (linear in between).
class RationalFunction {
 public:
  /// Throws InputError on infinite edges, misplaced breakpoints or
  /// non-integer slopes.
  RationalFunction(MetricGraph graph, std::vector<Rational> vertex_values,
                   std::vector<Breakpoint> breakpoints = {});

  const MetricGraph& graph() const { return graph_; }
  const std::vector<Rational>& vertex_values() const { return vertex_values_; }
  /// Breakpoints of edge e sorted by offset.
  const std::vector<Breakpoint>& breakpoints(std::size_t e) const { return breaks_.at(e); }
  Rational value_at(const GraphPoint& p) const;

 private:
  MetricGraph graph_;
  std::vector<Rational> vertex_values_;
  std::vector<std::vector<Breakpoint>> breaks_;
};

/// First Betti number #edges - #vertices + 1.
long genus(const MetricGraph& g);

/// Sum over vertices of (valence - 2). Requires finite edges.
Divisor canonical_divisor(const MetricGraph& g);

/// Sum of outgoing slopes at every point: zeros positive, poles negative.
Divisor divisor_of(const RationalFunction& phi);

/// Uniform discrete model of a finite metric graph: every edge is cut into
/// pieces of a common length 1/M, with M chosen so that the given points are
/// model nodes. Chip-firing on this model decides linear equivalence.
class ChipFiringModel {
 public:
  ChipFiringModel(const MetricGraph& g, std::span<const GraphPoint> points, long refine = 1);

  std::size_t size() const { return adjacency_.size(); }
  /// Common denominator M; model edges have length 1/M.
  const BigInt& denominator() const { return steps_per_unit_; }
  std::size_t node_of(const GraphPoint& p) const;
  GraphPoint point_of(std::size_t node) const;

  std::vector<long> to_vector(const Divisor& d) const;
  Divisor to_divisor(std::span<const long> chips) const;

  /// Unique q-reduced divisor equivalent to `chips` (non-negative off q and
  /// no subset avoiding q can fire).
  std::vector<long> reduce(std::vector<long> chips, std::size_t q) const;

  /// Model neighbours with edge multiplicities (loops removed).
  const std::vector<std::vector<std::pair<std::size_t, long>>>& adjacency() const { return adjacency_; }

 private:
  BigInt steps_per_unit_;
  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> first_interior_;  // per edge, node id of its first interior node
  std::vector<long> pieces_;                 // per edge
  std::vector<std::vector<std::pair<std::size_t, long>>> adjacency_;
};

/// The q-reduced representative of D's linear equivalence class.
Divisor reduced_divisor(const MetricGraph& g, const Divisor& d, const GraphPoint& q);

bool linearly_equivalent(const MetricGraph& g, const Divisor& d1, const Divisor& d2);

/// Baker–Norine rank with obstructions drawn from the uniform model's nodes.
/// `refine` subdivides the model further (used to cross-check the test set).
long rank(const MetricGraph& g, const Divisor& d, Exec exec = Exec::parallel, long refine = 1);

/// rank(D) - rank(K - D) == deg(D) - genus + 1.
bool riemann_roch_check(const MetricGraph& g, const Divisor& d, Exec exec = Exec::parallel);

/// Attaches an infinite leaf at p, subdividing p's edge when p is interior
/// (the second half of the edge is appended as a new last edge).
MetricGraph modify(const MetricGraph& g, const GraphPoint& p);

/// Removes the infinite leaf edge `e` and its 1-valent end. If the attaching
/// vertex is left 2-valent between two distinct non-loop finite edges and
/// `smooth` is set, those edges are merged back into one.
MetricGraph contract_leaf(const MetricGraph& g, std::size_t e, bool smooth = true);

/// Compact trees are all equivalent under modifications; genus separates
/// everything else.
bool trees_equivalent(const MetricGraph& t1, const MetricGraph& t2);

}  // namespace tropkit
