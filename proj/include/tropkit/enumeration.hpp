#pragma once

// Counting plane curves of given degree and genus through generic points
// with floor diagrams.

#include <cstddef>
#include <vector>

#include "tropkit/parallel.hpp"
#include "tropkit/rational.hpp"

namespace tropkit {

/// Edge between floors (0-based); always from < to.
struct FloorEdge {
  int from = 0;
  int to = 0;
  long weight = 1;

  friend auto operator<=>(const FloorEdge&, const FloorEdge&) = default;
};

struct FloorDiagram {
  int degree = 0;
  /// Sorted.
  std::vector<FloorEdge> edges;

  /// Outgoing minus incoming weight per floor.
  std::vector<long> divergence() const;
  /// First Betti number of the underlying graph.
  long genus() const;
  bool connected() const;

  friend auto operator<=>(const FloorDiagram&, const FloorDiagram&) = default;
};

inline constexpr int kDefaultMaxDegree = 6;

/// All floor diagrams of degree d and genus g in lexicographic order of their
/// sorted edge lists. Empty when g is outside [0, (d-1)(d-2)/2].
std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int g);

/// Throws DomainError unless the diagram is connected, has genus g, and
/// every floor has divergence at most 1.
void validate_floor_diagram(const FloorDiagram& diagram, int g);

/// Number of markings of the diagram up to equivalence: linear extensions of
/// floors, edge midpoints and the 1 - div(v) ends of each floor, with floors
/// kept in order.
BigInt marking_count(const FloorDiagram& diagram);

/// Product of squared edge weights.
BigInt multiplicity(const FloorDiagram& diagram);

/// Number of degree-d genus-g plane curves through 3d - 1 + g generic points.
/// Throws DomainError for d < 1 or d > max_degree.
BigInt count_curves(int d, int g, Exec exec = Exec::parallel, int max_degree = kDefaultMaxDegree);

/// Rational plane curve counts from the recursion N_1 = 1,
/// N_d = sum N_a N_b a^2 b (b C(3d-4, 3a-2) - a C(3d-4, 3a-1)).
BigInt kontsevich_N(int d);

}  // namespace tropkit
