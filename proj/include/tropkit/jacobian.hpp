#pragma once

// Period lattice and Abel-Jacobi map of a metric graph. A regular 1-form is
// identified with an integer cycle through the edge-length pairing, so the
// Jacobian is R^g modulo the column lattice of the period matrix.

#include <cstddef>
#include <vector>

#include "tropkit/metricgraph.hpp"
#include "tropkit/rational.hpp"

namespace tropkit {

/// Signed edge coefficients of g independent cycles.
struct CycleBasis {
  std::vector<std::vector<long>> cycles;

  std::size_t genus() const { return cycles.size(); }
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Fundamental cycles of the chords of the BFS spanning tree rooted at vertex 0.
CycleBasis cycle_basis(const MetricGraph& g);

/// Throws InputError unless every cycle has zero boundary, avoids infinite
/// edges, the cycles are linearly independent and there are genus(g) of them.
void validate_cycle_basis(const MetricGraph& g, const CycleBasis& basis);

/// Q[i][j] = sum over edges of length(e) * c_i(e) * c_j(e).
RationalMatrix period_matrix(const MetricGraph& g, const CycleBasis& basis);
RationalMatrix period_matrix(const MetricGraph& g);

struct JacobianPoint {
  std::vector<Rational> coords;
};

/// Integrates the forms of `basis` along a chain bounding D, built from tree
/// paths out of `root` (BFS tree rooted there). Throws DomainError when
/// deg D != 0 or D touches an infinite edge.
JacobianPoint abel_jacobi(const MetricGraph& g, const Divisor& d, const CycleBasis& basis, std::size_t root = 0);
JacobianPoint abel_jacobi(const MetricGraph& g, const Divisor& d);

/// True when p1 - p2 lies in the period lattice Q·Z^g.
bool jac_equal(const RationalMatrix& periods, const JacobianPoint& p1, const JacobianPoint& p2);

/// Exact solution of A x = b for square nonsingular A; throws DomainError
/// when A is singular.
std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b);

}  // namespace tropkit
