#pragma once

// Integer-vector and lattice-polytope utilities shared by the polynomial and
// plane-curve code.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tropkit/rational.hpp"

namespace tropkit {

using IntVec = std::vector<std::int64_t>;

std::int64_t gcd_of(std::span<const std::int64_t> v);
/// v divided by the gcd of its entries. The zero vector maps to itself.
IntVec primitive(std::span<const std::int64_t> v);
/// Number of lattice steps between a and b (gcd of coordinate differences).
std::int64_t lattice_length(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

struct LatticePolytope {
  std::size_t dim = 0;
  /// Extreme points, sorted lexicographically.
  std::vector<IntVec> vertices;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
};

/// Convex hull of points in any dimension (extreme points via exact LP).
LatticePolytope convex_hull(std::span<const IntVec> points);

/// Planar convex hull in counter-clockwise order starting at the
/// lexicographically smallest vertex; collinear boundary points dropped.
std::vector<IntVec> convex_hull_2d(std::span<const IntVec> points);

/// Maximum of c·x subject to A x = b, x >= 0, solved exactly with a
/// two-phase simplex (Bland's rule). Returns nullopt when infeasible and
/// throws DomainError when unbounded.
std::optional<Rational> lp_maximize(const std::vector<std::vector<Rational>>& A,
                                    const std::vector<Rational>& b,
                                    const std::vector<Rational>& c);

/// Height of the upper convex hull of the lifted points (points[i], heights[i])
/// above `target`, or nullopt when target lies outside conv(points).
std::optional<Rational> upper_hull_height(std::span<const IntVec> points,
                                          std::span<const Rational> heights,
                                          std::span<const std::int64_t> target);

bool in_convex_hull(std::span<const IntVec> points, std::span<const std::int64_t> target);

}  // namespace tropkit
