#pragma once

// Plane tropical curves: corner loci of bivariate tropical polynomials as
// weighted balanced 1-complexes, built from the dual regular subdivision of
// the Newton polygon.

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "tropkit/errors.hpp"
#include "tropkit/lattice.hpp"
#include "tropkit/polynomial.hpp"
#include "tropkit/rational.hpp"

namespace tropkit {

using Point2 = std::array<Rational, 2>;
using Dir2 = std::array<std::int64_t, 2>;

/// Primitive integer vector pointing along a nonzero rational vector.
Dir2 primitive_direction(const Point2& v);

struct Segment {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Ray {
  std::size_t v = 0;
  Dir2 dir{};
  friend bool operator==(const Ray&, const Ray&) = default;
};

struct CurveEdge {
  std::variant<Segment, Ray> shape;
  std::int64_t weight = 1;
  friend bool operator==(const CurveEdge&, const CurveEdge&) = default;
};

struct SubdivisionCell {
  /// Counter-clockwise polygon vertices.
  std::vector<IntVec> polygon;
  /// Every lifted exponent lying on this upper-hull face.
  std::vector<IntVec> points;
  friend bool operator==(const SubdivisionCell&, const SubdivisionCell&) = default;
};

struct DualSubdivision {
  LatticePolytope polygon;
  /// Two-dimensional cells, one per curve vertex and in the same order.
  std::vector<SubdivisionCell> cells;
  friend bool operator==(const DualSubdivision&, const DualSubdivision&) = default;
};

class EmptyCurveError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PlaneTropicalCurve {
 public:
  /// Validates indices, distinct segment endpoints, primitive nonzero ray
  /// directions and positive weights (InputError otherwise). Balancing is
  /// not enforced here; see check_balanced.
  PlaneTropicalCurve(std::vector<Point2> vertices, std::vector<CurveEdge> edges,
                     std::optional<DualSubdivision> dual = std::nullopt);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<CurveEdge>& edges() const { return edges_; }
  const std::optional<DualSubdivision>& dual() const { return dual_; }

  PlaneTropicalCurve translated(const Point2& shift) const;

  /// Structural equality of vertices and edges (the dual is ignored).
  friend bool operator==(const PlaneTropicalCurve& x, const PlaneTropicalCurve& y) {
    return x.vertices_ == y.vertices_ && x.edges_ == y.edges_;
  }

 private:
  std::vector<Point2> vertices_;
  std::vector<CurveEdge> edges_;
  std::optional<DualSubdivision> dual_;
};

/// Regular subdivision of the Newton polygon induced by the coefficients.
/// Requires a 2-variable polynomial with a 2-dimensional Newton polygon.
DualSubdivision dual_subdivision(const TropicalPolynomial& f);

/// Throws EmptyCurveError when fewer than two terms are active.
PlaneTropicalCurve corner_locus(const TropicalPolynomial& f);

bool check_balanced(const PlaneTropicalCurve& c);

/// The standard tropical line with vertex at `at`.
PlaneTropicalCurve standard_line(const Point2& at = {Rational(0), Rational(0)});

struct IntersectionPoint {
  Point2 at;
  std::int64_t multiplicity = 0;
  friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

struct IntersectionReport {
  std::vector<IntersectionPoint> points;
  std::int64_t total = 0;
  /// True when limit positions could not be extrapolated and `points` are
  /// the intersections with the translated second curve.
  bool perturbed = false;
  /// The certified generic translation that was applied to the second curve.
  Point2 translation;
};

/// Intersection points of c1 and c2 when they meet transversally, or nullopt
/// when some intersection is not in the relative interior of edges of both
/// curves (or edges overlap).
std::optional<std::vector<IntersectionPoint>> transverse_intersection(const PlaneTropicalCurve& c1,
                                                                      const PlaneTropicalCurve& c2);

/// Stable intersection via a seeded, certified-generic translation of c2.
/// Throws DomainError if either curve is not balanced.
IntersectionReport stable_intersection(const PlaneTropicalCurve& c1, const PlaneTropicalCurve& c2,
                                       std::uint64_t seed = 0);

/// Intersection number with a generic translate of the standard line.
std::int64_t degree(const PlaneTropicalCurve& c, std::uint64_t seed = 0);

std::int64_t bezout_total(std::int64_t d1, std::int64_t d2);

}  // namespace tropkit
