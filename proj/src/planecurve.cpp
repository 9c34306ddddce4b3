#include "tropkit/planecurve.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>

namespace tropkit {

namespace {

Rational cross(const Point2& a, const Point2& b) { return a[0] * b[1] - a[1] * b[0]; }

Point2 sub(const Point2& a, const Point2& b) { return {Rational(a[0] - b[0]), Rational(a[1] - b[1])}; }

Point2 add(const Point2& a, const Point2& b) { return {Rational(a[0] + b[0]), Rational(a[1] + b[1])}; }

Point2 scale(const Point2& a, const Rational& s) { return {Rational(a[0] * s), Rational(a[1] * s)}; }

Point2 to_point(const Dir2& d) {
  return {Rational(static_cast<long>(d[0])), Rational(static_cast<long>(d[1]))};
}

std::int64_t abs_det(const Dir2& u, const Dir2& v) { return std::llabs(u[0] * v[1] - u[1] * v[0]); }

Rational term_value(const Monomial& m, const Point2& x) {
  return m.coefficient + Rational(static_cast<long>(m.exponent[0])) * x[0] +
         Rational(static_cast<long>(m.exponent[1])) * x[1];
}

bool collinear(const IntVec& p, const IntVec& q, const IntVec& r) {
  return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]) == 0;
}

// Outward normal of the counter-clockwise polygon edge p -> q.
Dir2 outward_normal(const IntVec& p, const IntVec& q) {
  const IntVec n{q[1] - p[1], -(q[0] - p[0])};
  const auto prim = primitive(n);
  return {prim[0], prim[1]};
}

// Canonical edge order: by vertex, segments before rays, then direction.
void sort_edges(std::vector<CurveEdge>& edges) {
  std::sort(edges.begin(), edges.end(), [](const CurveEdge& x, const CurveEdge& y) {
    const auto key = [](const CurveEdge& e) {
      if (const auto* s = std::get_if<Segment>(&e.shape)) {
        return std::tuple(s->a, 0, static_cast<std::int64_t>(s->b), std::int64_t{0});
      }
      const auto& r = std::get<Ray>(e.shape);
      return std::tuple(r.v, 1, r.dir[0], r.dir[1]);
    };
    return key(x) < key(y);
  });
}

// Lines of a polynomial whose active exponents are collinear: one full line
// per edge of the 1-dimensional upper hull, each stored as a 2-valent vertex
// with two opposite rays.
PlaneTropicalCurve collinear_corner_locus(std::vector<Monomial> active) {
  std::sort(active.begin(), active.end(),
            [](const Monomial& a, const Monomial& b) { return a.exponent < b.exponent; });
  // Keep only vertices of the upper hull (drop lifted points in the interior
  // of a hull segment).
  std::vector<Monomial> hull;
  auto slope_between = [](const Monomial& a, const Monomial& b) {
    const std::int64_t len = lattice_length(a.exponent, b.exponent);
    return Rational((b.coefficient - a.coefficient) / Rational(static_cast<long>(len)));
  };
  for (auto& m : active) {
    while (hull.size() >= 2 &&
           slope_between(hull[hull.size() - 2], hull.back()) == slope_between(hull.back(), m)) {
      hull.pop_back();
    }
    hull.push_back(std::move(m));
  }
  std::vector<Point2> vertices;
  std::vector<CurveEdge> edges;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& p = hull[i];
    const auto& q = hull[i + 1];
    const std::int64_t dx = p.exponent[0] - q.exponent[0];
    const std::int64_t dy = p.exponent[1] - q.exponent[1];
    const Rational rhs = q.coefficient - p.coefficient;
    Point2 at;
    if (dx != 0) {
      at = {Rational(rhs / Rational(static_cast<long>(dx))), Rational(0)};
    } else {
      at = {Rational(0), Rational(rhs / Rational(static_cast<long>(dy)))};
    }
    const auto dir = primitive(IntVec{-dy, dx});
    const std::int64_t w = lattice_length(p.exponent, q.exponent);
    const std::size_t v = vertices.size();
    vertices.push_back(at);
    edges.push_back({Ray{v, {dir[0], dir[1]}}, w});
    edges.push_back({Ray{v, {-dir[0], -dir[1]}}, w});
  }
  sort_edges(edges);
  return PlaneTropicalCurve(std::move(vertices), std::move(edges));
}

struct VertexCell {
  Point2 at;
  SubdivisionCell cell;
};

// Curve vertices with their dual cells, sorted by position.
std::vector<VertexCell> vertex_cells(const std::vector<Monomial>& active) {
  std::map<Point2, std::vector<std::size_t>> found;
  const std::size_t m = active.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const auto& p = active[i];
        const auto& q = active[j];
        const auto& r = active[k];
        if (collinear(p.exponent, q.exponent, r.exponent)) continue;
        // (p - q)·x = a_q - a_p and (p - r)·x = a_r - a_p.
        const Rational a11(static_cast<long>(p.exponent[0] - q.exponent[0]));
        const Rational a12(static_cast<long>(p.exponent[1] - q.exponent[1]));
        const Rational a21(static_cast<long>(p.exponent[0] - r.exponent[0]));
        const Rational a22(static_cast<long>(p.exponent[1] - r.exponent[1]));
        const Rational b1 = q.coefficient - p.coefficient;
        const Rational b2 = r.coefficient - p.coefficient;
        const Rational det = a11 * a22 - a12 * a21;
        Point2 x{Rational((b1 * a22 - a12 * b2) / det), Rational((a11 * b2 - b1 * a21) / det)};
        if (found.contains(x)) continue;
        const Rational top = term_value(p, x);
        bool is_max = true;
        std::vector<std::size_t> tied;
        for (std::size_t t = 0; t < m && is_max; ++t) {
          const Rational v = term_value(active[t], x);
          if (v > top) is_max = false;
          if (v == top) tied.push_back(t);
        }
        if (is_max) found.emplace(std::move(x), std::move(tied));
      }
    }
  }
  std::vector<VertexCell> out;
  out.reserve(found.size());
  for (auto& [x, tied] : found) {
    SubdivisionCell cell;
    for (auto t : tied) cell.points.push_back(active[t].exponent);
    cell.polygon = convex_hull_2d(cell.points);
    out.push_back({x, std::move(cell)});
  }
  return out;
}

std::vector<Monomial> active_plane_terms(const TropicalPolynomial& f) {
  if (f.dim() != 2) {
    throw DomainError("corner loci are only implemented for 2 variables, got " +
                      std::to_string(f.dim()));
  }
  return active_terms(f);
}

bool all_collinear(const std::vector<Monomial>& terms) {
  for (std::size_t k = 2; k < terms.size(); ++k) {
    if (!collinear(terms[0].exponent, terms[1].exponent, terms[k].exponent)) return false;
  }
  return true;
}

struct EdgeSpan {
  Point2 base;
  Point2 dir;  // segment: b - a; ray: direction
  bool bounded = false;
  Dir2 primitive{};
  std::int64_t weight = 1;
};

EdgeSpan span_of(const PlaneTropicalCurve& c, const CurveEdge& e) {
  EdgeSpan s;
  s.weight = e.weight;
  if (const auto* seg = std::get_if<Segment>(&e.shape)) {
    s.base = c.vertices()[seg->a];
    s.dir = sub(c.vertices()[seg->b], s.base);
    s.bounded = true;
    s.primitive = primitive_direction(s.dir);
  } else {
    const auto& ray = std::get<Ray>(e.shape);
    s.base = c.vertices()[ray.v];
    s.dir = to_point(ray.dir);
    s.primitive = ray.dir;
  }
  return s;
}

// Parameter range check: t in [0, 1] for segments, t >= 0 for rays.
bool within(const Rational& t, bool bounded) { return sgn(t) >= 0 && (!bounded || t <= 1); }
bool at_end(const Rational& t, bool bounded) { return sgn(t) == 0 || (bounded && t == 1); }

using PairKey = std::pair<std::size_t, std::size_t>;

// Transverse intersection points keyed by (edge of c1, edge of c2).
std::optional<std::map<PairKey, IntersectionPoint>> transverse_pairs(const PlaneTropicalCurve& c1,
                                                                     const PlaneTropicalCurve& c2) {
  std::vector<EdgeSpan> s1;
  std::vector<EdgeSpan> s2;
  for (const auto& e : c1.edges()) s1.push_back(span_of(c1, e));
  for (const auto& e : c2.edges()) s2.push_back(span_of(c2, e));
  std::map<PairKey, IntersectionPoint> out;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    for (std::size_t j = 0; j < s2.size(); ++j) {
      const auto& e = s1[i];
      const auto& f = s2[j];
      const Point2 delta = sub(f.base, e.base);
      const Rational det = cross(e.dir, f.dir);
      if (sgn(det) == 0) {
        if (sgn(cross(delta, e.dir)) != 0) continue;  // parallel, disjoint lines
        // Collinear: compare parameter ranges along e.
        const Rational ee = e.dir[0] * e.dir[0] + e.dir[1] * e.dir[1];
        const Rational t0 = (delta[0] * e.dir[0] + delta[1] * e.dir[1]) / ee;
        const Rational step = (f.dir[0] * e.dir[0] + f.dir[1] * e.dir[1]) / ee;
        // f covers t0 + u*step for u in [0,1] (segment) or u >= 0 (ray).
        Rational lo = t0;
        Rational hi = t0;
        bool lo_inf = false;
        bool hi_inf = false;
        if (f.bounded) {
          (sgn(step) > 0 ? hi : lo) = t0 + step;
        } else {
          (sgn(step) > 0 ? hi_inf : lo_inf) = true;
        }
        const bool below = !hi_inf && sgn(hi) < 0;
        const bool above = e.bounded && !lo_inf && lo > 1;
        if (!below && !above) return std::nullopt;
        continue;
      }
      const Rational s = cross(delta, f.dir) / det;
      const Rational t = cross(delta, e.dir) / det;
      if (!within(s, e.bounded) || !within(t, f.bounded)) continue;
      if (at_end(s, e.bounded) || at_end(t, f.bounded)) return std::nullopt;
      out.emplace(PairKey{i, j},
                  IntersectionPoint{add(e.base, scale(e.dir, s)),
                                    e.weight * f.weight * abs_det(e.primitive, f.primitive)});
    }
  }
  return out;
}

std::vector<IntersectionPoint> merge_points(std::vector<IntersectionPoint> pts) {
  std::map<Point2, std::int64_t> acc;
  for (auto& p : pts) acc[p.at] += p.multiplicity;
  std::vector<IntersectionPoint> out;
  for (auto& [at, m] : acc) out.push_back({at, m});
  return out;
}

}  // namespace

Dir2 primitive_direction(const Point2& v) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), v[0].get_den_mpz_t(), v[1].get_den_mpz_t());
  BigInt x = v[0].get_num() * (l / v[0].get_den());
  BigInt y = v[1].get_num() * (l / v[1].get_den());
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g == 0) throw DomainError("zero vector has no primitive direction");
  x /= g;
  y /= g;
  return {to_int64(x), to_int64(y)};
}

PlaneTropicalCurve::PlaneTropicalCurve(std::vector<Point2> vertices, std::vector<CurveEdge> edges,
                                       std::optional<DualSubdivision> dual)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), dual_(std::move(dual)) {
  const auto check_index = [&](std::size_t i) {
    if (i >= vertices_.size()) throw InputError("edge refers to missing vertex " + std::to_string(i));
  };
  for (const auto& e : edges_) {
    if (e.weight < 1) throw InputError("edge weight must be positive");
    if (const auto* seg = std::get_if<Segment>(&e.shape)) {
      check_index(seg->a);
      check_index(seg->b);
      if (vertices_[seg->a] == vertices_[seg->b]) throw InputError("segment endpoints coincide");
    } else {
      const auto& ray = std::get<Ray>(e.shape);
      check_index(ray.v);
      if (std::gcd(ray.dir[0], ray.dir[1]) != 1) {
        throw InputError("ray direction must be a primitive integer vector");
      }
    }
  }
}

PlaneTropicalCurve PlaneTropicalCurve::translated(const Point2& shift) const {
  std::vector<Point2> moved;
  moved.reserve(vertices_.size());
  for (const auto& v : vertices_) moved.push_back(add(v, shift));
  return PlaneTropicalCurve(std::move(moved), edges_);
}

DualSubdivision dual_subdivision(const TropicalPolynomial& f) {
  const auto active = active_plane_terms(f);
  if (active.size() < 3 || all_collinear(active)) {
    throw DomainError("Newton polygon is not two-dimensional");
  }
  DualSubdivision sub;
  sub.polygon = newton_polytope(f);
  for (auto& vc : vertex_cells(active)) sub.cells.push_back(std::move(vc.cell));
  return sub;
}

PlaneTropicalCurve corner_locus(const TropicalPolynomial& f) {
  const auto active = active_plane_terms(f);
  if (active.size() < 2) throw EmptyCurveError("corner locus is empty: fewer than two active terms");
  if (all_collinear(active)) return collinear_corner_locus(active);

  auto cells = vertex_cells(active);
  std::vector<Point2> vertices;
  DualSubdivision dual;
  dual.polygon = newton_polytope(f);
  // Each subdivision edge (sorted endpoint pair) with the cells it bounds.
  std::map<std::pair<IntVec, IntVec>, std::vector<std::pair<std::size_t, Dir2>>> dual_edges;
  for (std::size_t v = 0; v < cells.size(); ++v) {
    const auto& poly = cells[v].cell.polygon;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
      dual_edges[std::move(key)].emplace_back(v, outward_normal(p, q));
    }
    vertices.push_back(cells[v].at);
    dual.cells.push_back(std::move(cells[v].cell));
  }
  std::vector<CurveEdge> edges;
  for (const auto& [key, sides] : dual_edges) {
    const std::int64_t w = lattice_length(key.first, key.second);
    if (sides.size() == 1) {
      edges.push_back({Ray{sides[0].first, sides[0].second}, w});
    } else if (sides.size() == 2) {
      auto [a, b] = std::minmax(sides[0].first, sides[1].first);
      edges.push_back({Segment{a, b}, w});
    } else {
      throw std::logic_error("subdivision edge shared by more than two cells");
    }
  }
  sort_edges(edges);
  return PlaneTropicalCurve(std::move(vertices), std::move(edges), std::move(dual));
}

bool check_balanced(const PlaneTropicalCurve& c) {
  std::vector<std::array<std::int64_t, 2>> sum(c.vertices().size(), {0, 0});
  for (const auto& e : c.edges()) {
    if (const auto* seg = std::get_if<Segment>(&e.shape)) {
      const Dir2 d = primitive_direction(sub(c.vertices()[seg->b], c.vertices()[seg->a]));
      sum[seg->a][0] += e.weight * d[0];
      sum[seg->a][1] += e.weight * d[1];
      sum[seg->b][0] -= e.weight * d[0];
      sum[seg->b][1] -= e.weight * d[1];
    } else {
      const auto& ray = std::get<Ray>(e.shape);
      sum[ray.v][0] += e.weight * ray.dir[0];
      sum[ray.v][1] += e.weight * ray.dir[1];
    }
  }
  return std::all_of(sum.begin(), sum.end(), [](const auto& s) { return s[0] == 0 && s[1] == 0; });
}

PlaneTropicalCurve standard_line(const Point2& at) {
  return PlaneTropicalCurve({at}, {{Ray{0, {-1, 0}}, 1}, {Ray{0, {0, -1}}, 1}, {Ray{0, {1, 1}}, 1}});
}

std::optional<std::vector<IntersectionPoint>> transverse_intersection(const PlaneTropicalCurve& c1,
                                                                      const PlaneTropicalCurve& c2) {
  auto pairs = transverse_pairs(c1, c2);
  if (!pairs) return std::nullopt;
  std::vector<IntersectionPoint> pts;
  for (auto& [key, p] : *pairs) pts.push_back(std::move(p));
  return merge_points(std::move(pts));
}

IntersectionReport stable_intersection(const PlaneTropicalCurve& c1, const PlaneTropicalCurve& c2,
                                       std::uint64_t seed) {
  if (!check_balanced(c1) || !check_balanced(c2)) {
    throw DomainError("stable intersection requires balanced curves");
  }
  constexpr long kGrid = 9973;
  constexpr int kMaxDraws = 64;
  constexpr int kMaxShrinks = 8;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-kGrid, kGrid);

  std::optional<IntersectionReport> fallback;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    Point2 tau{Rational(num(rng), 16 * kGrid), Rational(num(rng), 16 * kGrid)};
    tau[0].canonicalize();
    tau[1].canonicalize();
    if (sgn(tau[0]) == 0 && sgn(tau[1]) == 0) continue;
    for (int shrink = 0; shrink < kMaxShrinks; ++shrink) {
      auto p1 = transverse_pairs(c1, c2.translated(tau));
      auto p2 = transverse_pairs(c1, c2.translated(scale(tau, Rational(1, 2))));
      auto p4 = transverse_pairs(c1, c2.translated(scale(tau, Rational(1, 4))));
      if (!p1 || !p2 || !p4) break;  // not generic: redraw

      IntersectionReport report;
      report.translation = tau;
      for (const auto& [key, p] : *p1) report.total += p.multiplicity;

      const bool same_pairs = p1->size() == p2->size() && p1->size() == p4->size() &&
                              std::equal(p1->begin(), p1->end(), p2->begin(),
                                         [](const auto& x, const auto& y) { return x.first == y.first; }) &&
                              std::equal(p1->begin(), p1->end(), p4->begin(),
                                         [](const auto& x, const auto& y) { return x.first == y.first; });
      if (same_pairs) {
        std::vector<IntersectionPoint> limits;
        bool affine = true;
        for (const auto& [key, p] : *p1) {
          const Point2& at1 = p.at;
          const Point2& at2 = p2->at(key).at;
          const Point2& at4 = p4->at(key).at;
          if (sub(at1, at2) != scale(sub(at2, at4), Rational(2))) {
            affine = false;
            break;
          }
          limits.push_back({sub(scale(at2, Rational(2)), at1), p.multiplicity});
        }
        if (affine) {
          report.points = merge_points(std::move(limits));
          return report;
        }
      }
      if (!fallback) {
        std::vector<IntersectionPoint> pts;
        for (const auto& [key, p] : *p1) pts.push_back(p);
        report.points = merge_points(std::move(pts));
        report.perturbed = true;
        fallback = std::move(report);
      }
      tau = scale(tau, Rational(1, 8));
    }
  }
  if (fallback) return *fallback;
  throw DomainError("could not find a generic translation");
}

std::int64_t degree(const PlaneTropicalCurve& c, std::uint64_t seed) {
  return stable_intersection(c, standard_line(), seed).total;
}

std::int64_t bezout_total(std::int64_t d1, std::int64_t d2) {
  if (d1 < 1 || d2 < 1) throw DomainError("degrees must be positive");
  return d1 * d2;
}

}  // namespace tropkit
