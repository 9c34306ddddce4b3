#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tropkit/planecurve.hpp"

using namespace tropkit;
using oracle::rat;

namespace {

TropicalPolynomial poly(std::initializer_list<std::pair<IntVec, Rational>> terms) {
  std::map<IntVec, Rational> m;
  for (const auto& [e, c] : terms) m[e] = c;
  return TropicalPolynomial(m);
}

const Point2 kOrigin{rat(0), rat(0)};

TropicalPolynomial line_poly() { return poly({{{0, 0}, rat(0)}, {{1, 0}, rat(0)}, {{0, 1}, rat(0)}}); }

TropicalPolynomial square_poly() {
  return poly({{{0, 0}, rat(0)}, {{1, 0}, rat(0)}, {{0, 1}, rat(0)}, {{1, 1}, rat(-1)}});
}

std::vector<CurveEdge> rays(std::initializer_list<std::tuple<std::size_t, Dir2, std::int64_t>> list) {
  std::vector<CurveEdge> out;
  for (const auto& [v, d, w] : list) out.push_back({Ray{v, d}, w});
  return out;
}

// Every curve edge has the weight and direction dual to its subdivision edge.
void check_duality(const PlaneTropicalCurve& c) {
  REQUIRE(c.dual().has_value());
  const auto& cells = c.dual()->cells;
  REQUIRE(cells.size() == c.vertices().size());
  auto polygon_edges = [](const SubdivisionCell& cell) {
    std::vector<std::pair<IntVec, IntVec>> out;
    for (std::size_t i = 0; i < cell.polygon.size(); ++i) {
      out.emplace_back(cell.polygon[i], cell.polygon[(i + 1) % cell.polygon.size()]);
    }
    return out;
  };
  for (const auto& e : c.edges()) {
    if (const auto* s = std::get_if<Segment>(&e.shape)) {
      bool found = false;
      for (const auto& [p, q] : polygon_edges(cells[s->a])) {
        for (const auto& [r, t] : polygon_edges(cells[s->b])) {
          if (p == t && q == r) {
            found = true;
            CHECK(lattice_length(p, q) == e.weight);
            const Point2 diff{Rational(c.vertices()[s->b][0] - c.vertices()[s->a][0]),
                              Rational(c.vertices()[s->b][1] - c.vertices()[s->a][1])};
            const Dir2 d = primitive_direction(diff);
            CHECK(d[0] * (q[0] - p[0]) + d[1] * (q[1] - p[1]) == 0);
          }
        }
      }
      CHECK(found);
    } else {
      const auto& r = std::get<Ray>(e.shape);
      bool found = false;
      for (const auto& [p, q] : polygon_edges(cells[r.v])) {
        if (r.dir[0] * (q[0] - p[0]) + r.dir[1] * (q[1] - p[1]) == 0 &&
            r.dir[0] * (q[1] - p[1]) - r.dir[1] * (q[0] - p[0]) > 0) {
          found = true;
          CHECK(lattice_length(p, q) == e.weight);
        }
      }
      CHECK(found);
    }
  }
}

}  // namespace

TEST_CASE("corner locus of the standard line") {
  const auto c = corner_locus(line_poly());
  CHECK(c.vertices() == std::vector<Point2>{kOrigin});
  CHECK(c.edges() == rays({{0, {-1, 0}, 1}, {0, {0, -1}, 1}, {0, {1, 1}, 1}}));
  CHECK(c == standard_line());
  CHECK(check_balanced(c));
  check_duality(c);
}

TEST_CASE("squaring a polynomial doubles the weights") {
  const auto c = corner_locus(trop_product(line_poly(), line_poly()));
  CHECK(c.vertices() == std::vector<Point2>{kOrigin});
  CHECK(c.edges() == rays({{0, {-1, 0}, 2}, {0, {0, -1}, 2}, {0, {1, 1}, 2}}));
  CHECK(check_balanced(c));
}

TEST_CASE("corner locus with a bounded edge") {
  const auto c = corner_locus(square_poly());
  REQUIRE(c.vertices() == std::vector<Point2>{kOrigin, {rat(1), rat(1)}});
  std::vector<CurveEdge> expected{{Segment{0, 1}, 1}};
  for (auto& e : rays({{0, {-1, 0}, 1}, {0, {0, -1}, 1}, {1, {0, 1}, 1}, {1, {1, 0}, 1}})) expected.push_back(e);
  CHECK(c.edges() == expected);
  check_duality(c);

  // Two-term ties found by sampling lie on the curve, and curve edges are ties.
  const auto f = square_poly();
  for (long i = -20; i <= 20; ++i) {
    for (long j = -20; j <= 20; ++j) {
      const Point2 x{rat(i, 5), rat(j, 5)};
      const std::vector<Rational> xv{x[0], x[1]};
      const auto top = evaluate(f, xv).value();
      int ties = 0;
      for (const auto& t : f.terms()) {
        if (t.coefficient + t.exponent[0] * x[0] + t.exponent[1] * x[1] == top) ++ties;
      }
      const bool on_curve = oracle::weight_at(c, x) > 0 || x == c.vertices()[0] || x == c.vertices()[1];
      CHECK((ties >= 2) == on_curve);
    }
  }
}

TEST_CASE("collinear exponents give full lines") {
  const auto c = corner_locus(poly({{{0, 0}, rat(0)}, {{2, 0}, rat(1)}, {{1, 0}, rat(-3)}}));
  // Only 1 and x^2 are active: the line 2x + 1 = 0 with weight 2.
  REQUIRE(c.vertices() == std::vector<Point2>{{rat(-1, 2), rat(0)}});
  CHECK(c.edges() == rays({{0, {0, -1}, 2}, {0, {0, 1}, 2}}));
  CHECK(check_balanced(c));

  // max(0, s, 2s) with s = x + y breaks only at s = 0.
  const auto flat = corner_locus(poly({{{0, 0}, rat(0)}, {{1, 1}, rat(0)}, {{2, 2}, rat(0)}}));
  CHECK(flat.vertices().size() == 1);
  CHECK(flat.edges() == rays({{0, {-1, 1}, 2}, {0, {1, -1}, 2}}));
  // max(0, s + 1, 2s) breaks at s = -1 and s = 1.
  const auto diag = corner_locus(poly({{{0, 0}, rat(0)}, {{1, 1}, rat(1)}, {{2, 2}, rat(0)}}));
  CHECK(diag.vertices().size() == 2);
  for (const auto& e : diag.edges()) CHECK(e.weight == 1);
  CHECK(check_balanced(diag));
  CHECK_THROWS_AS(dual_subdivision(poly({{{0, 0}, rat(0)}, {{1, 1}, rat(0)}})), DomainError);
}

TEST_CASE("empty corner locus") {
  CHECK_THROWS_AS(corner_locus(poly({{{1, 2}, rat(3)}})), EmptyCurveError);
  CHECK_THROWS_AS(corner_locus(poly({{{1}, rat(3)}, {{2}, rat(0)}})), DomainError);
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(PlaneTropicalCurve({kOrigin}, {{Segment{0, 0}, 1}}), InputError);
  CHECK_THROWS_AS(PlaneTropicalCurve({kOrigin}, {{Ray{0, {2, 2}}, 1}}), InputError);
  CHECK_THROWS_AS(PlaneTropicalCurve({kOrigin}, {{Ray{0, {1, 0}}, 0}}), InputError);
  CHECK_THROWS_AS(PlaneTropicalCurve({kOrigin}, {{Ray{3, {1, 0}}, 1}}), InputError);
}

TEST_CASE("balancing") {
  const PlaneTropicalCurve bad({kOrigin}, rays({{0, {1, 0}, 1}, {0, {0, 1}, 1}, {0, {-1, 0}, 1}}));
  CHECK_FALSE(check_balanced(bad));
  const PlaneTropicalCurve doubled({kOrigin}, rays({{0, {-1, 0}, 2}, {0, {0, -1}, 2}, {0, {1, 1}, 2}}));
  CHECK(check_balanced(doubled));
  CHECK_THROWS_AS(stable_intersection(bad, standard_line()), DomainError);
}

TEST_CASE("degree") {
  CHECK(degree(standard_line()) == 1);
  CHECK(degree(corner_locus(trop_product(line_poly(), line_poly()))) == 2);
  CHECK(degree(corner_locus(square_poly())) == 2);
  // The probe translate does not matter.
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(degree(corner_locus(square_poly()), seed) == 2);
}

TEST_CASE("stable intersection examples") {
  SUBCASE("lines with distinct vertices") {
    const auto r = stable_intersection(standard_line(), standard_line({rat(1), rat(3)}));
    CHECK(r.total == 1);
    CHECK_FALSE(r.perturbed);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].at == Point2{rat(1), rat(1)});
    CHECK(r.points[0].multiplicity == 1);
  }
  SUBCASE("line and the square curve") {
    const auto r = stable_intersection(standard_line({rat(1, 3), rat(-5, 7)}), corner_locus(square_poly()));
    CHECK(r.total == 2);
    CHECK(r.total == oracle::mixed_area({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  }
  SUBCASE("line with itself") {
    const auto r = stable_intersection(standard_line(), standard_line());
    CHECK(r.total == 1);
    CHECK_FALSE(r.perturbed);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].at == kOrigin);
  }
  SUBCASE("overlapping rays are not transverse") {
    CHECK_FALSE(transverse_intersection(standard_line(), standard_line({rat(1), rat(0)})).has_value());
    CHECK_FALSE(transverse_intersection(standard_line(), standard_line()).has_value());
    CHECK(stable_intersection(standard_line(), standard_line({rat(1), rat(0)})).total == 1);
  }
}

TEST_CASE("bezout oracle") {
  CHECK(bezout_total(1, 1) == 1);
  CHECK(bezout_total(1, 2) == 2);
  CHECK(bezout_total(3, 3) == 9);
  auto tri = [](long d) { return std::vector<IntVec>{{0, 0}, {d, 0}, {0, d}}; };
  CHECK(oracle::mixed_area(tri(1), tri(2)) == 2);
  CHECK(oracle::mixed_area(tri(3), tri(3)) == 9);
}

TEST_CASE("random curves are balanced and dual to their subdivision") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 5;
    const auto f = oracle::random_triangle_polynomial(d, rng);
    const auto c = corner_locus(f);
    CHECK(check_balanced(c));
    check_duality(c);
    // Subdivision cells tile the Newton polygon: their areas add up.
    long area = 0;
    for (const auto& cell : c.dual()->cells) area += oracle::twice_area(cell.polygon);
    CHECK(area == d * d);
    if (d <= 3) CHECK(degree(c) == d);
  }
}

TEST_CASE("degree of a translated Newton triangle") {
  std::mt19937_64 rng(5);
  for (int d = 1; d <= 4; ++d) {
    const auto base = oracle::random_triangle_polynomial(d, rng);
    std::map<IntVec, Rational> shifted;
    for (const auto& t : base.terms()) shifted[{t.exponent[0] + 2, t.exponent[1] - 1}] = t.coefficient;
    CHECK(degree(corner_locus(TropicalPolynomial(shifted))) == d);
  }
}

TEST_CASE("stable intersection totals equal the mixed area") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const int d1 = 1 + trial % 3;
    const int d2 = 1 + (trial / 3) % 3;
    const auto c1 = corner_locus(oracle::random_triangle_polynomial(d1, rng));
    const auto c2 = corner_locus(oracle::random_triangle_polynomial(d2, rng));
    const auto r1 = stable_intersection(c1, c2, 1);
    const auto r2 = stable_intersection(c1, c2, 2);
    CHECK(r1.total == bezout_total(d1, d2));
    CHECK(r2.total == r1.total);
    long sum = 0;
    for (const auto& p : r1.points) sum += p.multiplicity;
    CHECK(sum == r1.total);
  }
}

TEST_CASE("weights add under multiplication") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    const auto f = oracle::random_triangle_polynomial(1 + trial % 3, rng);
    const auto g = oracle::random_triangle_polynomial(1 + (trial + 1) % 3, rng);
    const auto cf = corner_locus(f);
    const auto cg = corner_locus(g);
    const auto cfg = corner_locus(trop_product(f, g));
    std::set<Point2> vertices;
    for (const auto* c : {&cf, &cg, &cfg}) vertices.insert(c->vertices().begin(), c->vertices().end());
    for (const auto* c : {&cf, &cg, &cfg}) {
      for (const auto& x : oracle::edge_samples(*c)) {
        if (vertices.contains(x)) continue;
        CHECK(oracle::weight_at(cfg, x) == oracle::weight_at(cf, x) + oracle::weight_at(cg, x));
      }
    }
    // Squaring keeps the support and doubles every weight.
    const auto cff = corner_locus(trop_product(f, f));
    REQUIRE(cff.vertices() == cf.vertices());
    REQUIRE(cff.edges().size() == cf.edges().size());
    for (std::size_t i = 0; i < cf.edges().size(); ++i) {
      CHECK(cff.edges()[i].shape == cf.edges()[i].shape);
      CHECK(cff.edges()[i].weight == 2 * cf.edges()[i].weight);
    }
  }
}
