#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tropkit/metricgraph.hpp"

using namespace tropkit;
using oracle::rat;

namespace {

MetricGraph theta(long a = 1, long b = 2, long c = 3) {
  return MetricGraph({"v1", "v2"}, {{0, 1, rat(a)}, {0, 1, rat(b)}, {0, 1, rat(c)}});
}

// Circle of circumference 2 with antipodal vertices A and B.
MetricGraph circle2() { return MetricGraph({"A", "B"}, {{0, 1, rat(1)}, {0, 1, rat(1)}}); }

MetricGraph loop(const Rational& len) { return MetricGraph({"o"}, {{0, 0, len}}); }

MetricGraph path(long len) { return MetricGraph({"l", "r"}, {{0, 1, rat(len)}}); }

MetricGraph small_tree() {
  return MetricGraph({"a", "b", "c", "d"}, {{0, 1, rat(1)}, {1, 2, rat(2, 3)}, {1, 3, rat(5, 2)}});
}

GraphPoint V(std::size_t v) { return GraphPoint::vertex(v); }

Divisor D(std::initializer_list<std::pair<GraphPoint, long>> entries) {
  Divisor d;
  for (const auto& [p, c] : entries) d.add(p, c);
  return d;
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(MetricGraph({}, {}), InputError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {}), InputError);
  CHECK_THROWS_AS(MetricGraph({"a", "a"}, {{0, 1, rat(1)}}), InputError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {{0, 1, rat(0)}}), InputError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {{0, 1, rat(-1)}}), InputError);
  CHECK_THROWS_AS(MetricGraph({"a"}, {{0, 0, std::nullopt}}), InputError);
  CHECK_THROWS_AS(MetricGraph({"a", "b"}, {{0, 1, std::nullopt}, {0, 1, rat(1)}}), InputError);
  CHECK_NOTHROW(MetricGraph({"a", "b"}, {{0, 1, std::nullopt}}));
  CHECK_THROWS_AS(point_on(path(2), 0, rat(3)), InputError);
  CHECK(point_on(path(2), 0, rat(2)) == V(1));
  CHECK(point_on(path(2), 0, rat(0)) == V(0));
}

TEST_CASE("genus") {
  CHECK(genus(theta()) == 2);
  CHECK(genus(small_tree()) == 0);
  CHECK(genus(loop(rat(1))) == 1);
  CHECK(genus(MetricGraph({"p"}, {})) == 0);
}

TEST_CASE("canonical divisor") {
  CHECK(canonical_divisor(theta()) == D({{V(0), 1}, {V(1), 1}}));
  CHECK(canonical_divisor(loop(rat(4))).empty());
  const auto k = canonical_divisor(path(3));
  CHECK(k == D({{V(0), -1}, {V(1), -1}}));
  CHECK(k.degree() == -2);
  CHECK_THROWS_AS(canonical_divisor(MetricGraph({"a", "b"}, {{0, 1, std::nullopt}})), DomainError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const long g = trial % 4;
    const auto G = oracle::random_graph(rng, 1 + trial % 5, g, 3);
    CHECK(canonical_divisor(G).degree() == 2 * genus(G) - 2);
  }
}

TEST_CASE("divisors of rational functions") {
  const RationalFunction constant(theta(), {rat(5), rat(5)});
  CHECK(divisor_of(constant).empty());

  const RationalFunction phi(circle2(), {rat(0), rat(1)});
  CHECK(divisor_of(phi) == D({{V(0), 2}, {V(1), -2}}));

  // max(0, x) on [-1, 1].
  const RationalFunction hinge(path(2), {rat(0), rat(1)}, {{0, rat(1), rat(0)}});
  const auto d = divisor_of(hinge);
  CHECK(d[GraphPoint::on_edge(0, rat(1))] == 1);
  CHECK(d[V(0)] == 0);
  CHECK(d.degree() == 0);
  CHECK(hinge.value_at(GraphPoint::on_edge(0, rat(3, 2))) == rat(1, 2));

  CHECK_THROWS_AS(RationalFunction(path(2), {rat(0), rat(1, 2)}), InputError);
  CHECK_THROWS_AS(RationalFunction(path(2), {rat(0), rat(0)}, {{0, rat(2), rat(0)}}), InputError);
  CHECK_THROWS_AS(RationalFunction(MetricGraph({"a", "b"}, {{0, 1, std::nullopt}}), {rat(0), rat(0)}), InputError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto G = oracle::random_graph(rng, 1 + trial % 4, trial % 3, 3);
    CHECK(divisor_of(oracle::random_function(G, rng)).degree() == 0);
  }
}

TEST_CASE("reduced divisor examples") {
  const auto g = circle2();
  const auto q = V(0);
  const auto already = D({{V(0), 3}, {GraphPoint::on_edge(0, rat(1, 2)), 0}});
  CHECK(reduced_divisor(g, already, q) == already);
  CHECK(reduced_divisor(g, D({{V(0), 2}, {V(1), -2}}), q).empty());

  const auto t = small_tree();
  for (const auto& x : {GraphPoint::on_edge(2, rat(7, 4)), V(2), GraphPoint::on_edge(1, rat(1, 3))}) {
    CHECK(reduced_divisor(t, Divisor::point(x), V(3)) == Divisor::point(V(3)));
  }
  CHECK_THROWS_AS(reduced_divisor(MetricGraph({"a", "b"}, {{0, 1, std::nullopt}}), Divisor::point(V(0)), V(0)),
                  DomainError);
}

TEST_CASE("reduction agrees with the Laplacian and subset oracles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto G = oracle::random_graph(rng, 1 + trial % 3, trial % 3, 2);
    std::vector<GraphPoint> pts;
    for (std::size_t v = 0; v < G.vertex_count(); ++v) pts.push_back(V(v));
    const ChipFiringModel model(G, pts);
    if (model.size() > 12) continue;
    std::uniform_int_distribution<long> chip(-2, 3);
    std::uniform_int_distribution<std::size_t> node(0, model.size() - 1);
    std::vector<long> chips(model.size());
    for (auto& c : chips) c = chip(rng);
    const std::size_t q = node(rng);
    const auto r = model.reduce(chips, q);
    CHECK(oracle::is_q_reduced_bruteforce(model, r, q));
    CHECK(oracle::laplacian_equivalent(model, chips, r));
    CHECK(model.reduce(r, q) == r);
    // Another member of the class reduces to the same divisor.
    auto fired = chips;
    const std::size_t v = node(rng);
    for (const auto& [w, m] : model.adjacency()[v]) {
      fired[v] -= m;
      fired[w] += m;
    }
    CHECK(model.reduce(fired, q) == r);
  }
}

TEST_CASE("model points round-trip") {
  const auto g = small_tree();
  const std::vector<GraphPoint> pts{GraphPoint::on_edge(1, rat(1, 3)), GraphPoint::on_edge(2, rat(1, 2))};
  const ChipFiringModel model(g, pts, 2);
  CHECK(model.denominator() == 12);
  for (std::size_t n = 0; n < model.size(); ++n) CHECK(model.node_of(model.point_of(n)) == n);
  const auto d = D({{pts[0], 2}, {pts[1], -1}, {V(3), 4}});
  CHECK(model.to_divisor(model.to_vector(d)) == d);
}

TEST_CASE("linear equivalence examples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto G = oracle::random_graph(rng, 1 + trial % 4, trial % 3, 3);
    const auto d = Divisor::point(oracle::random_integer_point(G, rng), 2) - Divisor::point(V(0));
    const auto phi = oracle::random_function(G, rng);
    CHECK(linearly_equivalent(G, d, d + divisor_of(phi)));
  }
  const auto t = small_tree();
  CHECK(linearly_equivalent(t, Divisor::point(V(0)), Divisor::point(GraphPoint::on_edge(2, rat(1, 7)))));
  const auto c = circle2();
  CHECK_FALSE(linearly_equivalent(c, Divisor::point(V(0)), Divisor::point(GraphPoint::on_edge(0, rat(1, 3)))));
  CHECK_FALSE(linearly_equivalent(c, Divisor::point(V(0)), Divisor::point(V(0), 2)));
  CHECK(linearly_equivalent(c, Divisor::point(V(0), 2), Divisor::point(V(1), 2)));
}

TEST_CASE("rank examples") {
  CHECK(rank(theta(), Divisor()) == 0);
  CHECK(rank(theta(), canonical_divisor(theta())) == 1);
  CHECK(rank(loop(rat(3)), Divisor::point(GraphPoint::on_edge(0, rat(1)))) == 0);
  CHECK(rank(loop(rat(3)), Divisor::point(V(0), -1)) == -1);
  CHECK(rank(small_tree(), Divisor::point(V(0), 3)) == 3);
  CHECK(rank(circle2(), D({{V(0), 1}, {V(1), -1}})) == -1);
}

TEST_CASE("rank: serial, parallel, refined and brute force agree") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-1, 2);
  for (int trial = 0; trial < 25; ++trial) {
    const auto G = oracle::random_graph(rng, 1 + trial % 3, 1 + trial % 2, 2);
    Divisor d;
    for (int k = 0; k < 3; ++k) d.add(oracle::random_integer_point(G, rng), coef(rng));
    const long serial = rank(G, d, Exec::serial);
    CHECK(rank(G, d, Exec::parallel) == serial);
    CHECK(oracle::rank_bruteforce(G, d) == serial);
    CHECK(rank(G, d, Exec::serial, 2) == serial);
    const auto phi = oracle::random_function(G, rng, 1);
    CHECK(rank(G, d + divisor_of(phi), Exec::serial) == serial);
  }
}

TEST_CASE("Riemann-Roch") {
  CHECK(riemann_roch_check(theta(), Divisor()));
  CHECK(riemann_roch_check(theta(), canonical_divisor(theta())));
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> coef(-2, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto G = oracle::random_graph(rng, 1 + trial % 3, trial % 4, 2);
    Divisor d;
    for (int k = 0; k < 3; ++k) d.add(oracle::random_integer_point(G, rng), coef(rng));
    if (std::abs(d.degree()) > 6) continue;
    CHECK(riemann_roch_check(G, d));
    if (d.degree() > 2 * genus(G) - 2) CHECK(rank(G, d) == d.degree() - genus(G));
  }
}

TEST_CASE("modifications") {
  const auto c = loop(rat(3));
  const auto m = modify(c, GraphPoint::on_edge(0, rat(1)));
  CHECK(genus(m) == 1);
  CHECK(m.vertex_count() == 3);
  CHECK(m.edge(m.edge_count() - 1).infinite());
  CHECK(contract_leaf(m, m.edge_count() - 1) == c);

  const auto t = theta();
  const auto mv = modify(t, V(1));
  CHECK(genus(mv) == 2);
  CHECK(contract_leaf(mv, mv.edge_count() - 1, false) == t);

  const auto mt = modify(small_tree(), GraphPoint::on_edge(2, rat(1)));
  CHECK(genus(mt) == 0);
  CHECK(contract_leaf(mt, mt.edge_count() - 1) == small_tree());
  CHECK_THROWS_AS(contract_leaf(t, 0), DomainError);

  // Contracting a tree's leaves one at a time ends at a point.
  auto g = small_tree();
  std::vector<GraphEdge> inf_edges = g.edges();
  for (auto& e : inf_edges) e.length.reset();
  MetricGraph star(g.vertex_names(), inf_edges);
  while (star.edge_count() > 0) star = contract_leaf(star, 0, false);
  CHECK(star.vertex_count() == 1);
}

TEST_CASE("tree equivalence") {
  CHECK(trees_equivalent(small_tree(), path(5)));
  CHECK_FALSE(trees_equivalent(small_tree(), loop(rat(1))));
  CHECK(trees_equivalent(MetricGraph({"p"}, {}), MetricGraph({"q"}, {})));
}
