// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every expected value is recomputed here by an independent oracle.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "tropkit/enumeration.hpp"
#include "tropkit/semiring.hpp"

using namespace tropkit;
using oracle::rat;

namespace {

// Failure details collected while a criterion runs.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    ++total;
    if (!ok) ++failed;
  }
  long total = 0;
  long failed = 0;
};

bool run_criterion(const std::string& name, double limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    check.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  const bool ok = check.failed == 0;
  std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s, " << check.total << " checks)\n";
  for (const auto& f : check.failures) std::cout << "    " << f << "\n";
  return ok;
}

TropicalScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<int> inf(0, 19);
  if (inf(rng) == 0) return TropicalScalar::neg_infinity();
  return TropicalScalar(rat(num(rng), den(rng)));
}

void semiring_axioms(Check& c) {
  std::mt19937_64 rng(1);
  const auto zero = TropicalScalar::neg_infinity();
  const auto one = TropicalScalar::unit();
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_scalar(rng), b = random_scalar(rng), d = random_scalar(rng);
    c.expect(trop_add(a, b) == trop_add(b, a), "additive commutativity");
    c.expect(trop_mul(a, b) == trop_mul(b, a), "multiplicative commutativity");
    c.expect(trop_add(trop_add(a, b), d) == trop_add(a, trop_add(b, d)), "additive associativity");
    c.expect(trop_mul(trop_mul(a, b), d) == trop_mul(a, trop_mul(b, d)), "multiplicative associativity");
    c.expect(trop_mul(a, trop_add(b, d)) == trop_add(trop_mul(a, b), trop_mul(a, d)), "distributivity");
    c.expect(trop_add(a, a) == a, "idempotency");
    c.expect(trop_add(a, zero) == a && trop_mul(a, one) == a, "identities");
    c.expect(trop_mul(a, zero) == zero, "absorbing zero");
    // Oracle: max and + on extended rationals.
    const auto expect_max = a.is_neg_infinity() ? b
                            : b.is_neg_infinity() ? a
                                                  : TropicalScalar(std::max(a.value(), b.value()));
    c.expect(trop_add(a, b) == expect_max, "addition is max");
  }
}

void balancing(Check& c) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const int d = 1 + i % 5;
    const auto curve = corner_locus(oracle::random_triangle_polynomial(d, rng));
    c.expect(check_balanced(curve), "unbalanced curve, degree " + std::to_string(d));
    const auto& cells = curve.dual()->cells;
    c.expect(cells.size() == curve.vertices().size(), "cell count differs from vertex count");
    long area = 0;
    for (const auto& cell : cells) area += oracle::twice_area(cell.polygon);
    c.expect(area == d * d, "cells do not tile the Newton polygon");
  }
}

void bezout(Check& c) {
  std::mt19937_64 rng(3);
  auto triangle = [](long d) { return std::vector<IntVec>{{0, 0}, {d, 0}, {0, d}}; };
  for (int i = 0; i < 50; ++i) {
    const int d1 = 1 + i % 3, d2 = 1 + (i / 3) % 3;
    const auto c1 = corner_locus(oracle::random_triangle_polynomial(d1, rng));
    const auto c2 = corner_locus(oracle::random_triangle_polynomial(d2, rng));
    const auto r1 = stable_intersection(c1, c2, 2 * i);
    const auto r2 = stable_intersection(c1, c2, 2 * i + 1);
    const long expected = oracle::mixed_area(triangle(d1), triangle(d2));
    c.expect(expected == d1 * d2, "mixed area oracle");
    c.expect(r1.total == expected, "total " + std::to_string(r1.total) + " != " + std::to_string(expected));
    c.expect(r2.total == r1.total, "totals differ across translates");
  }
}

void weight_doubling(Check& c) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto f = oracle::random_triangle_polynomial(1 + i % 4, rng);
    const auto cf = corner_locus(f);
    const auto cff = corner_locus(trop_product(f, f));
    c.expect(cff.vertices() == cf.vertices(), "vertices differ");
    c.expect(cff.edges().size() == cf.edges().size(), "edge counts differ");
    for (std::size_t k = 0; k < std::min(cf.edges().size(), cff.edges().size()); ++k) {
      c.expect(cff.edges()[k].shape == cf.edges()[k].shape, "edge support differs");
      c.expect(cff.edges()[k].weight == 2 * cf.edges()[k].weight, "weight not doubled");
    }
    // Pointwise: weight of f*f at samples on the curve is twice that of f.
    for (const auto& x : oracle::edge_samples(cf)) {
      c.expect(oracle::weight_at(cff, x) == 2 * oracle::weight_at(cf, x), "sampled weight not doubled");
    }
  }
}

Divisor random_divisor(const MetricGraph& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> half(0, 3);
  for (;;) {
    Divisor d;
    const int n = terms(rng);
    for (int k = 0; k < n; ++k) {
      GraphPoint p = oracle::random_integer_point(g, rng);
      // Occasionally a half-integer point, so the model is refined.
      if (half(rng) == 0 && g.edge_count() > 0) {
        std::uniform_int_distribution<std::size_t> e(0, g.edge_count() - 1);
        const std::size_t edge = e(rng);
        p = point_on(g, edge, *g.edge(edge).length / 2);
      }
      d.add(p, coef(rng));
    }
    if (std::abs(d.degree()) <= 6) return d;
  }
}

void riemann_roch(Check& c) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const long g = i % 4;
    const auto graph = oracle::random_graph(rng, 1 + i % 4, g, 3);
    c.expect(genus(graph) == g, "random graph genus");
    c.expect(canonical_divisor(graph).degree() == 2 * g - 2, "deg K != 2g - 2");
    for (int k = 0; k < 30; ++k) {
      const auto d = random_divisor(graph, rng);
      c.expect(riemann_roch_check(graph, d), "Riemann-Roch fails on graph " + std::to_string(i));
    }
  }
}

void abel_jacobi_criterion(Check& c) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto graph = oracle::random_graph(rng, 1 + i % 4, i % 4, 3);
    const auto q = period_matrix(graph);
    const JacobianPoint zero{std::vector<Rational>(q.size(), rat(0))};
    const auto phi = oracle::random_function(graph, rng);
    c.expect(jac_equal(q, abel_jacobi(graph, divisor_of(phi)), zero), "principal divisor maps off the lattice");
  }
  int pairs = 0;
  while (pairs < 50) {
    const auto graph = oracle::random_graph(rng, 1 + pairs % 4, 1 + pairs % 3, 3);
    const auto q = period_matrix(graph);
    const JacobianPoint zero{std::vector<Rational>(q.size(), rat(0))};
    const auto x = oracle::random_integer_point(graph, rng);
    const auto y = oracle::random_integer_point(graph, rng);
    const bool equivalent = linearly_equivalent(graph, Divisor::point(x), Divisor::point(y));
    const bool trivial = jac_equal(q, abel_jacobi(graph, Divisor::point(x) - Divisor::point(y)), zero);
    c.expect(trivial == equivalent, "jac_equal disagrees with linear equivalence");
    if (!equivalent) ++pairs;
  }
}

std::vector<BigInt> rational_counts(int max_d) {
  const int n = 3 * max_d;
  std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    binom[i][0] = 1;
    for (int j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j];
  }
  std::vector<BigInt> N(max_d + 1, 0);
  N[1] = 1;
  for (int d = 2; d <= max_d; ++d) {
    for (int a = 1; a < d; ++a) {
      const int b = d - a;
      N[d] += N[a] * N[b] * a * a * b * (b * binom[3 * d - 4][3 * a - 2] - a * binom[3 * d - 4][3 * a - 1]);
    }
  }
  return N;
}

void enumerative(Check& c) {
  const auto N = rational_counts(4);
  for (int d = 1; d <= 4; ++d) {
    c.expect(count_curves(d, 0) == N[d], "count_curves(" + std::to_string(d) + ", 0)");
    c.expect(kontsevich_N(d) == N[d], "kontsevich_N(" + std::to_string(d) + ")");
  }
  c.expect(N[3] == 12 && N[4] == 620, "recursion oracle values");
  const long d = 4;
  const BigInt one_node = 3 * (d - 1) * (d - 1);
  const BigInt two_nodes = 3 * (d - 1) * (d - 2) * (3 * d * d - 3 * d - 11) / 2;
  c.expect(one_node == 27 && two_nodes == 225, "node polynomial values");
  c.expect(count_curves(4, 2) == one_node, "count_curves(4, 2)");
  c.expect(count_curves(4, 1) == two_nodes, "count_curves(4, 1)");
  c.expect(count_curves(3, 1) == 1, "count_curves(3, 1)");
}

// Every CLI command over the data corpus, outputs written under `dir`.
std::vector<std::string> corpus_commands(const std::string& dir) {
  const auto d = [](const std::string& f) { return cli::data(f); };
  return {
      "eval " + d("cubic.json") + " 1/2,-3",
      "curve " + d("line.json") + " --svg " + dir + "/line.svg",
      "curve " + d("cubic.json") + " --svg " + dir + "/cubic.svg --bbox -10,-10,10,10",
      "curve " + d("square.json"),
      "intersect " + d("line.json") + " " + d("square.json"),
      "intersect " + d("cubic.json") + " " + d("cubic.json") + " --seed 4",
      "intersect " + d("cubic.json") + " " + d("square.json") + " --seed 11",
      "graph genus " + d("theta.json"),
      "graph canonical " + d("theta.json"),
      "graph divisor-of " + d("circle.json") + " " + d("circle_phi.json"),
      "graph rank " + d("theta.json") + " " + d("K.json"),
      "graph rr-check " + d("theta.json") + " " + d("theta_divisor.json"),
      "graph reduce " + d("theta.json") + " " + d("theta_divisor.json") + " --q v2",
      "jacobian period " + d("theta.json"),
      "jacobian abel-jacobi " + d("theta.json") + " " + d("theta_divisor.json"),
      "count --degree 4 --genus 0 --list-diagrams",
      "count --degree 5 --genus 2",
      "moduli cross-ratio " + d("tree6.json"),
  };
}

void determinism(Check& c) {
  namespace fs = std::filesystem;
  std::vector<std::string> runs;
  for (const std::string dir : {"acceptance_run1", "acceptance_run2"}) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::string all;
    for (const auto& cmd : corpus_commands(dir)) {
      const auto r = cli::run(cmd);
      c.expect(r.code == 0, "command failed: " + cmd);
      all += r.out;
    }
    for (const std::string svg : {"line.svg", "cubic.svg"}) {
      std::ifstream in(dir + "/" + svg, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      c.expect(!ss.str().empty(), "missing " + svg);
      all += ss.str();
    }
    runs.push_back(all);
  }
  c.expect(runs[0] == runs[1], "outputs differ between runs");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run_criterion("semiring axioms on 10^4 random triples", 1, semiring_axioms);
  ok &= run_criterion("balancing and duality of 100 random curves", 10, balancing);
  ok &= run_criterion("tropical Bezout on 50 random pairs", 30, bezout);
  ok &= run_criterion("weights double under squaring for 20 random polynomials", 0, weight_doubling);
  ok &= run_criterion("Riemann-Roch on 20 random graphs x 30 divisors", 120, riemann_roch);
  ok &= run_criterion("Abel kernel and injectivity", 0, abel_jacobi_criterion);
  ok &= run_criterion("enumerative counts match the recursion and node polynomials", 60, enumerative);
  ok &= run_criterion("CLI output is byte-identical across runs", 0, determinism);
  return ok ? 0 : 1;
}
