#include "tropkit/jacobian.hpp"

#include <deque>
#include <optional>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

struct SpanningTree {
  std::vector<std::optional<std::size_t>> parent_edge;  // per vertex
  std::vector<std::size_t> parent;
  std::vector<bool> in_tree;  // per edge
};

SpanningTree bfs_tree(const MetricGraph& g, std::size_t root) {
  SpanningTree t;
  t.parent_edge.assign(g.vertex_count(), std::nullopt);
  t.parent.assign(g.vertex_count(), root);
  t.in_tree.assign(g.edge_count(), false);
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    incident[g.edge(e).u].push_back(e);
    if (g.edge(e).v != g.edge(e).u) incident[g.edge(e).v].push_back(e);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  seen[root] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto e : incident[x]) {
      const auto& edge = g.edge(e);
      const std::size_t y = edge.u == x ? edge.v : edge.u;
      if (seen[y]) continue;
      seen[y] = true;
      t.parent_edge[y] = e;
      t.parent[y] = x;
      t.in_tree[e] = true;
      queue.push_back(y);
    }
  }
  return t;
}

// Chain (per-edge signed multiplicity) of the tree path from v up to the root.
void add_path_to_root(const MetricGraph& g, const SpanningTree& t, std::size_t v, long sign,
                      std::vector<long>& chain) {
  while (t.parent_edge[v]) {
    const auto e = *t.parent_edge[v];
    chain[e] += g.edge(e).u == v ? sign : -sign;
    v = t.parent[v];
  }
}

void add_path_to_root(const MetricGraph& g, const SpanningTree& t, std::size_t v, const Rational& sign,
                      std::vector<Rational>& chain) {
  while (t.parent_edge[v]) {
    const auto e = *t.parent_edge[v];
    const Rational len = *g.edge(e).length;
    chain[e] += g.edge(e).u == v ? Rational(sign * len) : Rational(-sign * len);
    v = t.parent[v];
  }
}

std::size_t matrix_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CycleBasis cycle_basis(const MetricGraph& g) {
  const auto tree = bfs_tree(g, 0);
  CycleBasis basis;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (tree.in_tree[e]) continue;
    std::vector<long> cycle(g.edge_count(), 0);
    const auto& edge = g.edge(e);
    cycle[e] = 1;
    add_path_to_root(g, tree, edge.v, 1, cycle);
    add_path_to_root(g, tree, edge.u, -1, cycle);
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

void validate_cycle_basis(const MetricGraph& g, const CycleBasis& basis) {
  if (static_cast<long>(basis.genus()) != genus(g)) {
    throw InputError("cycle basis must have genus-many cycles");
  }
  RationalMatrix rows;
  for (const auto& c : basis.cycles) {
    if (c.size() != g.edge_count()) throw InputError("cycle length must equal the number of edges");
    std::vector<long> boundary(g.vertex_count(), 0);
    std::vector<Rational> row;
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e] != 0 && g.edge(e).infinite()) throw InputError("cycles cannot use infinite edges");
      boundary[g.edge(e).v] += c[e];
      boundary[g.edge(e).u] -= c[e];
      row.emplace_back(c[e]);
    }
    for (auto b : boundary) {
      if (b != 0) throw InputError("cycle has nonzero boundary");
    }
    rows.push_back(std::move(row));
  }
  if (matrix_rank(rows) != rows.size()) throw InputError("cycles are not independent");
}

RationalMatrix period_matrix(const MetricGraph& g, const CycleBasis& basis) {
  validate_cycle_basis(g, basis);
  const std::size_t n = basis.genus();
  RationalMatrix q(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const long c = basis.cycles[i][e] * basis.cycles[j][e];
        if (c != 0) q[i][j] += *g.edge(e).length * c;
      }
    }
  }
  return q;
}

RationalMatrix period_matrix(const MetricGraph& g) { return period_matrix(g, cycle_basis(g)); }

JacobianPoint abel_jacobi(const MetricGraph& g, const Divisor& d, const CycleBasis& basis, std::size_t root) {
  if (d.degree() != 0) throw DomainError("Abel-Jacobi map needs a degree-0 divisor");
  if (root >= g.vertex_count()) throw InputError("root vertex out of range");
  validate_cycle_basis(g, basis);
  const auto tree = bfs_tree(g, root);
  // Signed length travelled along each edge (u -> v positive) by a chain whose
  // boundary is D: sum over x of D(x) * (path root -> x).
  std::vector<Rational> chain(g.edge_count(), Rational(0));
  for (const auto& [p, c] : d.entries()) {
    validate_point(g, p);
    const Rational coeff(c);
    if (p.is_vertex()) {
      add_path_to_root(g, tree, p.vertex_id(), Rational(-coeff), chain);
      continue;
    }
    const auto& edge = g.edge(p.edge_id());
    if (edge.infinite()) throw DomainError("divisors on infinite edges are not supported");
    add_path_to_root(g, tree, edge.u, Rational(-coeff), chain);
    chain[p.edge_id()] += coeff * p.offset();
  }
  JacobianPoint out;
  for (const auto& cycle : basis.cycles) {
    Rational s = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (cycle[e] != 0) s += chain[e] * cycle[e];
    }
    out.coords.push_back(s);
  }
  return out;
}

JacobianPoint abel_jacobi(const MetricGraph& g, const Divisor& d) {
  return abel_jacobi(g, d, cycle_basis(g), 0);
}

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == n) throw DomainError("singular matrix");
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

bool jac_equal(const RationalMatrix& periods, const JacobianPoint& p1, const JacobianPoint& p2) {
  const std::size_t n = periods.size();
  if (p1.coords.size() != n || p2.coords.size() != n) throw DomainError("Jacobian points of different genus");
  if (n == 0) return true;
  std::vector<Rational> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = p1.coords[i] - p2.coords[i];
  const auto z = solve(periods, std::move(diff));
  return std::all_of(z.begin(), z.end(), [](const Rational& x) { return is_integer(x); });
}

}  // namespace tropkit
