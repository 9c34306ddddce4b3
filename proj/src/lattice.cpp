#include "tropkit/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "tropkit/errors.hpp"

namespace tropkit {

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntVec primitive(std::span<const std::int64_t> v) {
  IntVec out(v.begin(), v.end());
  const auto g = gcd_of(v);
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

std::int64_t lattice_length(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  IntVec diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = b[i] - a[i];
  return gcd_of(diff);
}

namespace {

using Row = std::vector<Rational>;

struct Tableau {
  std::vector<Row> rows;  // constraint rows, last entry is rhs
  Row obj;                // reduced costs in "z - c x = 0" form, last entry is z
  std::vector<std::size_t> basis;

  std::size_t cols() const { return obj.size() - 1; }

  void pivot(std::size_t r, std::size_t col) {
    Row& pr = rows[r];
    const Rational p = pr[col];
    for (auto& x : pr) x /= p;
    auto eliminate = [&](Row& row) {
      if (sgn(row[col]) == 0) return;
      const Rational f = row[col];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i]);
    }
    eliminate(obj);
    basis[r] = col;
  }

  // Runs simplex iterations on the current objective. Columns >= allowed are
  // never entered. Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(obj[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rational ratio = rows[i].back() / rows[i][enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }

  void load_objective(const Row& costs) {
    obj.assign(cols() + 1, Rational(0));
    for (std::size_t j = 0; j < costs.size(); ++j) obj[j] = -costs[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational f = obj[basis[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < obj.size(); ++j) obj[j] -= f * rows[i][j];
    }
  }
};

}  // namespace

std::optional<Rational> lp_maximize(const std::vector<std::vector<Rational>>& A,
                                    const std::vector<Rational>& b,
                                    const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  Tableau t;
  t.rows.assign(m, Row(n + m + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i].back() = flip ? Rational(-b[i]) : b[i];
    t.basis[i] = n + i;
  }
  t.obj.assign(n + m + 1, Rational(0));

  Row phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.load_objective(phase1);
  t.optimize(n + m);
  if (sgn(t.obj.back()) < 0) return std::nullopt;

  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(t.rows[i][j]) != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }

  Row phase2(n + m, Rational(0));
  std::copy(c.begin(), c.end(), phase2.begin());
  t.load_objective(phase2);
  if (!t.optimize(n)) throw DomainError("linear program is unbounded");
  return t.obj.back();
}

std::optional<Rational> upper_hull_height(std::span<const IntVec> points,
                                          std::span<const Rational> heights,
                                          std::span<const std::int64_t> target) {
  if (points.empty()) return std::nullopt;
  const std::size_t dim = target.size();
  std::vector<std::vector<Rational>> A(dim + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t k = 0; k < dim; ++k) {
    for (std::size_t i = 0; i < points.size(); ++i) A[k][i] = Rational(static_cast<long>(points[i][k]));
    b[k] = Rational(static_cast<long>(target[k]));
  }
  for (std::size_t i = 0; i < points.size(); ++i) A[dim][i] = 1;
  b[dim] = 1;
  return lp_maximize(A, b, std::vector<Rational>(heights.begin(), heights.end()));
}

bool in_convex_hull(std::span<const IntVec> points, std::span<const std::int64_t> target) {
  const std::vector<Rational> zeros(points.size(), Rational(0));
  return upper_hull_height(points, zeros, target).has_value();
}

LatticePolytope convex_hull(std::span<const IntVec> points) {
  LatticePolytope hull;
  if (points.empty()) return hull;
  hull.dim = points.front().size();
  std::vector<IntVec> unique(points.begin(), points.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (hull.dim == 1) {
    hull.vertices = {unique.front()};
    if (unique.size() > 1) hull.vertices.push_back(unique.back());
    return hull;
  }
  if (hull.dim == 2) {
    hull.vertices = convex_hull_2d(unique);
    std::sort(hull.vertices.begin(), hull.vertices.end());
    return hull;
  }
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<IntVec> others;
    others.reserve(unique.size() - 1);
    for (std::size_t j = 0; j < unique.size(); ++j) {
      if (j != i) others.push_back(unique[j]);
    }
    if (!in_convex_hull(others, unique[i])) hull.vertices.push_back(unique[i]);
  }
  return hull;
}

std::vector<IntVec> convex_hull_2d(std::span<const IntVec> points) {
  std::vector<IntVec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<IntVec> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace tropkit
