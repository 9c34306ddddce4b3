#include "tropkit/metricgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "tropkit/errors.hpp"

namespace tropkit {

// ---------------------------------------------------------------- MetricGraph

MetricGraph::MetricGraph(std::vector<std::string> vertex_names, std::vector<GraphEdge> edges)
    : names_(std::move(vertex_names)), edges_(std::move(edges)), valence_(names_.size(), 0) {
  if (names_.empty()) throw InputError("graph has no vertices");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw InputError("duplicate vertex name '" + n + "'");
  }
  for (const auto& e : edges_) {
    if (e.u >= names_.size() || e.v >= names_.size()) throw InputError("edge endpoint out of range");
    if (e.length && sgn(*e.length) <= 0) throw InputError("edge lengths must be positive");
    ++valence_[e.u];
    ++valence_[e.v];
  }
  for (const auto& e : edges_) {
    if (e.infinite() && !(valence_[e.u] == 1 || valence_[e.v] == 1)) {
      throw InputError("infinite edge must end at a 1-valent leaf");
    }
  }
  // Connectivity.
  std::vector<std::vector<std::size_t>> adj(names_.size());
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> reached(names_.size(), false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto y : adj[x]) {
      if (!reached[y]) {
        reached[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  if (count != names_.size()) throw InputError("graph is not connected");
}

std::optional<std::size_t> MetricGraph::find_vertex(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool MetricGraph::all_finite() const {
  return std::none_of(edges_.begin(), edges_.end(), [](const GraphEdge& e) { return e.infinite(); });
}

// ----------------------------------------------------------------- GraphPoint

GraphPoint GraphPoint::vertex(std::size_t v) {
  GraphPoint p;
  p.vertex_ = v;
  return p;
}

GraphPoint GraphPoint::on_edge(std::size_t edge, Rational offset) {
  if (sgn(offset) <= 0) throw InputError("edge offset must be strictly positive");
  GraphPoint p;
  p.edge_ = edge;
  p.offset_ = std::move(offset);
  return p;
}

std::size_t GraphPoint::vertex_id() const {
  if (!is_vertex()) throw std::logic_error("point is not a vertex");
  return vertex_;
}

std::size_t GraphPoint::edge_id() const {
  if (is_vertex()) throw std::logic_error("point is a vertex");
  return *edge_;
}

const Rational& GraphPoint::offset() const {
  if (is_vertex()) throw std::logic_error("point is a vertex");
  return offset_;
}

bool operator==(const GraphPoint& a, const GraphPoint& b) {
  if (a.is_vertex() != b.is_vertex()) return false;
  if (a.is_vertex()) return a.vertex_ == b.vertex_;
  return *a.edge_ == *b.edge_ && a.offset_ == b.offset_;
}

bool operator<(const GraphPoint& a, const GraphPoint& b) {
  if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
  if (a.is_vertex()) return a.vertex_ < b.vertex_;
  if (*a.edge_ != *b.edge_) return *a.edge_ < *b.edge_;
  return a.offset_ < b.offset_;
}

GraphPoint point_on(const MetricGraph& g, std::size_t e, const Rational& offset) {
  if (e >= g.edge_count()) throw InputError("edge index out of range");
  const auto& edge = g.edge(e);
  if (sgn(offset) < 0) throw InputError("negative edge offset");
  if (sgn(offset) == 0) return GraphPoint::vertex(edge.u);
  if (edge.length) {
    if (offset > *edge.length) throw InputError("edge offset beyond edge length");
    if (offset == *edge.length) return GraphPoint::vertex(edge.v);
  }
  return GraphPoint::on_edge(e, offset);
}

void validate_point(const MetricGraph& g, const GraphPoint& p) {
  if (p.is_vertex()) {
    if (p.vertex_id() >= g.vertex_count()) throw InputError("vertex index out of range");
    return;
  }
  if (p.edge_id() >= g.edge_count()) throw InputError("edge index out of range");
  const auto& len = g.edge(p.edge_id()).length;
  if (len && p.offset() >= *len) throw InputError("edge point must lie strictly inside its edge");
}

// -------------------------------------------------------------------- Divisor

Divisor Divisor::point(const GraphPoint& p, long coefficient) {
  Divisor d;
  d.add(p, coefficient);
  return d;
}

void Divisor::add(const GraphPoint& p, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = entries_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) entries_.erase(it);
  }
}

long Divisor::operator[](const GraphPoint& p) const {
  const auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long d = 0;
  for (const auto& [p, c] : entries_) d += c;
  return d;
}

bool Divisor::is_effective() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second >= 0; });
}

Divisor Divisor::operator+(const Divisor& other) const {
  Divisor out = *this;
  for (const auto& [p, c] : other.entries_) out.add(p, c);
  return out;
}

Divisor Divisor::operator-(const Divisor& other) const { return *this + (-other); }

Divisor Divisor::operator-() const {
  Divisor out;
  for (const auto& [p, c] : entries_) out.entries_.emplace(p, -c);
  return out;
}

// ----------------------------------------------------------- RationalFunction

namespace {

void require_finite(const MetricGraph& g, const char* what) {
  if (!g.all_finite()) throw DomainError(std::string(what) + " requires all edge lengths to be finite");
}

// Slopes of the pieces of edge e in the u -> v direction.
std::vector<Rational> edge_slopes(const MetricGraph& g, const std::vector<Rational>& vertex_values,
                                  const std::vector<Breakpoint>& breaks, std::size_t e) {
  const auto& edge = g.edge(e);
  std::vector<std::pair<Rational, Rational>> knots;
  knots.emplace_back(Rational(0), vertex_values[edge.u]);
  for (const auto& b : breaks) knots.emplace_back(b.offset, b.value);
  knots.emplace_back(*edge.length, vertex_values[edge.v]);
  std::vector<Rational> slopes;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    slopes.emplace_back((knots[i + 1].second - knots[i].second) / (knots[i + 1].first - knots[i].first));
  }
  return slopes;
}

}  // namespace

RationalFunction::RationalFunction(MetricGraph graph, std::vector<Rational> vertex_values,
                                   std::vector<Breakpoint> breakpoints)
    : graph_(std::move(graph)), vertex_values_(std::move(vertex_values)), breaks_(graph_.edge_count()) {
  if (!graph_.all_finite()) throw InputError("rational functions need all edge lengths finite");
  if (vertex_values_.size() != graph_.vertex_count()) throw InputError("one value per vertex required");
  for (auto& b : breakpoints) {
    if (b.edge >= graph_.edge_count()) throw InputError("breakpoint edge out of range");
    if (sgn(b.offset) <= 0 || b.offset >= *graph_.edge(b.edge).length) {
      throw InputError("breakpoint must lie strictly inside its edge");
    }
    breaks_[b.edge].push_back(std::move(b));
  }
  for (std::size_t e = 0; e < breaks_.size(); ++e) {
    auto& bs = breaks_[e];
    std::sort(bs.begin(), bs.end(), [](const Breakpoint& x, const Breakpoint& y) { return x.offset < y.offset; });
    for (std::size_t i = 1; i < bs.size(); ++i) {
      if (bs[i - 1].offset == bs[i].offset) throw InputError("repeated breakpoint");
    }
    for (const auto& s : edge_slopes(graph_, vertex_values_, bs, e)) {
      if (!is_integer(s)) throw InputError("rational function slope " + to_string(s) + " is not an integer");
    }
  }
}

Rational RationalFunction::value_at(const GraphPoint& p) const {
  if (p.is_vertex()) return vertex_values_.at(p.vertex_id());
  const std::size_t e = p.edge_id();
  const auto& edge = graph_.edge(e);
  Rational x0 = 0;
  Rational y0 = vertex_values_[edge.u];
  for (const auto& b : breaks_[e]) {
    if (b.offset >= p.offset()) {
      return y0 + (b.value - y0) * (p.offset() - x0) / (b.offset - x0);
    }
    x0 = b.offset;
    y0 = b.value;
  }
  const Rational& len = *edge.length;
  return y0 + (vertex_values_[edge.v] - y0) * (p.offset() - x0) / (len - x0);
}

// ------------------------------------------------------------ basic invariants

long genus(const MetricGraph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + 1;
}

Divisor canonical_divisor(const MetricGraph& g) {
  require_finite(g, "canonical divisor");
  Divisor k;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    k.add(GraphPoint::vertex(v), static_cast<long>(g.valence(v)) - 2);
  }
  return k;
}

Divisor divisor_of(const RationalFunction& phi) {
  const auto& g = phi.graph();
  Divisor d;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    const auto& bs = phi.breakpoints(e);
    const auto slopes = edge_slopes(g, phi.vertex_values(), bs, e);
    d.add(GraphPoint::vertex(edge.u), to_int64(slopes.front()));
    d.add(GraphPoint::vertex(edge.v), -to_int64(slopes.back()));
    for (std::size_t i = 0; i < bs.size(); ++i) {
      d.add(GraphPoint::on_edge(e, bs[i].offset), to_int64(slopes[i + 1]) - to_int64(slopes[i]));
    }
  }
  return d;
}

// ------------------------------------------------------------ ChipFiringModel

ChipFiringModel::ChipFiringModel(const MetricGraph& g, std::span<const GraphPoint> points, long refine)
    : steps_per_unit_(1), vertex_count_(g.vertex_count()) {
  require_finite(g, "chip-firing");
  if (refine < 1) throw DomainError("refinement factor must be positive");
  auto absorb = [&](const Rational& q) {
    mpz_lcm(steps_per_unit_.get_mpz_t(), steps_per_unit_.get_mpz_t(), q.get_den_mpz_t());
  };
  for (const auto& e : g.edges()) absorb(*e.length);
  for (const auto& p : points) {
    validate_point(g, p);
    if (!p.is_vertex()) absorb(p.offset());
  }
  steps_per_unit_ *= refine;
  const auto count_pieces = [&] {
    pieces_.clear();
    for (const auto& e : g.edges()) pieces_.push_back(to_int64(Rational(*e.length * steps_per_unit_)));
  };
  count_pieces();
  // Loops are cut into at least two pieces so the model has no loops.
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).u == g.edge(e).v && pieces_[e] == 1) {
      steps_per_unit_ *= 2;
      count_pieces();
      break;
    }
  }

  std::size_t next = g.vertex_count();
  first_interior_.resize(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    first_interior_[e] = next;
    next += static_cast<std::size_t>(pieces_[e] - 1);
  }
  std::vector<std::map<std::size_t, long>> adj(next);
  auto link = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    ++adj[a][b];
    ++adj[b][a];
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    std::size_t prev = edge.u;
    for (long k = 1; k < pieces_[e]; ++k) {
      const std::size_t node = first_interior_[e] + static_cast<std::size_t>(k - 1);
      link(prev, node);
      prev = node;
    }
    link(prev, edge.v);
  }
  adjacency_.resize(next);
  for (std::size_t v = 0; v < next; ++v) adjacency_[v].assign(adj[v].begin(), adj[v].end());
}

std::size_t ChipFiringModel::node_of(const GraphPoint& p) const {
  if (p.is_vertex()) return p.vertex_id();
  const Rational steps = p.offset() * steps_per_unit_;
  if (!is_integer(steps)) throw std::logic_error("point is not a node of the chip-firing model");
  const long k = to_int64(steps);
  return first_interior_.at(p.edge_id()) + static_cast<std::size_t>(k - 1);
}

GraphPoint ChipFiringModel::point_of(std::size_t node) const {
  if (node < vertex_count_) return GraphPoint::vertex(node);
  const auto it = std::upper_bound(first_interior_.begin(), first_interior_.end(), node);
  // Edges without interior nodes share their successor's start, so the last
  // edge with a start at or below the node is the one containing it.
  const std::size_t e = static_cast<std::size_t>(it - first_interior_.begin()) - 1;
  const long k = static_cast<long>(node - first_interior_[e]) + 1;
  return GraphPoint::on_edge(e, Rational(BigInt(k)) / Rational(steps_per_unit_));
}

std::vector<long> ChipFiringModel::to_vector(const Divisor& d) const {
  std::vector<long> chips(size(), 0);
  for (const auto& [p, c] : d.entries()) chips[node_of(p)] += c;
  return chips;
}

Divisor ChipFiringModel::to_divisor(std::span<const long> chips) const {
  Divisor d;
  for (std::size_t v = 0; v < chips.size(); ++v) d.add(point_of(v), chips[v]);
  return d;
}

std::vector<long> ChipFiringModel::reduce(std::vector<long> chips, std::size_t q) const {
  const std::size_t n = size();
  // Stage 1: clear debt off q, layer by layer from the farthest BFS layer.
  std::vector<long> dist(n, -1);
  std::vector<std::size_t> order{q};
  dist[q] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [y, m] : adjacency_[order[i]]) {
      if (dist[y] < 0) {
        dist[y] = dist[order[i]] + 1;
        order.push_back(y);
      }
    }
  }
  const long max_dist = dist[order.back()];
  for (long layer = max_dist; layer >= 1; --layer) {
    long times = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] != layer || chips[v] >= 0) continue;
      long gain = 0;
      for (const auto& [y, m] : adjacency_[v]) {
        if (dist[y] < layer) gain += m;
      }
      times = std::max(times, (-chips[v] + gain - 1) / gain);
    }
    if (times == 0) continue;
    // The set {dist >= layer} borrows `times` times.
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < layer) continue;
      for (const auto& [y, m] : adjacency_[v]) {
        if (dist[y] < layer) {
          chips[v] += times * m;
          chips[y] -= times * m;
        }
      }
    }
  }

  // Stage 2: Dhar burning from q; fire the unburnt set as often as legal.
  std::vector<long> burning(n);
  std::vector<char> burnt(n);
  for (;;) {
    std::fill(burning.begin(), burning.end(), 0);
    std::fill(burnt.begin(), burnt.end(), 0);
    std::vector<std::size_t> stack{q};
    burnt[q] = 1;
    std::size_t burnt_count = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& [y, m] : adjacency_[x]) {
        if (burnt[y]) continue;
        burning[y] += m;
        if (burning[y] > chips[y]) {
          burnt[y] = 1;
          ++burnt_count;
          stack.push_back(y);
        }
      }
    }
    if (burnt_count == n) return chips;
    long times = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!burnt[v] && burning[v] > 0) {
        const long t = chips[v] / burning[v];
        times = times < 0 ? t : std::min(times, t);
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      for (const auto& [y, m] : adjacency_[v]) {
        if (burnt[y]) {
          chips[v] -= times * m;
          chips[y] += times * m;
        }
      }
    }
  }
}

// ------------------------------------------------------ equivalence and rank

namespace {

std::vector<GraphPoint> support_points(const Divisor& d) {
  std::vector<GraphPoint> pts;
  for (const auto& [p, c] : d.entries()) pts.push_back(p);
  return pts;
}

}  // namespace

Divisor reduced_divisor(const MetricGraph& g, const Divisor& d, const GraphPoint& q) {
  auto pts = support_points(d);
  pts.push_back(q);
  const ChipFiringModel model(g, pts);
  const auto chips = model.reduce(model.to_vector(d), model.node_of(q));
  return model.to_divisor(chips);
}

bool linearly_equivalent(const MetricGraph& g, const Divisor& d1, const Divisor& d2) {
  require_finite(g, "linear equivalence");
  if (d1.degree() != d2.degree()) return false;
  const Divisor diff = d1 - d2;
  const auto pts = support_points(diff);
  const ChipFiringModel model(g, pts);
  const auto chips = model.reduce(model.to_vector(diff), 0);
  return std::all_of(chips.begin(), chips.end(), [](long c) { return c == 0; });
}

long rank(const MetricGraph& g, const Divisor& d, Exec exec, long refine) {
  require_finite(g, "rank");
  if (d.degree() < 0) return -1;
  const auto pts = support_points(d);
  const ChipFiringModel model(g, pts, refine);
  const std::size_t q = 0;
  const std::size_t n = model.size();

  // Level k holds the q-reduced classes of D - D' over effective D' of
  // degree k supported on model nodes.
  std::vector<std::vector<long>> level{model.reduce(model.to_vector(d), q)};
  if (level.front()[q] < 0) return -1;
  for (long k = 0;; ++k) {
    std::vector<std::vector<long>> next(level.size() * n);
    parallel_for(next.size(), exec, [&](std::size_t idx) {
      auto chips = level[idx / n];
      --chips[idx % n];
      next[idx] = model.reduce(std::move(chips), q);
    });
    for (const auto& c : next) {
      if (c[q] < 0) return k;
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
}

bool riemann_roch_check(const MetricGraph& g, const Divisor& d, Exec exec) {
  const Divisor k = canonical_divisor(g);
  return rank(g, d, exec) - rank(g, k - d, exec) == d.degree() - genus(g) + 1;
}

// -------------------------------------------------------------- modifications

namespace {

std::string fresh_name(const std::vector<std::string>& names, const std::string& stem) {
  for (std::size_t k = names.size();; ++k) {
    std::string candidate = stem + std::to_string(k);
    if (std::find(names.begin(), names.end(), candidate) == names.end()) return candidate;
  }
}

MetricGraph without(const MetricGraph& g, std::vector<GraphEdge> edges, std::size_t drop_vertex) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (v != drop_vertex) names.push_back(g.vertex_names()[v]);
  }
  for (auto& e : edges) {
    if (e.u > drop_vertex) --e.u;
    if (e.v > drop_vertex) --e.v;
  }
  return MetricGraph(std::move(names), std::move(edges));
}

}  // namespace

MetricGraph modify(const MetricGraph& g, const GraphPoint& p) {
  validate_point(g, p);
  auto names = g.vertex_names();
  auto edges = g.edges();
  std::size_t attach = 0;
  if (p.is_vertex()) {
    attach = p.vertex_id();
  } else {
    auto& e = edges[p.edge_id()];
    if (e.infinite()) throw DomainError("modification inside an infinite edge is not supported");
    attach = names.size();
    names.push_back(fresh_name(names, "p"));
    const std::size_t far_end = e.v;
    const Rational rest = *e.length - p.offset();
    e.v = attach;
    e.length = p.offset();
    edges.push_back({attach, far_end, rest});
  }
  const std::size_t leaf = names.size();
  names.push_back(fresh_name(names, "leaf"));
  edges.push_back({attach, leaf, std::nullopt});
  return MetricGraph(std::move(names), std::move(edges));
}

MetricGraph contract_leaf(const MetricGraph& g, std::size_t e, bool smooth) {
  if (e >= g.edge_count()) throw InputError("edge index out of range");
  const auto& leaf_edge = g.edge(e);
  if (!leaf_edge.infinite() || leaf_edge.u == leaf_edge.v) {
    throw DomainError("contract_leaf needs an infinite leaf edge");
  }
  const std::size_t leaf = g.valence(leaf_edge.v) == 1 ? leaf_edge.v : leaf_edge.u;
  const std::size_t attach = leaf == leaf_edge.v ? leaf_edge.u : leaf_edge.v;
  if (g.valence(leaf) != 1) throw DomainError("contract_leaf needs an infinite leaf edge");
  if (g.vertex_count() == 2 && g.edge_count() == 1) {
    // Contracting the only edge leaves the attaching point alone.
    return MetricGraph({g.vertex_names()[attach]}, {});
  }

  std::vector<GraphEdge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<long>(e));
  MetricGraph reduced = without(g, std::move(edges), leaf);
  const std::size_t a = attach > leaf ? attach - 1 : attach;
  if (!smooth || reduced.valence(a) != 2) return reduced;

  std::vector<std::size_t> incident;
  for (std::size_t i = 0; i < reduced.edge_count(); ++i) {
    const auto& x = reduced.edge(i);
    if (x.u == a || x.v == a) incident.push_back(i);
  }
  if (incident.size() != 2) return reduced;  // a loop
  const auto& e1 = reduced.edge(incident[0]);
  const auto& e2 = reduced.edge(incident[1]);
  if (e1.infinite() || e2.infinite()) return reduced;
  const std::size_t x = e1.u == a ? e1.v : e1.u;
  const std::size_t y = e2.u == a ? e2.v : e2.u;
  std::vector<GraphEdge> merged = reduced.edges();
  const Rational total = *e1.length + *e2.length;
  merged[incident[0]] = e1.v == a ? GraphEdge{x, y, total} : GraphEdge{y, x, total};
  merged.erase(merged.begin() + static_cast<long>(incident[1]));
  return without(reduced, std::move(merged), a);
}

bool trees_equivalent(const MetricGraph& t1, const MetricGraph& t2) {
  return genus(t1) == 0 && genus(t2) == 0;
}

}  // namespace tropkit
