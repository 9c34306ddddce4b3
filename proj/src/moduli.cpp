#include "tropkit/moduli.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "tropkit/errors.hpp"

namespace tropkit {

TropicalTree::TropicalTree(std::vector<std::string> nodes, std::vector<TreeEdge> edges, std::vector<TreeLeaf> leaves)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), leaves_(std::move(leaves)) {
  if (nodes_.empty()) throw InputError("tree has no nodes");
  if (edges_.size() + 1 != nodes_.size()) throw InputError("inner graph is not a tree");
  std::vector<std::size_t> valence(nodes_.size(), 0);
  std::vector<std::size_t> root(nodes_.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& e : edges_) {
    if (e.u >= nodes_.size() || e.v >= nodes_.size()) throw InputError("tree edge endpoint out of range");
    if (sgn(e.length) <= 0) throw InputError("inner edge lengths must be positive");
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a == b) throw InputError("inner graph has a cycle");
    root[a] = b;
    ++valence[e.u];
    ++valence[e.v];
  }
  std::set<long> labels;
  for (const auto& leaf : leaves_) {
    if (leaf.at >= nodes_.size()) throw InputError("leaf attached to a missing node");
    if (!labels.insert(leaf.label).second) throw InputError("repeated leaf label " + std::to_string(leaf.label));
    ++valence[leaf.at];
  }
  if (nodes_.size() > 1) {
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (valence[v] < 3) throw InputError("inner node '" + nodes_[v] + "' has valence below 3");
    }
  }
}

std::vector<long> TropicalTree::labels() const {
  std::vector<long> out;
  for (const auto& leaf : leaves_) out.push_back(leaf.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t TropicalTree::node_of(long label) const {
  for (const auto& leaf : leaves_) {
    if (leaf.label == label) return leaf.at;
  }
  throw InputError("unknown leaf label " + std::to_string(label));
}

namespace {

// Edges of the path a -> b with +1 when traversed u -> v, -1 otherwise.
std::vector<std::pair<std::size_t, int>> tree_path(const TropicalTree& t, std::size_t a, std::size_t b) {
  const std::size_t n = t.nodes().size();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < t.edges().size(); ++e) {
    incident[t.edges()[e].u].push_back(e);
    incident[t.edges()[e].v].push_back(e);
  }
  std::vector<std::optional<std::size_t>> via(n);
  std::vector<bool> seen(n, false);
  seen[a] = true;
  std::deque<std::size_t> queue{a};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto e : incident[x]) {
      const auto& edge = t.edges()[e];
      const std::size_t y = edge.u == x ? edge.v : edge.u;
      if (seen[y]) continue;
      seen[y] = true;
      via[y] = e;
      queue.push_back(y);
    }
  }
  std::vector<std::pair<std::size_t, int>> path;
  for (std::size_t x = b; via[x];) {
    const auto e = *via[x];
    const auto& edge = t.edges()[e];
    path.emplace_back(e, edge.v == x ? 1 : -1);
    x = edge.v == x ? edge.u : edge.v;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Rational cross_ratio(const TropicalTree& t, long i, long j, long m, long l) {
  const std::set<long> distinct{i, j, m, l};
  if (distinct.size() != 4) throw DomainError("cross-ratio needs four distinct leaf labels");
  const auto p1 = tree_path(t, t.node_of(i), t.node_of(j));
  const auto p2 = tree_path(t, t.node_of(m), t.node_of(l));
  Rational total = 0;
  for (const auto& [e1, s1] : p1) {
    for (const auto& [e2, s2] : p2) {
      if (e1 == e2) total += t.edges()[e1].length * (s1 * s2);
    }
  }
  return total;
}

std::vector<CrossRatio> cross_ratios(const TropicalTree& t) {
  const auto labels = t.labels();
  const std::size_t k = labels.size();
  if (k < 4) throw DomainError("cross-ratios need at least four marked leaves");
  std::vector<CrossRatio> out;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = a + 1; c < k; ++c) {
        if (c == b) continue;
        for (std::size_t d = c + 1; d < k; ++d) {
          if (d == b) continue;
          const long i = labels[a], j = labels[b], m = labels[c], l = labels[d];
          out.push_back({{i, j, m, l}, cross_ratio(t, i, j, m, l)});
        }
      }
    }
  }
  return out;
}

}  // namespace tropkit
