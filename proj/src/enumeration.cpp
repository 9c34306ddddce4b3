#include "tropkit/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>

#include "tropkit/errors.hpp"

namespace tropkit {

std::vector<long> FloorDiagram::divergence() const {
  std::vector<long> div(static_cast<std::size_t>(degree), 0);
  for (const auto& e : edges) {
    div[static_cast<std::size_t>(e.from)] += e.weight;
    div[static_cast<std::size_t>(e.to)] -= e.weight;
  }
  return div;
}

long FloorDiagram::genus() const {
  return static_cast<long>(edges.size()) - degree + 1;
}

bool FloorDiagram::connected() const {
  std::vector<int> root(static_cast<std::size_t>(degree));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  int components = degree;
  for (const auto& e : edges) {
    const int a = find(e.from);
    const int b = find(e.to);
    if (a != b) {
      root[a] = b;
      --components;
    }
  }
  return components == 1;
}

namespace {

struct Enumerator {
  int degree;
  std::size_t edge_budget;
  std::vector<long> incoming;
  std::vector<FloorEdge> edges;
  std::vector<FloorDiagram> out;

  void floor(int v) {
    if (v == degree) {
      if (edges.size() != edge_budget) return;
      FloorDiagram d{degree, edges};
      if (d.connected()) out.push_back(std::move(d));
      return;
    }
    const long capacity = 1 + incoming[static_cast<std::size_t>(v)];
    out_edges(v, v + 1, 1, capacity);
  }

  // Chooses the out-edges of floor v as a non-decreasing sequence of
  // (target, weight) starting at (target, weight), with total weight at most
  // `capacity`.
  void out_edges(int v, int target, long weight, long capacity) {
    floor(v + 1);
    if (edges.size() == edge_budget) return;
    for (int t = target; t < degree; ++t) {
      for (long w = t == target ? weight : 1; w <= capacity; ++w) {
        edges.push_back({v, t, w});
        incoming[static_cast<std::size_t>(t)] += w;
        out_edges(v, t, w, capacity - w);
        incoming[static_cast<std::size_t>(t)] -= w;
        edges.pop_back();
      }
    }
  }
};

long max_genus(int d) { return static_cast<long>(d - 1) * (d - 2) / 2; }

}  // namespace

std::vector<FloorDiagram> enumerate_floor_diagrams(int d, int g) {
  if (d < 1 || g < 0 || g > max_genus(d)) return {};
  Enumerator e{d, static_cast<std::size_t>(d - 1 + g), std::vector<long>(static_cast<std::size_t>(d), 0), {}, {}};
  e.floor(0);
  for (auto& diagram : e.out) std::sort(diagram.edges.begin(), diagram.edges.end());
  std::sort(e.out.begin(), e.out.end());
  e.out.erase(std::unique(e.out.begin(), e.out.end()), e.out.end());
  return std::move(e.out);
}

void validate_floor_diagram(const FloorDiagram& diagram, int g) {
  for (const auto& e : diagram.edges) {
    if (e.from < 0 || e.to >= diagram.degree || e.from >= e.to || e.weight < 1) {
      throw DomainError("floor diagram edge must go upward with positive weight");
    }
  }
  if (!diagram.connected()) throw DomainError("floor diagram is not connected");
  if (diagram.genus() != g) throw DomainError("floor diagram has the wrong genus");
  for (long div : diagram.divergence()) {
    if (div > 1) throw DomainError("floor divergence exceeds 1");
  }
}

BigInt marking_count(const FloorDiagram& diagram) {
  // Elements: floors, one midpoint per edge, and 1 - div(v) ends per floor.
  // Interchangeable elements (equal parallel edges, ends of one floor) are
  // chained so each equivalence class of markings is counted once.
  std::vector<std::uint64_t> below;  // predecessor masks
  std::vector<std::size_t> floor_elem(static_cast<std::size_t>(diagram.degree));
  for (int v = 0; v < diagram.degree; ++v) {
    floor_elem[static_cast<std::size_t>(v)] = below.size();
    below.push_back(v == 0 ? 0 : std::uint64_t{1} << floor_elem[static_cast<std::size_t>(v - 1)]);
  }
  for (std::size_t i = 0; i < diagram.edges.size(); ++i) {
    const auto& e = diagram.edges[i];
    const std::size_t mid = below.size();
    std::uint64_t pred = std::uint64_t{1} << floor_elem[static_cast<std::size_t>(e.from)];
    if (i > 0 && diagram.edges[i - 1] == e) pred |= std::uint64_t{1} << (mid - 1);
    below.push_back(pred);
    below[floor_elem[static_cast<std::size_t>(e.to)]] |= std::uint64_t{1} << mid;
  }
  const auto div = diagram.divergence();
  for (int v = 0; v < diagram.degree; ++v) {
    for (long k = 0; k < 1 - div[static_cast<std::size_t>(v)]; ++k) {
      std::uint64_t pred = std::uint64_t{1} << floor_elem[static_cast<std::size_t>(v)];
      if (k > 0) pred |= std::uint64_t{1} << (below.size() - 1);
      below.push_back(pred);
    }
  }
  const std::size_t n = below.size();
  if (n > 63) throw DomainError("floor diagram too large to mark");

  // Count linear extensions by dynamic programming over order ideals.
  std::unordered_map<std::uint64_t, BigInt> layer{{0, BigInt(1)}};
  for (std::size_t step = 0; step < n; ++step) {
    std::unordered_map<std::uint64_t, BigInt> next;
    for (const auto& [mask, ways] : layer) {
      for (std::size_t x = 0; x < n; ++x) {
        const std::uint64_t bit = std::uint64_t{1} << x;
        if ((mask & bit) || (below[x] & ~mask)) continue;
        next[mask | bit] += ways;
      }
    }
    layer = std::move(next);
  }
  return layer.begin()->second;
}

BigInt multiplicity(const FloorDiagram& diagram) {
  BigInt m = 1;
  for (const auto& e : diagram.edges) m *= BigInt(e.weight * e.weight);
  return m;
}

BigInt count_curves(int d, int g, Exec exec, int max_degree) {
  if (d < 1) throw DomainError("degree must be at least 1");
  if (d > max_degree) {
    throw DomainError("degree " + std::to_string(d) + " exceeds the enumeration bound " +
                      std::to_string(max_degree));
  }
  const auto diagrams = enumerate_floor_diagrams(d, g);
  std::vector<BigInt> terms(diagrams.size());
  parallel_for(diagrams.size(), exec, [&](std::size_t i) {
    terms[i] = multiplicity(diagrams[i]) * marking_count(diagrams[i]);
  });
  BigInt total = 0;
  for (const auto& t : terms) total += t;
  return total;
}

BigInt kontsevich_N(int d) {
  if (d < 1) throw DomainError("degree must be at least 1");
  std::vector<BigInt> n(static_cast<std::size_t>(d) + 1, BigInt(0));
  n[1] = 1;
  auto binom = [](long top, long k) {
    BigInt b;
    if (k < 0 || k > top) return BigInt(0);
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    return b;
  };
  for (long k = 2; k <= d; ++k) {
    BigInt sum = 0;
    for (long a = 1; a < k; ++a) {
      const long b = k - a;
      const BigInt bracket = BigInt(b) * binom(3 * k - 4, 3 * a - 2) - BigInt(a) * binom(3 * k - 4, 3 * a - 1);
      sum += n[static_cast<std::size_t>(a)] * n[static_cast<std::size_t>(b)] * BigInt(a * a * b) * bracket;
    }
    n[static_cast<std::size_t>(k)] = sum;
  }
  return n[static_cast<std::size_t>(d)];
}

}  // namespace tropkit
