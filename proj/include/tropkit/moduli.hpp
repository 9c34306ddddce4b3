#pragma once

// Cross-ratio coordinates of rational tropical curves with marked leaves.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tropkit/rational.hpp"

namespace tropkit {

struct TreeEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational length;
};

struct TreeLeaf {
  long label = 0;
  std::size_t at = 0;  // inner node carrying the leaf
};

/// A metric tree with labelled infinite leaves.
class TropicalTree {
 public:
  /// Throws InputError when the inner graph is not a tree, a length is not
  /// positive, a label repeats, or an inner node has valence below 3 (leaves
  /// included) in a tree with more than one node.
  TropicalTree(std::vector<std::string> nodes, std::vector<TreeEdge> edges, std::vector<TreeLeaf> leaves);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  const std::vector<TreeLeaf>& leaves() const { return leaves_; }
  /// Sorted leaf labels.
  std::vector<long> labels() const;
  std::size_t node_of(long label) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<TreeEdge> edges_;
  std::vector<TreeLeaf> leaves_;
};

struct CrossRatio {
  std::array<long, 4> labels{};  // (i, j, m, l): pair i->j against pair m->l
  Rational value;
};

/// Signed length of the common part of the paths i -> j and m -> l: positive
/// when both paths run through it in the same direction, zero when they share
/// no edge. Labels must be four distinct leaves.
Rational cross_ratio(const TropicalTree& t, long i, long j, long m, long l);

/// One cross-ratio per unordered pair of disjoint unordered label pairs,
/// represented by i < j, m < l, i < m, in lexicographic order. Needs k >= 4.
std::vector<CrossRatio> cross_ratios(const TropicalTree& t);

}  // namespace tropkit
