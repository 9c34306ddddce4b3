#pragma once

// Tropical Laurent polynomials f(x) = max_j (a_j + j·x) in n variables.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "tropkit/lattice.hpp"
#include "tropkit/rational.hpp"
#include "tropkit/semiring.hpp"

namespace tropkit {

struct Monomial {
  IntVec exponent;
  Rational coefficient;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

class TropicalPolynomial {
 public:
  /// Throws InputError on an empty term list, inconsistent exponent lengths
  /// or duplicate exponents.
  TropicalPolynomial(std::size_t n, std::vector<Monomial> terms);
  /// Convenience for tests: exponent → coefficient. Dimension is taken from
  /// the keys.
  explicit TropicalPolynomial(const std::map<IntVec, Rational>& terms);

  std::size_t dim() const { return n_; }
  /// Sorted lexicographically by exponent.
  const std::vector<Monomial>& terms() const { return terms_; }
  std::vector<IntVec> exponents() const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;

 private:
  std::size_t n_;
  std::vector<Monomial> terms_;
};

TropicalScalar evaluate(const TropicalPolynomial& f, std::span<const Rational> x);
TropicalPolynomial trop_product(const TropicalPolynomial& f, const TropicalPolynomial& g);
LatticePolytope newton_polytope(const TropicalPolynomial& f);

/// Terms whose lifted point (exponent, coefficient) lies on the upper convex
/// hull of all lifted points. These are exactly the terms that attain the
/// maximum somewhere; terms on the hull that win only on a lower-dimensional
/// set are kept.
std::vector<Monomial> active_terms(const TropicalPolynomial& f);
TropicalPolynomial restrict_to_active(const TropicalPolynomial& f);

/// Exact test of evaluate(f,·) == evaluate(g,·) on all of Q^n.
bool functionally_equal(const TropicalPolynomial& f, const TropicalPolynomial& g);

}  // namespace tropkit
