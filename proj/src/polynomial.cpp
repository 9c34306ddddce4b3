#include "tropkit/polynomial.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

void require_same_dim(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  if (f.dim() != g.dim()) {
    throw DomainError("dimension mismatch: " + std::to_string(f.dim()) + " vs " +
                      std::to_string(g.dim()));
  }
}

std::vector<Rational> heights(const TropicalPolynomial& f) {
  std::vector<Rational> h;
  h.reserve(f.terms().size());
  for (const auto& t : f.terms()) h.push_back(t.coefficient);
  return h;
}

}  // namespace

TropicalPolynomial::TropicalPolynomial(std::size_t n, std::vector<Monomial> terms)
    : n_(n), terms_(std::move(terms)) {
  if (n_ == 0) throw InputError("polynomial dimension must be at least 1");
  if (terms_.empty()) throw InputError("polynomial must have at least one term");
  for (const auto& t : terms_) {
    if (t.exponent.size() != n_) {
      throw InputError("exponent length " + std::to_string(t.exponent.size()) +
                       " does not match dimension " + std::to_string(n_));
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Monomial& a, const Monomial& b) { return a.exponent < b.exponent; });
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i - 1].exponent == terms_[i].exponent) {
      throw InputError("duplicate exponent in polynomial");
    }
  }
}

TropicalPolynomial::TropicalPolynomial(const std::map<IntVec, Rational>& terms)
    : TropicalPolynomial(terms.empty() ? 0 : terms.begin()->first.size(), [&] {
        std::vector<Monomial> out;
        for (const auto& [e, c] : terms) out.push_back({e, c});
        return out;
      }()) {}

std::vector<IntVec> TropicalPolynomial::exponents() const {
  std::vector<IntVec> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

TropicalScalar evaluate(const TropicalPolynomial& f, std::span<const Rational> x) {
  if (x.size() != f.dim()) {
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, polynomial has " +
                      std::to_string(f.dim()) + " variables");
  }
  TropicalScalar best = TropicalScalar::neg_infinity();
  for (const auto& t : f.terms()) {
    Rational v = t.coefficient;
    for (std::size_t k = 0; k < x.size(); ++k) v += Rational(static_cast<long>(t.exponent[k])) * x[k];
    best = trop_add(best, TropicalScalar(std::move(v)));
  }
  return best;
}

TropicalPolynomial trop_product(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  require_same_dim(f, g);
  std::map<IntVec, Rational> acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      IntVec e(f.dim());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exponent[k] + b.exponent[k];
      Rational c = a.coefficient + b.coefficient;
      auto [it, inserted] = acc.try_emplace(std::move(e), c);
      if (!inserted && it->second < c) it->second = c;
    }
  }
  return TropicalPolynomial(acc);
}

LatticePolytope newton_polytope(const TropicalPolynomial& f) {
  const auto pts = f.exponents();
  return convex_hull(pts);
}

std::vector<Monomial> active_terms(const TropicalPolynomial& f) {
  const auto& terms = f.terms();
  if (terms.size() == 1) return terms;
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::vector<IntVec> pts;
    std::vector<Rational> hs;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j == i) continue;
      pts.push_back(terms[j].exponent);
      hs.push_back(terms[j].coefficient);
    }
    const auto others = upper_hull_height(pts, hs, terms[i].exponent);
    if (!others || *others <= terms[i].coefficient) out.push_back(terms[i]);
  }
  return out;
}

TropicalPolynomial restrict_to_active(const TropicalPolynomial& f) {
  return TropicalPolynomial(f.dim(), active_terms(f));
}

bool functionally_equal(const TropicalPolynomial& f, const TropicalPolynomial& g) {
  require_same_dim(f, g);
  if (newton_polytope(f) != newton_polytope(g)) return false;
  std::set<IntVec> support;
  for (const auto& t : f.terms()) support.insert(t.exponent);
  for (const auto& t : g.terms()) support.insert(t.exponent);
  const auto fp = f.exponents();
  const auto gp = g.exponents();
  const auto fh = heights(f);
  const auto gh = heights(g);
  for (const auto& e : support) {
    if (upper_hull_height(fp, fh, e) != upper_hull_height(gp, gh, e)) return false;
  }
  return true;
}

}  // namespace tropkit
