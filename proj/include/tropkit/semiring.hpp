#pragma once

// Arithmetic in the tropical semifield T = Q ∪ {-inf}, where tropical
// addition is max and tropical multiplication is ordinary addition.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tropkit/rational.hpp"

namespace tropkit {

class TropicalScalar {
 public:
  /// The additive zero -inf.
  TropicalScalar() = default;
  TropicalScalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  TropicalScalar(long value) : value_(Rational(value)) {}         // NOLINT(google-explicit-constructor)

  static TropicalScalar neg_infinity() { return {}; }
  /// The multiplicative unit 0.
  static TropicalScalar unit() { return TropicalScalar(Rational(0)); }

  bool is_neg_infinity() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Finite part. Throws DomainError on -inf.
  const Rational& value() const;

  friend bool operator==(const TropicalScalar& a, const TropicalScalar& b);
  /// Total order with -inf as least element.
  friend std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b);

 private:
  std::optional<Rational> value_;
};

/// max(a, b).
TropicalScalar trop_add(const TropicalScalar& a, const TropicalScalar& b);
/// a + b, with -inf absorbing.
TropicalScalar trop_mul(const TropicalScalar& a, const TropicalScalar& b);
/// k * a. Negative powers of -inf throw DomainError.
TropicalScalar trop_pow(const TropicalScalar& a, std::int64_t k);

/// "p/q", "p" or "-inf".
TropicalScalar parse_scalar(std::string_view text);
std::string to_string(const TropicalScalar& a);

}  // namespace tropkit
