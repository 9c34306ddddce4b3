#include "tropkit/semiring.hpp"

#include "tropkit/errors.hpp"

namespace tropkit {

const Rational& TropicalScalar::value() const {
  if (!value_) throw DomainError("finite value requested from -inf");
  return *value_;
}

bool operator==(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) {
    return a.is_neg_infinity() == b.is_neg_infinity();
  }
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) {
    return b.is_neg_infinity() <=> a.is_neg_infinity();
  }
  const int c = cmp(*a.value_, *b.value_);
  return c <=> 0;
}

TropicalScalar trop_add(const TropicalScalar& a, const TropicalScalar& b) {
  return a < b ? b : a;
}

TropicalScalar trop_mul(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) return TropicalScalar::neg_infinity();
  return TropicalScalar(Rational(a.value() + b.value()));
}

TropicalScalar trop_pow(const TropicalScalar& a, std::int64_t k) {
  if (k == 0) return TropicalScalar::unit();
  if (a.is_neg_infinity()) {
    if (k < 0) throw DomainError("negative power of -inf has no inverse");
    return a;
  }
  return TropicalScalar(Rational(a.value() * Rational(static_cast<long>(k))));
}

TropicalScalar parse_scalar(std::string_view text) {
  if (text == "-inf") return TropicalScalar::neg_infinity();
  return TropicalScalar(parse_rational(text));
}

std::string to_string(const TropicalScalar& a) {
  return a.is_neg_infinity() ? std::string("-inf") : to_string(a.value());
}

}  // namespace tropkit
