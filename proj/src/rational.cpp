#include "tropkit/rational.hpp"

#include <cctype>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

bool valid_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_literal(num) || !valid_integer_literal(den)) {
    throw InputError("invalid rational literal '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) {
    return std::string(s.front() == '+' ? s.substr(1) : s);
  };
  BigInt n(strip_plus(num), 10);
  BigInt d(strip_plus(den), 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw DomainError("integer overflow converting " + z.get_str());
  return z.get_si();
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer, got " + to_string(q));
  return to_int64(BigInt(q.get_num()));
}

Rational floor(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

}  // namespace tropkit
