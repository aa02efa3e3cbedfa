#include "stirling/numeric.hpp"

#include <limits>
#include <ostream>

namespace stirling {

namespace {

bool is_decimal(std::string_view digits) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

void require_non_negative(std::int64_t v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

}  // namespace

Integer::Integer(std::int64_t v) : value_(static_cast<long>(v)) {}

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_decimal(digits)) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  // mpz accepts "-0"; canonical zero is restored on construction.
  return Integer(mpz_class(std::string(text), 10));
}

bool Integer::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t Integer::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return value_.get_si();
}

std::uint64_t Integer::mod(std::uint64_t modulus) const {
  if (modulus == 0) throw std::domain_error("modulus must be positive");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_mpz_t(), mpz_class(static_cast<unsigned long>(modulus)).get_mpz_t());
  return r.get_ui();
}

bool Integer::divisible_by(const Integer& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t()) != 0;
}

Integer Integer::divide_exact(const Integer& d) const {
  if (d.is_zero() || !divisible_by(d)) {
    throw InvariantViolation(to_string() + " is not divisible by " + d.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), d.value_.get_mpz_t());
  return Integer(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Integer pow(const Integer& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return Integer(std::move(r));
}

Integer factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Integer(std::move(r));
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(r));
}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator.raw(), denominator.raw());
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const Integer num = Integer::parse(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_decimal(den_text)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const Integer den = Integer::parse(den_text);
  if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Integer Rational::to_integer() const {
  if (!is_integer()) throw InvariantViolation("non-integral value " + to_string());
  return numerator();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational pow(const Rational& base, std::uint64_t exponent) {
  return Rational(pow(base.numerator(), exponent), pow(base.denominator(), exponent));
}

BitIndexSet::BitIndexSet(Integer value) : value_(std::move(value)) {
  if (value_.sign() < 0) throw std::invalid_argument("bit index set requires a non-negative value");
}

int BitIndexSet::digit(std::uint64_t k) const { return mpz_tstbit(value_.raw().get_mpz_t(), k); }

std::uint64_t BitIndexSet::msb_position() const {
  if (value_.is_zero()) throw std::domain_error("zero has no most significant bit");
  return mpz_sizeinbase(value_.raw().get_mpz_t(), 2) - 1;
}

bool BitIndexSet::shares_digit_with(const BitIndexSet& other) const {
  mpz_class both;
  mpz_and(both.get_mpz_t(), value_.raw().get_mpz_t(), other.value_.raw().get_mpz_t());
  return sgn(both) != 0;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  require_non_negative(n, "binomial n");
  if (k < 0 || k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(std::move(r));
}

Rational binomial(const Rational& x, std::int64_t k) {
  if (k < 0) return Rational(0);
  return falling_factorial(x, k) / Rational(factorial(static_cast<std::uint64_t>(k)));
}

Rational falling_factorial(const Rational& z, std::int64_t k) {
  require_non_negative(k, "falling factorial length");
  Rational product(1);
  for (std::int64_t i = 0; i < k; ++i) product *= z - Rational(i);
  return product;
}

Integer falling_factorial(std::int64_t z, std::int64_t k) {
  require_non_negative(k, "falling factorial length");
  Integer product(1);
  for (std::int64_t i = 0; i < k; ++i) product *= Integer(z - i);
  return product;
}

bool is_prime(const Integer& p) {
  if (p < Integer(2)) return false;
  // Exact for every p that fits in 64 bits; probabilistic beyond.
  return mpz_probab_prime_p(p.raw().get_mpz_t(), 40) > 0;
}

std::int64_t nu_p(const Integer& p, const Integer& n) {
  if (!is_prime(p)) throw std::invalid_argument("nu_p: " + p.to_string() + " is not prime");
  if (n.sign() <= 0) throw std::invalid_argument("nu_p: argument must be positive");
  mpz_class rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.raw().get_mpz_t(), p.raw().get_mpz_t()));
}

std::int64_t e_map(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("e_map requires n >= 1");
  return n % 2 == 0 ? n : n + 1;
}

std::int64_t ell(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ell requires n >= 1");
  return 1 + 4 * ((n - 1) / 4);
}

std::uint64_t msb_position(const Integer& n) {
  if (n.sign() <= 0) throw std::invalid_argument("msb_position requires n >= 1");
  return BitIndexSet(n).msb_position();
}

int bit(const Integer& n, std::uint64_t k) { return BitIndexSet(n).digit(k); }

}  // namespace stirling
