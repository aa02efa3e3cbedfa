#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stirling {

// Raised when an internal cross-check that must always hold is violated,
// e.g. an exact division that leaves a remainder.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Arbitrary-precision signed integer. Canonical zero; decimal round-trip.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  // Accepts an optional leading '-' followed by decimal digits.
  static Integer parse(std::string_view text);

  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  [[nodiscard]] bool fits_int64() const;
  // Throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] Integer abs() const { return Integer(mpz_class(::abs(value_))); }

  // Remainder in [0, |modulus|).
  [[nodiscard]] std::uint64_t mod(std::uint64_t modulus) const;
  [[nodiscard]] bool divisible_by(const Integer& d) const;
  // Exact quotient; throws InvariantViolation when d does not divide *this.
  [[nodiscard]] Integer divide_exact(const Integer& d) const;

  [[nodiscard]] const mpz_class& raw() const { return value_; }

  Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
  Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
  Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.value_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

Integer pow(const Integer& base, std::uint64_t exponent);
Integer factorial(std::uint64_t n);
Integer gcd(const Integer& a, const Integer& b);

// Exact fraction in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error on a zero denominator.
  Rational(const Integer& numerator, const Integer& denominator);

  // "a" or "a/b".
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
  [[nodiscard]] Integer denominator() const { return Integer(mpz_class(value_.get_den())); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  // Denominator omitted when 1.
  [[nodiscard]] std::string to_string() const;
  // Throws InvariantViolation when the value is not integral.
  [[nodiscard]] Integer to_integer() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

Rational pow(const Rational& base, std::uint64_t exponent);

// Binary digit view of a non-negative integer.
class BitIndexSet {
 public:
  // Throws std::invalid_argument for negative values.
  explicit BitIndexSet(Integer value);

  [[nodiscard]] int digit(std::uint64_t k) const;
  // Throws std::domain_error when the value is zero.
  [[nodiscard]] std::uint64_t msb_position() const;
  [[nodiscard]] bool shares_digit_with(const BitIndexSet& other) const;
  [[nodiscard]] const Integer& value() const { return value_; }

 private:
  Integer value_;
};

// C(n, k); zero outside 0 <= k <= n. Rejects n < 0.
Integer binomial(std::int64_t n, std::int64_t k);

// Generalized binomial x(x-1)...(x-k+1)/k! for rational x.
Rational binomial(const Rational& x, std::int64_t k);

// z(z-1)...(z-k+1); 1 when k = 0. Rejects k < 0.
Rational falling_factorial(const Rational& z, std::int64_t k);
Integer falling_factorial(std::int64_t z, std::int64_t k);

bool is_prime(const Integer& p);

// Largest kappa with p^kappa | n. Rejects n <= 0 and non-prime p.
std::int64_t nu_p(const Integer& p, const Integer& n);

// n if even, n + 1 otherwise.
std::int64_t e_map(std::int64_t n);

// Largest integer congruent to 1 mod 4 that does not exceed n.
std::int64_t ell(std::int64_t n);

std::uint64_t msb_position(const Integer& n);
int bit(const Integer& n, std::uint64_t k);

}  // namespace stirling
