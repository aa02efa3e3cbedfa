#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/numeric.hpp"

namespace stirling {

// Dense polynomial in z with integer coefficients, ascending powers.
// Canonical form has no trailing zero coefficients; the zero polynomial has
// no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  static IntPolynomial constant(const Integer& c);
  // Parses the comma-separated form produced by to_string().
  static IntPolynomial parse(std::string_view text);

  [[nodiscard]] const std::vector<Integer>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  [[nodiscard]] std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Integer coefficient(std::size_t power) const;

  [[nodiscard]] Rational evaluate(const Rational& z) const;
  [[nodiscard]] IntPolynomial derivative(std::uint64_t order = 1) const;
  // p(scale * z + shift).
  [[nodiscard]] IntPolynomial compose_affine(const Integer& scale, const Integer& shift) const;
  // Coefficients c_j with p(z) = sum_j c_j (z - center)^j.
  [[nodiscard]] std::vector<Rational> taylor_coefficients(const Rational& center) const;

  // Decimal coefficients, comma-separated, ascending. Empty for zero.
  // Ascending decimal coefficients, comma-separated; "0" for the zero polynomial.
  [[nodiscard]] std::string to_string() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace stirling
