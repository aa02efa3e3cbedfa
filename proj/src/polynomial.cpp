#include "stirling/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace stirling {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::parse(std::string_view text) {
  std::vector<Integer> coeffs;
  if (text.empty()) return IntPolynomial();
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coeffs.push_back(Integer::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

Rational IntPolynomial::evaluate(const Rational& z) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::derivative(std::uint64_t order) const {
  if (order >= coeffs_.size()) return IntPolynomial();
  std::vector<Integer> out(coeffs_.size() - order);
  for (std::size_t j = 0; j < out.size(); ++j) {
    // d^order/dz^order z^(j+order) = (j+order)_order z^j
    out[j] = coeffs_[j + order] *
             falling_factorial(static_cast<std::int64_t>(j + order), static_cast<std::int64_t>(order));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::compose_affine(const Integer& scale, const Integer& shift) const {
  // Horner in the polynomial ring: acc = acc * (scale z + shift) + c.
  const IntPolynomial linear({shift, scale});
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * linear;
    acc += constant(*it);
  }
  return acc;
}

std::vector<Rational> IntPolynomial::taylor_coefficients(const Rational& center) const {
  // Repeated synthetic division by (z - center).
  std::vector<Rational> work(coeffs_.begin(), coeffs_.end());
  const std::size_t n = work.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) work[j - 1] += center * work[j];
  }
  return work;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += coeffs_[j].to_string();
  }
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << '[' << p.to_string() << ']'; }

}  // namespace stirling
