#include "stirling/stirling_poly.hpp"

#include <stdexcept>

#include "stirling/stirling_numbers.hpp"

namespace stirling {

namespace {

void require_positive(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("Stirling functions require m, n >= 1");
}

void require_positive_d(std::int64_t m, std::int64_t n) {
  require_positive(m, n);
  if (m - n <= 0) throw std::invalid_argument("requires d = m - n > 0");
}

Rational half(std::int64_t n) { return Rational(Integer(n), Integer(2)); }

}  // namespace

IntPolynomial p_polynomial(std::int64_t m, std::int64_t n) {
  require_positive(m, n);
  const std::int64_t d = m - n;
  if (d <= 0) return IntPolynomial();
  std::vector<Integer> coeffs(static_cast<std::size_t>(d) + 1);
  for (std::int64_t j = 1; j <= d; ++j) {
    Integer c = binomial(m, j) * stirling2(m - j, n);
    coeffs[static_cast<std::size_t>(j)] = (j % 2 == 0) ? c : -c;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial stirling_function_poly(std::int64_t m, std::int64_t n) {
  return IntPolynomial::constant(stirling2(m, n)) + p_polynomial(m, n);
}

Rational eval_definition(std::int64_t m, std::int64_t n, const Rational& z) {
  require_positive(m, n);
  Rational sum(0);
  for (std::int64_t k = 0; k <= n; ++k) {
    Rational term = Rational(binomial(n, k)) * pow(z - Rational(k), static_cast<std::uint64_t>(m));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  sum /= Rational(factorial(static_cast<std::uint64_t>(n)));
  return ((m - n) % 2 == 0) ? sum : -sum;
}

Derivative kth_derivative(std::int64_t m, std::int64_t n, std::int64_t k) {
  require_positive_d(m, n);
  if (k < 1) throw std::invalid_argument("derivative order must be >= 1");
  Derivative out;
  out.degenerate = k > m - n;
  out.poly = stirling_function_poly(m, n).derivative(static_cast<std::uint64_t>(k));
  return out;
}

std::vector<Integer> gould_expansion(std::int64_t m, std::int64_t n) {
  require_positive(m, n);
  if (m < n) throw std::invalid_argument("Gould expansion requires d >= 0");
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(m - n + 1));
  for (std::int64_t j = 0; j <= m - n; ++j) out.push_back(b_number(m, n + j));
  return out;
}

std::pair<Rational, Rational> gould_sides(std::int64_t m, std::int64_t n, const Rational& z) {
  const auto coeffs = gould_expansion(m, n);
  Rational lhs(0);
  for (std::int64_t k = 0; k <= n; ++k) {
    Rational term = Rational(binomial(n, k)) * pow(z - Rational(k), static_cast<std::uint64_t>(m));
    if (k % 2 == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  Rational rhs(0);
  const Rational shifted = z - Rational(n);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    rhs += binomial(shifted, static_cast<std::int64_t>(j)) * Rational(coeffs[j]);
  }
  return {lhs, rhs};
}

std::pair<Integer, Integer> convolution_check(std::int64_t m, std::int64_t n, std::int64_t j) {
  require_positive_d(m, n);
  const std::int64_t d = m - n;
  if (j < 1 || j > d) throw std::invalid_argument("convolution index must satisfy 1 <= j <= d");
  Integer lhs(0);
  for (std::int64_t q = j; q <= d; ++q) {
    lhs += binomial(n + q, n) * stirling2(m, n + q) * stirling1_signed(q, j);
  }
  return {lhs, binomial(m, j) * stirling2(m - j, n)};
}

std::vector<Rational> recenter_at_half_n(std::int64_t m, std::int64_t n) {
  require_positive_d(m, n);
  return stirling_function_poly(m, n).taylor_coefficients(half(n));
}

bool has_positive_even_expansion(const std::vector<Rational>& coefficients) {
  if (coefficients.empty()) return false;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const int s = coefficients[j].sign();
    if (j % 2 == 0 ? s <= 0 : s != 0) return false;
  }
  return true;
}

Rational v_number(std::int64_t m, std::int64_t n) {
  require_positive(m, n);
  const std::int64_t d = m - n;
  if (d < 0) return Rational(0);
  if (d == 0) return Rational(1);
  if (d % 2 != 0) return Rational(0);
  return stirling_function_poly(m, n).evaluate(half(n));
}

Integer reconstruct_from_v(std::int64_t m, std::int64_t n) {
  require_positive_d(m, n);
  const std::int64_t d = m - n;
  const Rational q = half(n);
  Rational total(0);
  if (d % 2 == 0) {
    for (std::int64_t j = 0; j <= d / 2; ++j) {
      total += Rational(binomial(m, 2 * j)) * v_number(m - 2 * j, n) * pow(q, static_cast<std::uint64_t>(2 * j));
    }
  } else {
    for (std::int64_t j = 0; j <= (d - 1) / 2; ++j) {
      total += Rational(binomial(m, 2 * j + 1)) * v_number(m - 2 * j - 1, n) *
               pow(q, static_cast<std::uint64_t>(2 * j + 1));
    }
  }
  return total.to_integer();
}

std::string_view to_string(RootKind kind) {
  switch (kind) {
    case RootKind::AllReals: return "AllReals";
    case RootKind::ZeroOnly: return "ZeroOnly";
    case RootKind::ZeroAndN: return "ZeroAndN";
  }
  return "?";
}

RootClassification real_roots(std::int64_t m, std::int64_t n) {
  require_positive(m, n);
  const std::int64_t d = m - n;
  RootClassification out;
  if (d <= 0) return out;

  const IntPolynomial p = p_polynomial(m, n);
  const IntPolynomial dp = p.derivative();
  const Integer slope = Integer(m) * stirling2(m - 1, n);
  const bool even = d % 2 == 0;

  bool certified = p.evaluate(Rational(0)).is_zero() && !slope.is_zero() && dp.evaluate(Rational(0)) == Rational(-slope);
  out.roots.emplace_back(0);
  if (even) {
    out.kind = RootKind::ZeroAndN;
    certified = certified && p.evaluate(Rational(n)).is_zero() && dp.evaluate(Rational(n)) == Rational(slope);
    out.roots.emplace_back(n);
  } else {
    out.kind = RootKind::ZeroOnly;
  }
  out.simple_certified = certified;
  return out;
}

}  // namespace stirling
