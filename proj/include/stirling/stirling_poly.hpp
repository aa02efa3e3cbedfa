#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "stirling/numeric.hpp"
#include "stirling/polynomial.hpp"

namespace stirling {

// Stirling functions
//
//   S(m, n, z) = (-1)^d / n! * sum_{k=0}^{n} C(n,k) (-1)^k (z - k)^m,   d = m - n,
//
// are polynomials of degree max(d, 0) in z. They differ from the constant
// S(m, n) by
//
//   P_(m,n)(z) = sum_{j=1}^{d} C(m,j) S(m-j,n) (-z)^j,
//
// so S(m, n, z) = S(m, n) exactly on the zero set of P_(m,n). Everything here
// is integer/rational exact; identities are checked coefficient-wise.

// P_(m,n)(z). Zero polynomial when d <= 0.
IntPolynomial p_polynomial(std::int64_t m, std::int64_t n);

// S(m, n, z) as S(m, n) + P_(m,n)(z).
IntPolynomial stirling_function_poly(std::int64_t m, std::int64_t n);

// The defining alternating sum evaluated directly at z. Kept independent of
// the polynomial path so the two can be compared.
Rational eval_definition(std::int64_t m, std::int64_t n, const Rational& z);

struct Derivative {
  IntPolynomial poly;
  // k > d: the derivative vanishes identically.
  bool degenerate = false;
};

// k-th formal derivative of S(m, n, z). Requires d > 0 and k >= 1.
Derivative kth_derivative(std::int64_t m, std::int64_t n, std::int64_t k);

// B(m, n + j) for j = 0..d, the coefficients of
//   sum_k C(n,k) (-1)^k (z-k)^m = sum_j C(z-n, j) B(m, n+j).
std::vector<Integer> gould_expansion(std::int64_t m, std::int64_t n);

// Both sides of the expansion above, evaluated exactly at z.
std::pair<Rational, Rational> gould_sides(std::int64_t m, std::int64_t n, const Rational& z);

// (sum_{q=j}^{d} C(n+q, n) S(m, n+q) s(q, j),  C(m, j) S(m-j, n)).
// Requires d > 0 and 1 <= j <= d; the components agree.
std::pair<Integer, Integer> convolution_check(std::int64_t m, std::int64_t n, std::int64_t j);

// Coefficients of S(m, n, z) in powers of (z - n/2). Requires d > 0.
std::vector<Rational> recenter_at_half_n(std::int64_t m, std::int64_t n);

// True when every odd-index coefficient is zero and every even-index one is
// strictly positive, which makes the polynomial positive on the real line
// with its minimum at the expansion centre.
bool has_positive_even_expansion(const std::vector<Rational>& coefficients);

// min over real z of |S(m, n, z)|.
//   d even > 0: S(m, n, n/2);  d odd: 0;  d = 0: 1;  d < 0: 0.
Rational v_number(std::int64_t m, std::int64_t n);

// S(m, n) rebuilt from v-values at n/2 (value of the recentred expansion at
// z = 0). Requires d > 0; throws InvariantViolation on a non-integral result.
Integer reconstruct_from_v(std::int64_t m, std::int64_t n);

enum class RootKind { AllReals, ZeroOnly, ZeroAndN };

std::string_view to_string(RootKind kind);

// Real zero set of P_(m,n): the whole line for d <= 0, {0} for d odd,
// {0, n} for d even positive.
struct RootClassification {
  RootKind kind = RootKind::AllReals;
  // The listed real roots are verified roots with non-zero derivative
  // matching the closed forms P'(0) = -m S(m-1,n) and (d even) P'(n) = m S(m-1,n).
  bool simple_certified = false;
  std::vector<Integer> roots;
};

RootClassification real_roots(std::int64_t m, std::int64_t n);

}  // namespace stirling
