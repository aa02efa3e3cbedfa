#include "stirling/congruences.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stirling/stirling_numbers.hpp"

namespace stirling {

namespace {

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(Integer(p))) {
    throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
  }
}

void require_odd_d(std::int64_t m, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  const std::int64_t d = m - n;
  if (d <= 0 || d % 2 == 0) throw std::invalid_argument("requires odd d = m - n > 0");
}

std::uint64_t factorial_mod(std::uint64_t k, std::uint64_t modulus) {
  std::uint64_t acc = 1 % modulus;
  for (std::uint64_t i = 2; i <= k; ++i) acc = acc * (i % modulus) % modulus;
  return acc;
}

}  // namespace

ValuationBound valuation_bound(std::int64_t p, std::int64_t m, std::int64_t n) {
  require_odd_d(m, n);
  if (!is_prime(Integer(p))) throw std::invalid_argument(std::to_string(p) + " is not prime");
  ValuationBound out;
  out.p = p;
  out.bound = nu_p(Integer(p), Integer(e_map(n))) - (p == 2 ? 1 : 0);
  out.actual = nu_p(Integer(p), stirling2(m, n));
  return out;
}

bool half_even_divides(std::int64_t m, std::int64_t n) {
  require_odd_d(m, n);
  return stirling2(m, n).divisible_by(Integer(e_map(n) / 2));
}

std::string_view to_string(OddDClass c) {
  switch (c) {
    case OddDClass::PrimeExceptional: return "PrimeExceptional";
    case OddDClass::Composite: return "Composite";
    case OddDClass::Unit: return "Unit";
  }
  return "?";
}

OddDPrimality classify_primality_odd_d(std::int64_t m, std::int64_t n) {
  require_odd_d(m, n);
  OddDPrimality out;
  if (n == 1) {
    out.kind = OddDClass::Unit;
    return out;
  }
  if (m == 3 && n == 2) {
    out.kind = OddDClass::PrimeExceptional;
    return out;
  }
  const Integer value = stirling2(m, n);
  const Integer witness = n == 2 ? Integer(3) : Integer(e_map(n) / 2);
  if (!(witness > Integer(1) && witness < value && value.divisible_by(witness))) {
    throw InvariantViolation("witness " + witness.to_string() + " is not a proper divisor of S(" +
                             std::to_string(m) + "," + std::to_string(n) + ")");
  }
  out.kind = OddDClass::Composite;
  out.witness = witness;
  return out;
}

std::uint64_t stirling2_mod(std::int64_t m, std::int64_t n, std::uint64_t modulus) {
  if (m < 0 || n < 0) throw std::invalid_argument("requires m, n >= 0");
  if (modulus == 0 || modulus >= (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("modulus must lie in [1, 2^32)");
  }
  if (n > m) return 0;
  // row[k] = S(r, k) mod modulus for the current r; columns above n are never needed.
  const auto width = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint64_t> row(width, 0);
  row[0] = 1 % modulus;
  for (std::int64_t r = 1; r <= m; ++r) {
    const auto top = static_cast<std::size_t>(std::min(r, n));
    for (std::size_t k = top; k >= 1; --k) {
      row[k] = (k % modulus * row[k] + row[k - 1]) % modulus;
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(n)];
}

bool wilson_check(std::int64_t p, std::int64_t n) {
  if (p < 2) throw std::invalid_argument("wilson check requires p >= 2");
  if (n < 1) throw std::invalid_argument("wilson check requires n >= 1");
  const auto modulus = static_cast<std::uint64_t>(p);
  const std::uint64_t s = stirling2_mod(n * (p - 1), p - 1, modulus);
  const std::uint64_t b = factorial_mod(static_cast<std::uint64_t>(p - 1), modulus) * s % modulus;
  return b == modulus - 1;
}

WilsonReport is_prime_wilson(std::int64_t p, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  WilsonReport report;
  report.p = p;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    report.checked_n.push_back(n);
    if (!wilson_check(p, n)) {
      report.all_passed = false;
      report.first_failure = n;
      break;
    }
  }
  return report;
}

FactorialResidue wilson_factorial_residue(std::int64_t p, std::int64_t n, std::int64_t k) {
  require_odd_prime(p);
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  if (k < 1 || k > p - 2) throw std::invalid_argument("requires 1 <= k <= p - 2");
  const auto modulus = static_cast<std::uint64_t>(p);
  return {stirling2_mod(n * (p - 1), p - k, modulus), factorial_mod(static_cast<std::uint64_t>(k - 1), modulus)};
}

bool shifted_row_vanishes(std::int64_t p, std::int64_t n, std::int64_t k) {
  require_odd_prime(p);
  if (n < 0) throw std::invalid_argument("requires n >= 0");
  if (k <= 1 || k >= p) throw std::invalid_argument("requires 1 < k < p");
  return stirling2_mod(p + n * (p - 1), k, static_cast<std::uint64_t>(p)) == 0;
}

}  // namespace stirling
