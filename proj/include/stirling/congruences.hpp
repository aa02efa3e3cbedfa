#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "stirling/numeric.hpp"

namespace stirling {

struct ValuationBound {
  std::int64_t p = 0;
  std::int64_t bound = 0;
  std::int64_t actual = 0;
};

// Lower bound on nu_p(S(m, n)) for odd d = m - n > 0:
// nu_p(e(n)) - 1 when p = 2, nu_p(e(n)) otherwise. `actual` is the true value.
ValuationBound valuation_bound(std::int64_t p, std::int64_t m, std::int64_t n);

// e(n)/2 divides S(m, n) for every odd d > 0.
bool half_even_divides(std::int64_t m, std::int64_t n);

enum class OddDClass {
  PrimeExceptional,  // (m, n) = (3, 2), S = 3
  Composite,         // witness is a proper divisor
  Unit,              // n = 1: S(m, 1) = 1
};

std::string_view to_string(OddDClass c);

struct OddDPrimality {
  OddDClass kind = OddDClass::Composite;
  std::optional<Integer> witness;
};

// Primality of S(m, n) for odd d > 0. The witness (3 when n = 2, e(n)/2 when
// n > 2) is verified to be a proper divisor before it is returned.
OddDPrimality classify_primality_odd_d(std::int64_t m, std::int64_t n);

// S(m, n) mod `modulus` via the recurrence run entirely in Z/modulus.
// The modulus must lie in [1, 2^32).
std::uint64_t stirling2_mod(std::int64_t m, std::int64_t n, std::uint64_t modulus);

// B(n(p-1), p-1) == -1 (mod p). Requires p >= 2, n >= 1.
bool wilson_check(std::int64_t p, std::int64_t n);

struct WilsonReport {
  std::int64_t p = 0;
  std::vector<std::int64_t> checked_n;
  bool all_passed = true;
  std::optional<std::int64_t> first_failure;
};

// Runs wilson_check for n = 1..n_max, stopping at the first failure.
WilsonReport is_prime_wilson(std::int64_t p, std::int64_t n_max);

struct FactorialResidue {
  std::uint64_t residue = 0;   // S(n(p-1), p-k) mod p
  std::uint64_t expected = 0;  // (k-1)! mod p
};

// For an odd prime p, n >= 1 and 1 <= k <= p-2.
FactorialResidue wilson_factorial_residue(std::int64_t p, std::int64_t n, std::int64_t k);

// S(p + n(p-1), k) == 0 (mod p) for an odd prime p, n >= 0 and 1 < k < p.
bool shifted_row_vanishes(std::int64_t p, std::int64_t n, std::int64_t k);

}  // namespace stirling
