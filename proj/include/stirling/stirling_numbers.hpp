#pragma once

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <vector>

#include "stirling/numeric.hpp"

namespace stirling {

// Memoized triangles of S(m, n) and signed s(n, k).
//
// Rows are appended on demand; the capacity doubles whenever a request goes
// past it. Growth takes an exclusive lock, lookups a shared one, so a single
// table may be shared between threads.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t initial_cap = 16);

  StirlingTable(const StirlingTable&) = delete;
  StirlingTable& operator=(const StirlingTable&) = delete;

  // S(m, n); 0 outside 0 <= n <= m except S(0, 0) = 1.
  Integer second_kind(std::int64_t m, std::int64_t n) const;
  // s(n, k) with (z)_n = sum_k s(n, k) z^k.
  Integer first_kind_signed(std::int64_t n, std::int64_t k) const;
  // Row m of the second-kind triangle, entries n = 0..m.
  std::vector<Integer> second_kind_row(std::int64_t m) const;

  // Highest row index currently materialized.
  std::size_t cap() const;

 private:
  void ensure_rows(std::size_t m) const;

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<Integer>> second_;
  mutable std::vector<std::vector<Integer>> first_;
  mutable std::size_t cap_ = 0;
};

// Process-wide table used by the free functions below.
const StirlingTable& default_table();

Integer stirling2(std::int64_t m, std::int64_t n);

// (1/n!) sum_k C(n,k) (-1)^k (n-k)^m, evaluated directly; independent of the
// table. Throws InvariantViolation if the division by n! is inexact.
Integer stirling2_by_sum(std::int64_t m, std::int64_t n);

Integer stirling1_signed(std::int64_t n, std::int64_t k);

// n! S(m, n): number of surjections from an m-set onto an n-set.
Integer b_number(std::int64_t m, std::int64_t n);

// S(n+d, n) unrolled k steps down the recurrence:
//   n^(d-k+1) S(n+k-1, n) + sum_{j=0}^{d-k} n^j S(n-1+d-j, n-1)
// Requires n >= 2, d >= 1, 1 <= k <= d.
Integer stirling2_unrolled(std::int64_t n, std::int64_t d, std::int64_t k);

}  // namespace stirling
