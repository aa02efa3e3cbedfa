#include "stirling/stirling_numbers.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace stirling {

namespace {

void require_non_negative(std::int64_t v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
}

}  // namespace

StirlingTable::StirlingTable(std::size_t initial_cap) {
  second_.push_back({Integer(1)});
  first_.push_back({Integer(1)});
  ensure_rows(initial_cap);
}

void StirlingTable::ensure_rows(std::size_t m) const {
  {
    std::shared_lock lock(mutex_);
    if (m < second_.size()) return;
  }
  std::unique_lock lock(mutex_);
  if (m < second_.size()) return;
  std::size_t target = std::max<std::size_t>(cap_, 1);
  while (target < m) target *= 2;
  second_.reserve(target + 1);
  first_.reserve(target + 1);
  for (std::size_t row = second_.size(); row <= target; ++row) {
    const auto& prev2 = second_[row - 1];
    const auto& prev1 = first_[row - 1];
    std::vector<Integer> next2(row + 1);
    std::vector<Integer> next1(row + 1);
    const Integer r_minus_1(static_cast<std::int64_t>(row - 1));
    for (std::size_t n = 1; n <= row; ++n) {
      // S(m, n) = n S(m-1, n) + S(m-1, n-1)
      next2[n] = prev2[n - 1];
      if (n < row) next2[n] += Integer(static_cast<std::int64_t>(n)) * prev2[n];
      // s(m, k) = s(m-1, k-1) - (m-1) s(m-1, k)
      next1[n] = prev1[n - 1];
      if (n < row) next1[n] -= r_minus_1 * prev1[n];
    }
    second_.push_back(std::move(next2));
    first_.push_back(std::move(next1));
  }
  cap_ = target;
}

Integer StirlingTable::second_kind(std::int64_t m, std::int64_t n) const {
  require_non_negative(m, "m");
  require_non_negative(n, "n");
  if (n > m) return Integer(0);
  ensure_rows(static_cast<std::size_t>(m));
  std::shared_lock lock(mutex_);
  return second_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

Integer StirlingTable::first_kind_signed(std::int64_t n, std::int64_t k) const {
  require_non_negative(n, "n");
  require_non_negative(k, "k");
  if (k > n) return Integer(0);
  ensure_rows(static_cast<std::size_t>(n));
  std::shared_lock lock(mutex_);
  return first_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<Integer> StirlingTable::second_kind_row(std::int64_t m) const {
  require_non_negative(m, "m");
  ensure_rows(static_cast<std::size_t>(m));
  std::shared_lock lock(mutex_);
  return second_[static_cast<std::size_t>(m)];
}

std::size_t StirlingTable::cap() const {
  std::shared_lock lock(mutex_);
  return second_.size() - 1;
}

const StirlingTable& default_table() {
  static const StirlingTable table(64);
  return table;
}

Integer stirling2(std::int64_t m, std::int64_t n) { return default_table().second_kind(m, n); }

Integer stirling2_by_sum(std::int64_t m, std::int64_t n) {
  require_non_negative(m, "m");
  require_non_negative(n, "n");
  Integer sum(0);
  for (std::int64_t k = 0; k <= n; ++k) {
    Integer term = binomial(n, k) * pow(Integer(n - k), static_cast<std::uint64_t>(m));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum.divide_exact(factorial(static_cast<std::uint64_t>(n)));
}

Integer stirling1_signed(std::int64_t n, std::int64_t k) { return default_table().first_kind_signed(n, k); }

Integer b_number(std::int64_t m, std::int64_t n) {
  require_non_negative(n, "n");
  return factorial(static_cast<std::uint64_t>(n)) * stirling2(m, n);
}

Integer stirling2_unrolled(std::int64_t n, std::int64_t d, std::int64_t k) {
  if (n < 2) throw std::invalid_argument("unrolled recurrence requires n >= 2");
  if (d < 1) throw std::invalid_argument("unrolled recurrence requires d >= 1");
  if (k < 1 || k > d) throw std::invalid_argument("unrolled recurrence requires 1 <= k <= d");
  const Integer base(n);
  Integer total = pow(base, static_cast<std::uint64_t>(d - k + 1)) * stirling2(n + k - 1, n);
  for (std::int64_t j = 0; j <= d - k; ++j) {
    total += pow(base, static_cast<std::uint64_t>(j)) * stirling2(n - 1 + (d - j), n - 1);
  }
  return total;
}

}  // namespace stirling
