#include <bit>
#include <sstream>

#include <doctest.h>

#include "oracles.hpp"
#include "stirling/parity.hpp"
#include "stirling/stirling_numbers.hpp"

using namespace stirling;

namespace {

int binomial_parity(int i, int j) { return binomial(i + j, j).is_odd() ? 1 : 0; }

}  // namespace

TEST_CASE("parity for even d") {
  CHECK(parity_even_d(7, 5) == 0);
  CHECK(stirling2(7, 5) == Integer(140));
  CHECK(parity_even_d(6, 4) == 1);
  for (int n = 1; n <= 20; ++n) CHECK(parity_even_d(n, n) == 1);
  CHECK_THROWS_AS(parity_even_d(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(parity_even_d(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(parity_even_d(2, 0), std::invalid_argument);
}

TEST_CASE("parity rule agrees with the exact table") {
  for (int n = 1; n <= 40; ++n) {
    for (int d = 0; d <= 40; d += 2) {
      const int exact = stirling2(n + d, n).is_odd() ? 1 : 0;
      CHECK(parity_even_d(n + d, n) == exact);
      CHECK(ell_reduce_parity(n + d, n) == exact);
    }
  }
}

TEST_CASE("ell reduction") {
  CHECK(ell_reduce_parity(10, 8) == 0);
  CHECK(ell_reduce_parity(6, 2) == 1);
  CHECK(ell_reduce_parity(8, 6) == 0);
}

TEST_CASE("parity recurrence") {
  CHECK(parity_recurrence_check(5, 2) == 0);
  CHECK(parity_recurrence_check(9, 2) == parity_even_d(11, 9));
  CHECK(parity_recurrence_check(7, 0) == 1);
  for (int n = 5; n <= 30; ++n) {
    for (int d = 2; d <= 20; d += 2) CHECK(parity_recurrence_check(n, d) == parity_even_d(n + d, n));
  }
  CHECK_THROWS_AS(parity_recurrence_check(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(parity_recurrence_check(6, 3), std::invalid_argument);
}

TEST_CASE("tapestry of order 4") {
  const int expected[5][5] = {
      {1, 1, 1, 1, 1}, {1, 0, 1, 0, 1}, {1, 1, 0, 0, 1}, {1, 0, 0, 0, 1}, {1, 1, 1, 1, 0},
  };
  const ParityMatrix p = build_tapestry(4);
  REQUIRE(p.size() == 5);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) CHECK(p.at(i, j) == expected[i][j]);
  }
  CHECK(build_tapestry(0).size() == 1);
  CHECK(build_tapestry(0).at(0, 0) == 1);
}

TEST_CASE("tapestry entries are binomial parities") {
  const ParityMatrix p = build_tapestry(64);
  for (int i = 0; i <= 64; ++i) {
    for (int j = 0; j <= 64; ++j) {
      CHECK(p.at(i, j) == ((i & j) == 0 ? 1 : 0));
      CHECK(p.at(i, j) == binomial_parity(i, j));
      if (i >= 1 && j >= 1) CHECK(p.at(i, j) == (p.at(i - 1, j) ^ p.at(i, j - 1)));
    }
  }
}

TEST_CASE("tapestry entries match S(ell + d, ell) parity") {
  const ParityMatrix p = build_tapestry(10);
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const int ell_n = 1 + 4 * i;
      CHECK(p.at(i, j) == (stirling2(ell_n + 2 * j, ell_n).is_odd() ? 1 : 0));
    }
  }
}

TEST_CASE("recurrence and closed-form builders agree") {
  for (std::size_t n : {0, 1, 4, 62, 63, 64, 65, 100, 127, 128, 300}) {
    const ParityMatrix a = build_tapestry(n);
    CHECK(a == build_tapestry_kummer(n, 1));
    CHECK(a == build_tapestry_kummer(n, 4));
    CHECK(a == build_tapestry_kummer(n));
  }
}

TEST_CASE("tapestry is symmetric") {
  for (std::size_t n : {0, 1, 7, 64, 100, 128}) {
    const ParityMatrix p = build_tapestry(n);
    CHECK(p == p.transposed());
  }
}

TEST_CASE("periods") {
  CHECK(row_period(1) == 2);
  CHECK(row_period(6) == 8);
  CHECK(row_period(0) == 1);
  CHECK(column_period(1) == 2);
  CHECK(column_period(4) == 8);
  CHECK(column_period(0) == 1);
  for (std::uint64_t i = 0; i <= 32; ++i) {
    const std::uint64_t t = row_period(i);
    std::vector<int> row;
    for (std::uint64_t j = 0; j < 4 * t; ++j) row.push_back((i & j) == 0 ? 1 : 0);
    CHECK(oracle::minimal_period(row) == t);
  }
}

TEST_CASE("index reduction preserves entries") {
  CHECK(reduced_indices(1, 7, ReductionOrder::RowFirst) == IndexPair{1, 1});
  CHECK(reduced_indices(0, 13, ReductionOrder::RowFirst) == IndexPair{0, 0});
  CHECK(reduced_indices(0, 13, ReductionOrder::ColumnFirst) == IndexPair{0, 0});
  const ParityMatrix p = build_tapestry(64);
  const IndexPair r = reduced_indices(5, 9, ReductionOrder::ColumnFirst);
  CHECK(p.at(r.i, r.j) == p.at(5, 9));
  for (std::uint64_t i = 0; i <= 64; ++i) {
    for (std::uint64_t j = 0; j <= 64; ++j) {
      for (auto order : {ReductionOrder::RowFirst, ReductionOrder::ColumnFirst}) {
        const IndexPair red = reduced_indices(i, j, order);
        CHECK(red.i <= i);
        CHECK(red.j <= j);
        CHECK(p.at(red.i, red.j) == p.at(i, j));
      }
    }
  }
}

TEST_CASE("parity frequencies") {
  CHECK(parity_frequency(1).bits == std::vector<std::uint8_t>{1, 0});
  CHECK(parity_frequency(0).bits == std::vector<std::uint8_t>{1});
  CHECK(parity_frequency(2).bits == std::vector<std::uint8_t>{1, 1, 0, 0});
  for (std::uint64_t i = 0; i <= 64; ++i) {
    const auto f = parity_frequency(i);
    CHECK(f.bits.front() == 1);
    CHECK(std::has_single_bit(f.bits.size()));
    CHECK(same_frequency(f, f));
    for (std::uint64_t k = i + 1; k <= 64; ++k) CHECK_FALSE(same_frequency(f, parity_frequency(k)));
  }
}

TEST_CASE("determinant mod 2") {
  CHECK(det_mod2(build_tapestry(4)) == 1);
  CHECK(det_mod2(build_tapestry(0)) == 1);
  for (std::size_t n = 0; n <= 64; ++n) CHECK(det_mod2(build_tapestry(n)) == 1);

  ParityMatrix singular(3);
  singular.set(0, 0, 1);
  singular.set(1, 0, 1);
  CHECK(det_mod2(singular) == 0);

  // Cross-check against an exact rational determinant on small 0/1 matrices.
  for (std::size_t n = 1; n <= 12; ++n) {
    const ParityMatrix p = build_tapestry(n);
    std::vector<std::vector<Rational>> a(p.size(), std::vector<Rational>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) a[i][j] = Rational(p.at(i, j));
    const Integer exact = oracle::determinant(a).to_integer();
    CHECK(det_mod2(p) == (exact.is_odd() ? 1 : 0));
  }
}

TEST_CASE("PBM export") {
  std::ostringstream os;
  write_pbm(os, build_tapestry(2));
  CHECK(os.str() == "P1\n3 3\n1 1 1\n1 0 1\n1 1 0\n");
}
