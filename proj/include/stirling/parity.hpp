#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace stirling {

// Square 0/1 matrix stored as packed 64-bit row words.
class ParityMatrix {
 public:
  ParityMatrix() = default;
  explicit ParityMatrix(std::size_t size);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] int at(std::size_t i, std::size_t j) const {
    return static_cast<int>((row_words(i)[j / 64] >> (j % 64)) & 1U);
  }
  void set(std::size_t i, std::size_t j, int value);

  [[nodiscard]] const std::uint64_t* row_words(std::size_t i) const { return words_.data() + i * stride_; }
  [[nodiscard]] std::uint64_t* row_words(std::size_t i) { return words_.data() + i * stride_; }
  [[nodiscard]] std::size_t stride() const { return stride_; }

  [[nodiscard]] ParityMatrix transposed() const;

  friend bool operator==(const ParityMatrix&, const ParityMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

// S(m, n) mod 2 for even d = m - n >= 0 without computing S(m, n): the
// number is even iff floor((n-1)/4) and d/2 share a set bit.
// Rejects odd or negative d and n < 1.
int parity_even_d(std::int64_t m, std::int64_t n);

// Parity of S(ell(n) + d, ell(n)) read from the exact table.
int ell_reduce_parity(std::int64_t m, std::int64_t n);

// sum_{j=0}^{d/2} S(ell(n-4) + d - 2j, ell(n-4)) mod 2, which equals the parity
// of S(n+d, n). Requires n > 4 and even d >= 0.
int parity_recurrence_check(std::int64_t n, std::int64_t d);

// P_N = [p_ij], 0 <= i, j <= N, with p_0j = p_i0 = 1 and
// p_ij = p_(i-1)j + p_i(j-1) mod 2. Built row by row from the recurrence.
ParityMatrix build_tapestry(std::size_t N);

// Same matrix from the closed form p_ij = [i AND j == 0], split across
// `threads` workers (0 picks the hardware concurrency).
ParityMatrix build_tapestry_kummer(std::size_t N, unsigned threads = 0);

// Minimal period of row i (equivalently column i): 2^(msb(i) + 1), and 1 for
// the constant row i = 0.
std::uint64_t row_period(std::uint64_t i);
std::uint64_t column_period(std::uint64_t j);

enum class ReductionOrder { RowFirst, ColumnFirst };

struct IndexPair {
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// Shrinks (i, j) by the row and column periods while preserving p_ij.
IndexPair reduced_indices(std::uint64_t i, std::uint64_t j, ReductionOrder order);

// One full period of row i.
struct ParityFrequency {
  std::uint64_t row_index = 0;
  std::vector<std::uint8_t> bits;
};

ParityFrequency parity_frequency(std::uint64_t i);

// Compares two frequencies as periodic sequences (both extended to the longer
// period, which is a multiple of the shorter one).
bool same_frequency(const ParityFrequency& a, const ParityFrequency& b);

// Determinant over GF(2).
int det_mod2(const ParityMatrix& matrix);

// Plain PBM (P1): "P1", "<width> <height>", then one line per row i of
// space-separated p_ij.
void write_pbm(std::ostream& os, const ParityMatrix& matrix);

}  // namespace stirling
