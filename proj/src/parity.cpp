#include "stirling/parity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "stirling/numeric.hpp"
#include "stirling/stirling_numbers.hpp"

namespace stirling {

namespace {

void require_even_d(std::int64_t d) {
  if (d < 0 || d % 2 != 0) throw std::invalid_argument("parity rule requires even d = m - n >= 0");
}

std::uint64_t tail_mask(std::size_t size) {
  const std::size_t used = size % 64;
  return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
}

// Inclusive prefix XOR across the bits of a word.
std::uint64_t prefix_xor(std::uint64_t x) {
  x ^= x << 1;
  x ^= x << 2;
  x ^= x << 4;
  x ^= x << 8;
  x ^= x << 16;
  x ^= x << 32;
  return x;
}

// kDisjoint[l] has bit b set iff (l AND b) == 0, for l, b < 64.
constexpr std::array<std::uint64_t, 64> make_disjoint_masks() {
  std::array<std::uint64_t, 64> masks{};
  for (std::uint64_t l = 0; l < 64; ++l) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      if ((l & b) == 0) masks[l] |= std::uint64_t{1} << b;
    }
  }
  return masks;
}

constexpr auto kDisjoint = make_disjoint_masks();

}  // namespace

ParityMatrix::ParityMatrix(std::size_t size)
    : size_(size), stride_((size + 63) / 64), words_(size * ((size + 63) / 64), 0) {}

void ParityMatrix::set(std::size_t i, std::size_t j, int value) {
  if (i >= size_ || j >= size_) throw std::out_of_range("parity matrix index out of range");
  std::uint64_t& word = row_words(i)[j / 64];
  const std::uint64_t mask = std::uint64_t{1} << (j % 64);
  word = value ? (word | mask) : (word & ~mask);
}

ParityMatrix ParityMatrix::transposed() const {
  ParityMatrix out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (at(i, j)) out.set(j, i, 1);
    }
  }
  return out;
}

int parity_even_d(std::int64_t m, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("parity rule requires n >= 1");
  const std::int64_t d = m - n;
  require_even_d(d);
  const auto row = static_cast<std::uint64_t>((n - 1) / 4);
  const auto col = static_cast<std::uint64_t>(d / 2);
  return (row & col) == 0 ? 1 : 0;
}

int ell_reduce_parity(std::int64_t m, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("parity reduction requires n >= 1");
  const std::int64_t d = m - n;
  require_even_d(d);
  const std::int64_t base = ell(n);
  return stirling2(base + d, base).is_odd() ? 1 : 0;
}

int parity_recurrence_check(std::int64_t n, std::int64_t d) {
  if (n <= 4) throw std::invalid_argument("parity recurrence requires n > 4");
  require_even_d(d);
  const std::int64_t base = ell(n - 4);
  int acc = 0;
  for (std::int64_t j = 0; j <= d / 2; ++j) {
    acc ^= stirling2(base + (d - 2 * j), base).is_odd() ? 1 : 0;
  }
  return acc;
}

ParityMatrix build_tapestry(std::size_t N) {
  ParityMatrix out(N + 1);
  const std::size_t stride = out.stride();
  const std::uint64_t last = tail_mask(out.size());
  std::uint64_t* first = out.row_words(0);
  std::fill(first, first + stride, ~std::uint64_t{0});
  first[stride - 1] &= last;
  // p_ij = sum_{k<=j} p_(i-1)k mod 2: each row is the prefix XOR of the one above.
  for (std::size_t i = 1; i <= N; ++i) {
    const std::uint64_t* prev = out.row_words(i - 1);
    std::uint64_t* cur = out.row_words(i);
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < stride; ++w) {
      std::uint64_t x = prefix_xor(prev[w]);
      if (carry) x = ~x;
      cur[w] = x;
      carry = x >> 63;
    }
    cur[stride - 1] &= last;
  }
  return out;
}

ParityMatrix build_tapestry_kummer(std::size_t N, unsigned threads) {
  ParityMatrix out(N + 1);
  const std::size_t size = out.size();
  const std::size_t stride = out.stride();
  const std::uint64_t last = tail_mask(size);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, size));

  auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::uint64_t* row = out.row_words(i);
      const std::uint64_t low = kDisjoint[i % 64];
      for (std::size_t w = 0; w < stride; ++w) {
        row[w] = (i & (w * 64)) == 0 ? low : 0;
      }
      row[stride - 1] &= last;
    }
  };

  if (threads <= 1) {
    fill_rows(0, size);
    return out;
  }
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t chunk = (size + threads - 1) / threads;
    for (std::size_t begin = 0; begin < size; begin += chunk) {
      workers.emplace_back(fill_rows, begin, std::min(size, begin + chunk));
    }
  }
  return out;
}

std::uint64_t row_period(std::uint64_t i) {
  if (i == 0) return 1;
  return std::uint64_t{1} << std::bit_width(i);
}

std::uint64_t column_period(std::uint64_t j) { return row_period(j); }

IndexPair reduced_indices(std::uint64_t i, std::uint64_t j, ReductionOrder order) {
  if (order == ReductionOrder::RowFirst) {
    const std::uint64_t j1 = j % row_period(i);
    return {i % column_period(j1), j1};
  }
  const std::uint64_t i2 = i % column_period(j);
  return {i2, j % row_period(i2)};
}

ParityFrequency parity_frequency(std::uint64_t i) {
  ParityFrequency out;
  out.row_index = i;
  const std::uint64_t period = row_period(i);
  out.bits.resize(period);
  for (std::uint64_t j = 0; j < period; ++j) out.bits[j] = (i & j) == 0 ? 1 : 0;
  return out;
}

bool same_frequency(const ParityFrequency& a, const ParityFrequency& b) {
  const std::size_t len = std::max(a.bits.size(), b.bits.size());
  for (std::size_t j = 0; j < len; ++j) {
    if (a.bits[j % a.bits.size()] != b.bits[j % b.bits.size()]) return false;
  }
  return true;
}

int det_mod2(const ParityMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return 1;
  const std::size_t stride = matrix.stride();
  std::vector<std::vector<std::uint64_t>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].assign(matrix.row_words(i), matrix.row_words(i) + stride);

  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    std::size_t pivot = col;
    while (pivot < n && (rows[pivot][w] & mask) == 0) ++pivot;
    if (pivot == n) return 0;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][w] & mask) {
        for (std::size_t k = w; k < stride; ++k) rows[r][k] ^= rows[col][k];
      }
    }
  }
  return 1;
}

void write_pbm(std::ostream& os, const ParityMatrix& matrix) {
  const std::size_t n = matrix.size();
  os << "P1\n" << n << ' ' << n << '\n';
  std::string line;
  line.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    line.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j) line += ' ';
      line += matrix.at(i, j) ? '1' : '0';
    }
    line += '\n';
    os << line;
  }
}

}  // namespace stirling
