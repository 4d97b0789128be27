// Exact matrix rank over Q (fraction-free Bareiss elimination on
// arbitrary-precision integers) and over F_p (modular elimination).
// No floating point is used anywhere.
#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmtop/core.hpp"

namespace cmtop {

using Matrix = std::vector<std::vector<std::int64_t>>;  // row-major

// Rank over Q equals rank over Z; Bareiss keeps every intermediate entry an
// exact integer (a minor of the input), so no rational arithmetic is needed.
inline int rank_char0(const Matrix& input) {
  using boost::multiprecision::cpp_int;
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = input[i][j];

  cpp_int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

inline int rank_mod_p(const Matrix& input, std::uint64_t p) {
  const std::size_t rows = input.size();
  const std::size_t cols = rows ? input[0].size() : 0;
  if (rows == 0 || cols == 0) return 0;

  const std::int64_t ip = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t v = input[i][j] % ip;
      m[i][j] = v < 0 ? v + ip : v;
    }

  auto inv_mod = [ip](std::int64_t a) {
    // Fermat: p prime, a != 0 mod p.
    std::int64_t result = 1, base = a % ip, e = ip - 2;
    while (e > 0) {
      if (e & 1) result = (__int128)result * base % ip;
      base = (__int128)base * base % ip;
      e >>= 1;
    }
    return result;
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const std::int64_t piv_inv = inv_mod(m[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t f = (__int128)m[i][c] * piv_inv % ip;
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] - (__int128)f * m[r][j]) % ip;
        if (m[i][j] < 0) m[i][j] += ip;
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline int matrix_rank(const Matrix& m, FieldSpec k) {
  return k.characteristic == 0 ? rank_char0(m) : rank_mod_p(m, k.characteristic);
}

}  // namespace cmtop
