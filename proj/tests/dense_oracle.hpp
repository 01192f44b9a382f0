#pragma once

// Dense matrix oracle for small-n checks. Everything here is built straight
// from the 2x2 Pauli matrices with exact complex-integer entries and stays
// independent of the bit-mask implementation it is used to check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qwe/pauli.hpp"

namespace qwe::testing {

using CInt = std::complex<long long>;
using Matrix = std::vector<std::vector<CInt>>;

inline Matrix pauli_2x2(char letter) {
  const CInt i{0, 1};
  switch (letter) {
    case 'I': return {{1, 0}, {0, 1}};
    case 'X': return {{0, 1}, {1, 0}};
    case 'Y': return {{0, -i}, {i, 0}};
    case 'Z': return {{1, 0}, {0, -1}};
    default: throw std::runtime_error("bad letter");
  }
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
  Matrix out(ra * rb, std::vector<CInt>(ca * cb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix out(n, std::vector<CInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

inline Matrix scale(Matrix m, CInt c) {
  for (auto& row : m)
    for (auto& v : row) v *= c;
  return m;
}

inline CInt i_pow(int k) {
  const CInt table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

// Realizes the defining decomposition i^phase_exp * prod_j X^{a_j} Z^{b_j}.
// Note qubit 0 is the leftmost tensor factor but the lowest basis-index bit,
// so basis index bits are mirrored relative to the row-number convention of a
// plain Kronecker product; bit_reversed_index below converts.
inline Matrix dense_from_pauli(const PauliString& p) {
  Matrix acc = {{1}};
  for (int j = 0; j < p.n; ++j) {
    Matrix x = ((p.x_mask >> j) & 1u) ? pauli_2x2('X') : pauli_2x2('I');
    Matrix z = ((p.z_mask >> j) & 1u) ? pauli_2x2('Z') : pauli_2x2('I');
    acc = kron(acc, matmul(x, z));
  }
  return scale(acc, i_pow(p.phase_exp));
}

// Maps a basis index (bit j = qubit j) to the Kronecker row number
// (qubit 0 most significant).
inline std::size_t kron_row(std::uint64_t basis, int n) {
  std::size_t row = 0;
  for (int j = 0; j < n; ++j) row = (row << 1) | ((basis >> j) & 1u);
  return row;
}

inline PauliString random_pauli(std::mt19937_64& rng, int n, bool hermitian_only = false) {
  std::uint64_t limit = n == 64 ? ~0ull : (1ull << n) - 1;
  PauliString p;
  p.n = n;
  p.x_mask = rng() & limit;
  p.z_mask = rng() & limit;
  int n_y = std::popcount(p.x_mask & p.z_mask);
  if (hermitian_only) {
    p.phase_exp = static_cast<std::uint8_t>((n_y + 2 * (rng() & 1u)) & 3);
  } else {
    p.phase_exp = static_cast<std::uint8_t>(rng() & 3u);
  }
  return p;
}

}  // namespace qwe::testing
