#include "qwe/pauli.hpp"

#include <algorithm>
#include <bit>

namespace qwe {

namespace {

int popcount_parity(std::uint64_t v) { return std::popcount(v) & 1; }

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DimensionError("qubit count " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxQubits) + "]");
  }
}

void check_same_n(const PauliString& p, const PauliString& q, const char* op) {
  if (p.n != q.n) {
    throw DimensionError(std::string(op) + " on mismatched qubit counts " + std::to_string(p.n) +
                         " and " + std::to_string(q.n));
  }
}

}  // namespace

PauliString from_label(std::string_view label) {
  if (label.empty()) throw ParseError("empty Pauli label");
  std::size_t pos = 0;
  int sign_add = 0;
  if (label[0] == '+') {
    pos = 1;
  } else if (label[0] == 'i') {
    sign_add = 1;
    pos = 1;
  } else if (label[0] == '-') {
    if (label.size() > 1 && label[1] == 'i') {
      sign_add = 3;
      pos = 2;
    } else {
      sign_add = 2;
      pos = 1;
    }
  }
  if (pos >= label.size()) throw ParseError("Pauli label '" + std::string(label) + "' has no letters");
  std::size_t body = label.size() - pos;
  if (body > static_cast<std::size_t>(kMaxQubits)) {
    throw DimensionError("Pauli label longer than " + std::to_string(kMaxQubits) + " qubits");
  }
  PauliString p;
  p.n = static_cast<int>(body);
  int n_y = 0;
  for (std::size_t j = 0; j < body; ++j) {
    char c = label[pos + j];
    std::uint64_t bit = 1ull << j;
    switch (c) {
      case 'I': break;
      case 'X': p.x_mask |= bit; break;
      case 'Z': p.z_mask |= bit; break;
      case 'Y':
        p.x_mask |= bit;
        p.z_mask |= bit;
        ++n_y;
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                         std::to_string(pos + j + 1) + " of Pauli label");
    }
  }
  p.phase_exp = static_cast<std::uint8_t>((n_y + sign_add) & 3);
  return p;
}

std::string to_label(const PauliString& p) {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  std::string out = kPrefix[sign_exponent(p)];
  for (int j = 0; j < p.n; ++j) {
    bool x = (p.x_mask >> j) & 1u;
    bool z = (p.z_mask >> j) & 1u;
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

PauliString identity(int n) {
  check_qubit_count(n);
  return PauliString{n, 0, 0, 0};
}

WeightProfile weight_profile(const PauliString& p) {
  WeightProfile w;
  w.wt = std::popcount(p.x_mask | p.z_mask);
  w.wt_x = std::popcount(p.x_mask);
  w.wt_z = std::popcount(p.z_mask);
  w.n_y = std::popcount(p.x_mask & p.z_mask);
  w.n_x = std::popcount(p.x_mask & ~p.z_mask);
  w.n_z = std::popcount(p.z_mask & ~p.x_mask);
  return w;
}

bool is_symmetric(const PauliString& p) {
  return (std::popcount(p.x_mask & p.z_mask) & 1) == 0;
}

bool is_hermitian(const PauliString& p) {
  return ((p.phase_exp ^ std::popcount(p.x_mask & p.z_mask)) & 1) == 0;
}

int sign_exponent(const PauliString& p) {
  return (p.phase_exp - std::popcount(p.x_mask & p.z_mask)) & 3;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  check_same_n(p, q, "multiply");
  PauliString r;
  r.n = p.n;
  r.x_mask = p.x_mask ^ q.x_mask;
  r.z_mask = p.z_mask ^ q.z_mask;
  // Re-canonicalize Z^{b_p} X^{a_q} = (-1)^{b_p . a_q} X^{a_q} Z^{b_p}.
  int phase = p.phase_exp + q.phase_exp + 2 * popcount_parity(p.z_mask & q.x_mask);
  r.phase_exp = static_cast<std::uint8_t>(phase & 3);
  return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
  check_same_n(p, q, "commutes");
  return (popcount_parity(p.x_mask & q.z_mask) ^ popcount_parity(p.z_mask & q.x_mask)) == 0;
}

std::pair<std::uint64_t, int> apply_to_basis(const PauliString& p, std::uint64_t basis) {
  if (basis >> p.n) {
    throw DimensionError("basis index " + std::to_string(basis) + " outside 2^" +
                         std::to_string(p.n) + " states");
  }
  int phase = (p.phase_exp + 2 * popcount_parity(p.z_mask & basis)) & 3;
  return {basis ^ p.x_mask, phase};
}

PauliString permute_qubits(const PauliString& p, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != p.n) {
    throw DimensionError("permutation size does not match qubit count");
  }
  std::uint64_t seen = 0;
  PauliString r;
  r.n = p.n;
  r.phase_exp = p.phase_exp;
  for (int j = 0; j < p.n; ++j) {
    int t = perm[j];
    if (t < 0 || t >= p.n || ((seen >> t) & 1u)) {
      throw ValidationError("permutation is not a bijection on qubits");
    }
    seen |= 1ull << t;
    if ((p.x_mask >> j) & 1u) r.x_mask |= 1ull << t;
    if ((p.z_mask >> j) & 1u) r.z_mask |= 1ull << t;
  }
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int j = 1; j <= k; ++j) {
    r = r * static_cast<unsigned>(n - k + j) / static_cast<unsigned>(j);
    if (r > ~0ull) throw ArithmeticError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t weight_class_size(int n, int i) {
  if (i < 0 || i > n) {
    throw DimensionError("weight " + std::to_string(i) + " outside [0, " + std::to_string(n) + "]");
  }
  unsigned __int128 r = binomial(n, i);
  for (int j = 0; j < i; ++j) {
    r *= 3;
    if (r > ~0ull) throw ArithmeticError("weight class size overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<int> unrank_combination(int n, int i, std::uint64_t rank) {
  std::vector<int> positions;
  positions.reserve(i);
  int c = 0;
  for (int j = 0; j < i; ++j) {
    while (true) {
      std::uint64_t block = binomial(n - 1 - c, i - 1 - j);
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    positions.push_back(c++);
  }
  return positions;
}

WeightClassRange::WeightClassRange(int n, int i) : WeightClassRange(n, i, 0, binomial(n, i)) {}

WeightClassRange::WeightClassRange(int n, int i, std::uint64_t subset_begin,
                                   std::uint64_t subset_end)
    : n_(n), weight_(i), subset_begin_(subset_begin), subset_end_(subset_end),
      subset_count_(binomial(n, i)) {
  check_qubit_count(n);
  if (i < 0 || i > n) {
    throw DimensionError("weight " + std::to_string(i) + " outside [0, " + std::to_string(n) + "]");
  }
  if (subset_begin > subset_end || subset_end > subset_count_) {
    throw DimensionError("subset slice outside weight class");
  }
}

WeightClassRange::iterator WeightClassRange::begin() const {
  return iterator(n_, weight_, subset_begin_, subset_end_);
}

WeightClassRange::iterator::iterator(int n, int i, std::uint64_t subset_rank,
                                     std::uint64_t subset_end)
    : n_(n), weight_(i), subset_rank_(subset_rank), subset_end_(subset_end),
      done_(subset_rank >= subset_end), letters_(i, 0) {
  if (!done_) {
    positions_ = unrank_combination(n, i, subset_rank);
    rebuild();
  }
}

void WeightClassRange::iterator::rebuild() {
  current_.n = n_;
  current_.x_mask = 0;
  current_.z_mask = 0;
  int n_y = 0;
  for (int j = 0; j < weight_; ++j) {
    std::uint64_t bit = 1ull << positions_[j];
    switch (letters_[j]) {
      case 0: current_.x_mask |= bit; break;
      case 1:
        current_.x_mask |= bit;
        current_.z_mask |= bit;
        ++n_y;
        break;
      default: current_.z_mask |= bit; break;
    }
  }
  current_.phase_exp = static_cast<std::uint8_t>(n_y & 3);
}

WeightClassRange::iterator& WeightClassRange::iterator::operator++() {
  if (done_) return *this;
  // Base-3 increment, last support position least significant.
  int j = weight_ - 1;
  while (j >= 0 && letters_[j] == 2) letters_[j--] = 0;
  if (j >= 0) {
    ++letters_[j];
    rebuild();
    return *this;
  }
  // Letters exhausted: next subset in lexicographic order.
  if (++subset_rank_ >= subset_end_) {
    done_ = true;
    return *this;
  }
  int k = weight_ - 1;
  while (k > 0 && positions_[k] == n_ - (weight_ - k)) --k;
  ++positions_[k];
  for (int t = k + 1; t < weight_; ++t) positions_[t] = positions_[t - 1] + 1;
  rebuild();
  return *this;
}

}  // namespace qwe
