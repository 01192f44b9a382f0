#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwe/error.hpp"

namespace qwe {

// Masks live in single machine words.
inline constexpr int kMaxQubits = 63;

// An n-qubit Pauli operator i^phase_exp * X^{x_mask} Z^{z_mask}.
//
// Bit j of each mask belongs to qubit j; qubit 0 is the leftmost letter of a
// label. The letter map is I=(0,0), X=(1,0), Z=(0,1), Y=(1,1) with Y = i*XZ,
// so an unsigned letter string has phase_exp = n_Y mod 4.
struct PauliString {
  int n = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  std::uint8_t phase_exp = 0;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

// The six weight statistics of a Pauli string.
struct WeightProfile {
  int wt = 0;    // letters in {X,Y,Z}
  int wt_x = 0;  // letters in {X,Y}
  int wt_z = 0;  // letters in {Z,Y}
  int n_x = 0;
  int n_y = 0;
  int n_z = 0;

  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

// Label grammar: sign? letter{n} with sign in {"+","-","i","-i"} and letters
// in {I,X,Y,Z}. Parse errors name the offending 1-based position.
PauliString from_label(std::string_view label);

// Canonical rendering; a positive sign is omitted, so from_label(to_label(p))
// round-trips for every p.
std::string to_label(const PauliString& p);

PauliString identity(int n);

WeightProfile weight_profile(const PauliString& p);

// True iff the dense matrix of p equals its transpose (n_Y even).
bool is_symmetric(const PauliString& p);

// True iff phase_exp matches the letter phase mod 2, i.e. the operator is
// +/- an unsigned letter string.
bool is_hermitian(const PauliString& p);

// (phase_exp - n_Y) mod 4: 0,1,2,3 <-> sign prefix +,i,-,-i.
int sign_exponent(const PauliString& p);

// Phase-exact matrix product p*q.
PauliString multiply(const PauliString& p, const PauliString& q);

// True iff the symplectic form x_p.z_q + z_p.x_q vanishes mod 2.
bool commutes(const PauliString& p, const PauliString& q);

// p|x> = i^phase |x ^ x_mask>; returns (new basis index, phase exponent mod 4).
std::pair<std::uint64_t, int> apply_to_basis(const PauliString& p, std::uint64_t basis);

// Relabels qubits: qubit j of the input becomes qubit perm[j] of the output.
PauliString permute_qubits(const PauliString& p, const std::vector<int>& perm);

// Checked C(n,k).
std::uint64_t binomial(int n, int k);

// C(n,i) * 3^i, the size of a weight class; checked.
std::uint64_t weight_class_size(int n, int i);

// The rank-th size-i subset of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(int n, int i, std::uint64_t rank);

// Iterable over the unsigned weight-i Pauli strings on n qubits, in a fixed
// deterministic order: support subsets lexicographically, then letters in
// X < Y < Z order per position (first support position most significant).
// Each element carries the phase of its canonical letter form. A range can be
// restricted to a contiguous slice of subset ranks for parallel partitioning.
class WeightClassRange {
 public:
  WeightClassRange(int n, int i);
  WeightClassRange(int n, int i, std::uint64_t subset_begin, std::uint64_t subset_end);

  int n() const { return n_; }
  int weight() const { return weight_; }
  std::uint64_t subset_count() const { return subset_count_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PauliString;
    using difference_type = std::ptrdiff_t;
    using pointer = const PauliString*;
    using reference = const PauliString&;

    reference operator*() const { return current_; }
    const PauliString* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ != b.done_) return false;
      if (a.done_) return true;
      return a.subset_rank_ == b.subset_rank_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

   private:
    friend class WeightClassRange;
    iterator() : done_(true) {}
    iterator(int n, int i, std::uint64_t subset_rank, std::uint64_t subset_end);
    void rebuild();

    int n_ = 0;
    int weight_ = 0;
    std::uint64_t subset_rank_ = 0;
    std::uint64_t subset_end_ = 0;
    bool done_ = true;
    std::vector<int> positions_;
    std::vector<std::uint8_t> letters_;  // 0,1,2 -> X,Y,Z
    PauliString current_;
  };

  iterator begin() const;
  iterator end() const { return iterator(); }

 private:
  int n_;
  int weight_;
  std::uint64_t subset_begin_;
  std::uint64_t subset_end_;
  std::uint64_t subset_count_;
};

}  // namespace qwe
