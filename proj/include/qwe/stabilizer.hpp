#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qwe/codespace.hpp"
#include "qwe/pauli.hpp"

namespace qwe {

// n - k commuting, independent, Hermitian signed generators. Construct via
// validate_group.
struct StabilizerGroup {
  int n = 0;
  int k = 0;
  std::vector<PauliString> generators;
};

// Checks Hermitian signs, pairwise commutation, and symplectic independence.
// A dependent subset multiplying to -I is reported as "-I in group".
StabilizerGroup validate_group(std::vector<PauliString> generators);

// Visits all 2^{n-k} signed group elements, identity first, in Gray-code
// subset order with exact sign tracking.
template <typename Fn>
void for_each_group_element(const StabilizerGroup& s, Fn&& fn) {
  PauliString current = identity(s.n);
  fn(static_cast<const PauliString&>(current));
  std::uint64_t subsets = 1ull << s.generators.size();
  for (std::uint64_t t = 1; t < subsets; ++t) {
    current = multiply(current, s.generators[std::countr_zero(t)]);
    fn(static_cast<const PauliString&>(current));
  }
}

std::vector<PauliString> enumerate_group(const StabilizerGroup& s);

// Unsigned basis of the centralizer N(S) (symplectic null space), size n + k.
std::vector<PauliString> centralizer_basis(const StabilizerGroup& s);

// Visits all 2^{n+k} unsigned centralizer elements (canonical letter phases),
// identity first, in Gray-code subset order over centralizer_basis.
template <typename Fn>
void for_each_centralizer_element(const StabilizerGroup& s, Fn&& fn) {
  std::vector<PauliString> basis = centralizer_basis(s);
  PauliString current = identity(s.n);
  fn(static_cast<const PauliString&>(current));
  std::uint64_t subsets = 1ull << basis.size();
  for (std::uint64_t t = 1; t < subsets; ++t) {
    const PauliString& b = basis[std::countr_zero(t)];
    current.x_mask ^= b.x_mask;
    current.z_mask ^= b.z_mask;
    current.phase_exp =
        static_cast<std::uint8_t>(std::popcount(current.x_mask & current.z_mask) & 3);
    fn(static_cast<const PauliString&>(current));
  }
}

std::vector<PauliString> enumerate_centralizer(const StabilizerGroup& s);

// Canonical logical operators. Logical Z_j are the classes that fix the
// projection of the canonical seed basis state, signed so that codeword 0 is
// their +1 eigenvector; logical X_j are the symplectic partners, preferring
// representatives with an even Y-count and breaking ties by the smaller
// stabilizer-reduced (x_mask, z_mask).
struct LogicalBasis {
  std::vector<PauliString> z_ops;
  std::vector<PauliString> x_ops;
};

LogicalBasis canonical_logical_basis(const StabilizerGroup& s);

// Exact-backend code space of the 2^k codewords |b> = X_ops^b |0...0>, where
// |0...0> is the normalized projection of the canonical seed. Codeword labels
// follow the logical-Z eigenvalues, so logical X_j toggles index bit j.
CodeSpace synthesize_codewords(const StabilizerGroup& s);
CodeSpace synthesize_codewords(const StabilizerGroup& s, const LogicalBasis& basis);

// True iff every generator has an even Y-count.
bool is_real_code(const StabilizerGroup& s);

// True iff n is odd and every generator has even X-, Y-, and Z-letter counts.
bool all_even_check(const StabilizerGroup& s);

enum class TransversalVerdict { exactly_transversal, swapped, not_transversal };
enum class LogicalLabel {
  outside_centralizer,
  in_stabilizer,
  logical_x,
  logical_y,
  logical_z,
  undetermined,
};

const char* to_string(TransversalVerdict v);
const char* to_string(LogicalLabel l);

struct TransversalityReport {
  bool x_in_centralizer = false;
  bool z_in_centralizer = false;
  bool x_in_group = false;
  bool z_in_group = false;
  bool n_odd = false;
  LogicalLabel x_implements = LogicalLabel::undetermined;
  LogicalLabel z_implements = LogicalLabel::undetermined;
  TransversalVerdict verdict = TransversalVerdict::not_transversal;
};

// Classifies X^n and Z^n against the canonical logical pair. Labeling the
// logical action needs k = 1; for even n the verdict is not_transversal
// without labels regardless of k.
TransversalityReport transversality_report(const StabilizerGroup& s);

// Conjugates every generator by the transversal Hadamard: masks swap and the
// sign flips by (-1)^{n_Y}. The result is re-validated.
StabilizerGroup hadamard_conjugate(const StabilizerGroup& s);

// Stabilizer file grammar: '#' starts a comment; each non-blank line is one
// generator label; all lines must infer the same n; k = n - line count.
StabilizerGroup parse_stabilizer_stream(std::istream& in);

}  // namespace qwe
