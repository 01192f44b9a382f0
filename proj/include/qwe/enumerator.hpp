#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwe/codespace.hpp"
#include "qwe/rational.hpp"
#include "qwe/stabilizer.hpp"

namespace qwe {

// Enumerator entry: exact rational or floating, tagged by backend.
class Scalar {
 public:
  Scalar() = default;
  static Scalar exact(Rational value) {
    Scalar s;
    s.backend_ = Backend::exact;
    s.rat_ = value;
    return s;
  }
  static Scalar floating(double value) {
    Scalar s;
    s.backend_ = Backend::floating;
    s.flt_ = value;
    return s;
  }

  Backend backend() const { return backend_; }
  const Rational& rat() const;
  double flt() const;
  double approx() const { return backend_ == Backend::exact ? rat_.to_double() : flt_; }

  // Exact rationals render in lowest terms ("110/3", integers without "/1");
  // floating values render as shortest round-tripping decimals.
  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.backend_ != b.backend_) return false;
    return a.backend_ == Backend::exact ? a.rat_ == b.rat_ : a.flt_ == b.flt_;
  }

 private:
  Backend backend_ = Backend::exact;
  Rational rat_{0};
  double flt_ = 0.0;
};

// The two coefficient vectors A and B, length n + 1.
struct EnumeratorPair {
  int n = 0;
  Backend backend = Backend::exact;
  std::vector<Scalar> a;
  std::vector<Scalar> b;

  // One line per weight: "i A_i B_i".
  std::string render_lines() const;

  // Checks A_0 = B_0 = 1, nonnegativity, and B >= A entrywise (to tolerance
  // on the floating backend); throws ValidationError otherwise.
  void validate() const;

  friend bool operator==(const EnumeratorPair&, const EnumeratorPair&) = default;
};

// Inverse of render_lines; the backend tag picks the number grammar.
EnumeratorPair parse_enumerator_lines(const std::string& text, Backend backend);

struct BruteForceOptions {
  int threads = 0;          // 0 = hardware concurrency
  bool allow_large = false; // lifts the default n <= 11 cap
};

inline constexpr int kBruteForceDefaultCap = 11;

// Definition-level enumerators: A_i from (sum_a <a|E|a>)^2 / K^2 and B_i from
// sum_ab |<a|E|b>|^2 / K over the weight-i classes. The accumulation is
// data-parallel over a fixed chunk grid per weight class and merged in chunk
// order, so results do not depend on the worker count.
EnumeratorPair brute_force_enumerators(const CodeSpace& space,
                                       const BruteForceOptions& options = {});

// Group-counting fast path: A from the group weight histogram, B from the
// centralizer weight histogram.
EnumeratorPair stabilizer_enumerators(const StabilizerGroup& s);

// Smallest i with A_i != B_i (floating: |A-B| > 1e-9 * max(1, B)); empty when
// the vectors agree everywhere.
std::optional<int> distance(const EnumeratorPair& pair);

// True iff X^n (resp. Z^n) acts as the logical flip (resp. grading) on the
// codeword labels exactly.
bool x_transversal_on_labels(const CodeSpace& space);
bool z_transversal_on_labels(const CodeSpace& space);

// A_i as the restricted sum over even-X-weight, even-Z-weight strings of
// |<0|E|0>|^2. Requires K = 2, a real space, and X and Z transversal on the
// labels; refuses otherwise.
std::vector<Scalar> restricted_a_coefficients(const CodeSpace& space);

// C_i sums |<0|E|0>|^2 over even-X/odd-Z strings, D_i sums |<0|E|1>|^2 over
// odd-X strings; B = A + C + D. Requires K = 2, real, X transversal on labels.
struct CdDecomposition {
  std::vector<Scalar> c;
  std::vector<Scalar> d;
};
CdDecomposition cd_decomposition(const CodeSpace& space);

struct TheoremContext {
  bool hypotheses_asserted = false;
  std::string note;
};

// Hypotheses from group predicates: real, all letter counts even, k = 1.
TheoremContext theorem_context_for(const StabilizerGroup& s);
// Hypotheses from the space itself: K = 2, real, X/Z transversal on labels.
TheoremContext theorem_context_for(const CodeSpace& space);

struct IndexCheck {
  int index = 0;
  bool pass = false;
};

struct TheoremReport {
  bool applicable = false;
  std::string note;
  std::vector<IndexCheck> a_odd_zero;       // one entry per odd i
  std::vector<IndexCheck> a_even_equals_b;  // one entry per even i
  std::optional<int> code_distance;
  bool distance_odd = false;
  bool overall_pass = false;
};

TheoremReport theorem_check(const EnumeratorPair& pair, const TheoremContext& context);

// Candidate B from A through the quaternary Krawtchouk transform
// B_j = (K / 2^n) * sum_i A_i * K_j(i). The normalization is pinned by the
// trivial one-qubit code and the five-qubit code before being trusted.
std::vector<Scalar> macwilliams_transform(const std::vector<Scalar>& a, int n, int k_dim);

}  // namespace qwe
