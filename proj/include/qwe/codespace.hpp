#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qwe/pauli.hpp"
#include "qwe/rational.hpp"

namespace qwe {

enum class Backend { exact, floating };

inline constexpr double kFloatEqualityTol = 1e-9;
inline constexpr double kFloatRealnessTol = 1e-12;

// A single inner-product-valued quantity. Exact values are a Gaussian integer
// over sqrt(scale); the scale is the product of the two codeword scales, so
// diagonal matrix elements always sit over a perfect square.
struct Amplitude {
  Backend backend = Backend::exact;
  GaussianInt g{};
  std::uint64_t scale = 1;
  std::complex<double> f{};

  static Amplitude exact(GaussianInt value, std::uint64_t scale);
  static Amplitude floating(std::complex<double> value);

  bool is_zero() const;
  std::complex<double> approx() const;
  // |value|^2, exact backends stay rational.
  Rational norm_sq_exact() const;
  double norm_sq() const;
  // Exact real value; requires a zero imaginary part and a perfect-square scale.
  Rational real_exact() const;
  // True iff the value equals the integer v (to kFloatEqualityTol when floating).
  bool equals_int(std::int64_t v) const;
};

// K orthonormal codewords over the 2^n computational basis, stored sparsely.
// Exact amplitudes are Gaussian integers with an implicit per-codeword factor
// 1/sqrt(scale); floating amplitudes are complex doubles over the same
// convention.
class CodeSpace {
 public:
  struct ExactEntries {
    std::uint64_t scale = 1;
    std::vector<std::pair<std::uint64_t, GaussianInt>> amplitudes;
  };
  struct FloatEntries {
    std::uint64_t scale = 1;
    std::vector<std::pair<std::uint64_t, std::complex<double>>> amplitudes;
  };

  // Validates basis indices and orthonormality; throws ValidationError naming
  // the offending Gram entry otherwise.
  static CodeSpace from_amplitude_table(int n, std::vector<ExactEntries> words);
  static CodeSpace from_amplitude_table(int n, std::vector<FloatEntries> words);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(words_.size()); }
  Backend backend() const { return backend_; }

  // True iff every amplitude is real (exactly, or to kFloatRealnessTol).
  bool is_real() const { return real_; }

  std::uint64_t word_scale(int j) const;
  std::size_t support_size(int j) const;
  // Sparse view of codeword j; exact backend only.
  std::vector<std::pair<std::uint64_t, GaussianInt>> exact_amplitudes(int j) const;

  // <psi_a| p |psi_b>, cost proportional to the support of psi_b.
  Amplitude matrix_element(int a, const PauliString& p, int b) const;

 private:
  struct Word {
    std::uint64_t scale = 1;
    std::vector<std::uint64_t> basis;
    std::vector<GaussianInt> gvals;
    std::vector<std::complex<double>> fvals;
    std::vector<std::int32_t> pos;  // basis -> index+1 when the dense map is built
    std::int64_t lookup(std::uint64_t basis_index) const;
  };

  CodeSpace() = default;
  void finalize(int n, Backend backend);
  void check_word(int j) const;

  int n_ = 0;
  Backend backend_ = Backend::exact;
  bool real_ = true;
  std::vector<Word> words_;
};

// Codeword file grammar (line oriented, '#' starts a comment):
//   n=<int> K=<int> backend=<exact|float>
//   codeword <j> scale=<positive int>
//   <n-char bitstring> <re>[,<im>]
// Omitted basis states are zero. Exact entries are integers, floating entries
// decimals. Errors carry 1-based line numbers.
CodeSpace parse_codeword_stream(std::istream& in);

}  // namespace qwe
