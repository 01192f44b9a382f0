#include "qwe/codespace.hpp"

#include "qwe/detail/text.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <sstream>

namespace qwe {

namespace {

// Dense basis->position maps are built below this qubit count.
constexpr int kDenseLookupMax = 20;

std::int64_t to_signed(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ArithmeticError(std::string(what) + " exceeds the exact 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::uint64_t isqrt_exact(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) throw ArithmeticError("scale " + std::to_string(v) + " is not a perfect square");
  return r;
}

}  // namespace

Amplitude Amplitude::exact(GaussianInt value, std::uint64_t scale) {
  Amplitude a;
  a.backend = Backend::exact;
  a.g = value;
  a.scale = scale;
  return a;
}

Amplitude Amplitude::floating(std::complex<double> value) {
  Amplitude a;
  a.backend = Backend::floating;
  a.f = value;
  a.scale = 1;
  return a;
}

bool Amplitude::is_zero() const {
  if (backend == Backend::exact) return g.is_zero();
  return std::abs(f) <= kFloatEqualityTol;
}

std::complex<double> Amplitude::approx() const {
  if (backend == Backend::exact) {
    double s = std::sqrt(static_cast<double>(scale));
    return {static_cast<double>(g.re) / s, static_cast<double>(g.im) / s};
  }
  return f;
}

Rational Amplitude::norm_sq_exact() const {
  if (backend != Backend::exact) throw PreconditionError("norm_sq_exact on floating amplitude");
  return Rational(g.norm_sq(), to_signed(scale, "amplitude scale"));
}

double Amplitude::norm_sq() const { return std::norm(approx()); }

Rational Amplitude::real_exact() const {
  if (backend != Backend::exact) throw PreconditionError("real_exact on floating amplitude");
  if (g.im != 0) throw PreconditionError("real_exact on a value with nonzero imaginary part");
  return Rational(g.re, to_signed(isqrt_exact(scale), "amplitude scale root"));
}

bool Amplitude::equals_int(std::int64_t v) const {
  if (backend == Backend::floating) return std::abs(f - std::complex<double>(static_cast<double>(v), 0.0)) <= kFloatEqualityTol;
  if (g.im != 0) return false;
  if ((g.re < 0) != (v < 0) && g.re != 0 && v != 0) return false;
  if (v == 0) return g.re == 0;
  // g.re / sqrt(scale) == v  <=>  g.re^2 == v^2 * scale with matching signs.
  return detail::checked_mul(g.re, g.re) ==
         detail::checked_mul(detail::checked_mul(v, v), to_signed(scale, "amplitude scale"));
}

std::int64_t CodeSpace::Word::lookup(std::uint64_t basis_index) const {
  if (!pos.empty()) return pos[basis_index] - 1;
  auto it = std::lower_bound(basis.begin(), basis.end(), basis_index);
  if (it == basis.end() || *it != basis_index) return -1;
  return it - basis.begin();
}

std::uint64_t CodeSpace::word_scale(int j) const {
  check_word(j);
  return words_[j].scale;
}

std::size_t CodeSpace::support_size(int j) const {
  check_word(j);
  return words_[j].basis.size();
}

std::vector<std::pair<std::uint64_t, GaussianInt>> CodeSpace::exact_amplitudes(int j) const {
  check_word(j);
  if (backend_ != Backend::exact) throw PreconditionError("exact_amplitudes on floating backend");
  std::vector<std::pair<std::uint64_t, GaussianInt>> out;
  out.reserve(words_[j].basis.size());
  for (std::size_t t = 0; t < words_[j].basis.size(); ++t) {
    out.emplace_back(words_[j].basis[t], words_[j].gvals[t]);
  }
  return out;
}

void CodeSpace::check_word(int j) const {
  if (j < 0 || j >= dim()) {
    throw DimensionError("codeword index " + std::to_string(j) + " outside [0, " +
                         std::to_string(dim()) + ")");
  }
}

Amplitude CodeSpace::matrix_element(int a, const PauliString& p, int b) const {
  check_word(a);
  check_word(b);
  if (p.n != n_) {
    throw DimensionError("operator on " + std::to_string(p.n) + " qubits applied to " +
                         std::to_string(n_) + "-qubit codewords");
  }
  const Word& wa = words_[a];
  const Word& wb = words_[b];
  if (backend_ == Backend::exact) {
    GaussianInt sum{};
    for (std::size_t t = 0; t < wb.basis.size(); ++t) {
      std::uint64_t x = wb.basis[t];
      std::uint64_t y = x ^ p.x_mask;
      std::int64_t ia = wa.lookup(y);
      if (ia < 0) continue;
      int phase = (p.phase_exp + 2 * (std::popcount(p.z_mask & x) & 1)) & 3;
      sum += wb.gvals[t].times_i_pow(static_cast<unsigned>(phase)) * wa.gvals[ia].conj();
    }
    std::uint64_t scale = static_cast<std::uint64_t>(
        detail::checked_mul(to_signed(wa.scale, "scale"), to_signed(wb.scale, "scale")));
    return Amplitude::exact(sum, scale);
  }
  std::complex<double> sum{};
  for (std::size_t t = 0; t < wb.basis.size(); ++t) {
    std::uint64_t x = wb.basis[t];
    std::uint64_t y = x ^ p.x_mask;
    std::int64_t ia = wa.lookup(y);
    if (ia < 0) continue;
    int phase = (p.phase_exp + 2 * (std::popcount(p.z_mask & x) & 1)) & 3;
    const std::complex<double> i_table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    sum += wb.fvals[t] * i_table[phase] * std::conj(wa.fvals[ia]);
  }
  double norm = std::sqrt(static_cast<double>(wa.scale)) * std::sqrt(static_cast<double>(wb.scale));
  return Amplitude::floating(sum / norm);
}

void CodeSpace::finalize(int n, Backend backend) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("qubit count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxQubits) + "]");
  }
  if (words_.empty()) throw ValidationError("a code space needs at least one codeword");
  n_ = n;
  backend_ = backend;

  for (std::size_t j = 0; j < words_.size(); ++j) {
    Word& w = words_[j];
    if (w.scale == 0) throw ValidationError("codeword " + std::to_string(j) + " has zero scale");
    for (std::uint64_t x : w.basis) {
      if (n < 64 && (x >> n)) {
        throw ValidationError("codeword " + std::to_string(j) + " uses basis index " +
                              std::to_string(x) + " outside 2^" + std::to_string(n) + " states");
      }
    }
    for (std::size_t t = 1; t < w.basis.size(); ++t) {
      if (w.basis[t] == w.basis[t - 1]) {
        throw ValidationError("codeword " + std::to_string(j) + " repeats basis index " +
                              std::to_string(w.basis[t]));
      }
    }
    if (n <= kDenseLookupMax) {
      w.pos.assign(1ull << n, 0);
      for (std::size_t t = 0; t < w.basis.size(); ++t) {
        w.pos[w.basis[t]] = static_cast<std::int32_t>(t + 1);
      }
    }
  }

  // Orthonormality, reported by Gram entry.
  PauliString id = identity(n);
  for (int a = 0; a < dim(); ++a) {
    for (int b = a; b < dim(); ++b) {
      Amplitude gram = matrix_element(a, id, b);
      bool ok = (a == b) ? gram.equals_int(1) : gram.is_zero();
      if (!ok) {
        std::ostringstream msg;
        msg << "codewords are not orthonormal: Gram entry (" << a << ", " << b << ") = ";
        if (backend == Backend::exact) {
          msg << "(" << gram.g.re << (gram.g.im < 0 ? "" : "+") << gram.g.im << "i)/sqrt("
              << gram.scale << ")";
        } else {
          msg << gram.approx();
        }
        throw ValidationError(msg.str());
      }
    }
  }

  real_ = true;
  for (const Word& w : words_) {
    for (const GaussianInt& v : w.gvals) {
      if (v.im != 0) real_ = false;
    }
    for (const std::complex<double>& v : w.fvals) {
      if (std::abs(v.imag()) > kFloatRealnessTol) real_ = false;
    }
  }
}

CodeSpace CodeSpace::from_amplitude_table(int n, std::vector<ExactEntries> words) {
  CodeSpace space;
  space.words_.reserve(words.size());
  for (ExactEntries& in : words) {
    std::sort(in.amplitudes.begin(), in.amplitudes.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    Word w;
    w.scale = in.scale;
    for (const auto& [basis, value] : in.amplitudes) {
      if (value.is_zero()) continue;
      w.basis.push_back(basis);
      w.gvals.push_back(value);
    }
    space.words_.push_back(std::move(w));
  }
  space.finalize(n, Backend::exact);
  return space;
}

CodeSpace CodeSpace::from_amplitude_table(int n, std::vector<FloatEntries> words) {
  CodeSpace space;
  space.words_.reserve(words.size());
  for (FloatEntries& in : words) {
    std::sort(in.amplitudes.begin(), in.amplitudes.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    Word w;
    w.scale = in.scale;
    for (const auto& [basis, value] : in.amplitudes) {
      if (value == std::complex<double>{}) continue;
      w.basis.push_back(basis);
      w.fvals.push_back(value);
    }
    space.words_.push_back(std::move(w));
  }
  space.finalize(n, Backend::floating);
  return space;
}

CodeSpace parse_codeword_stream(std::istream& in) {
  std::vector<detail::TextLine> lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError("empty codeword file");

  auto header = detail::split_words(lines[0].text);
  if (header.size() != 3) detail::parse_fail(lines[0].number, "expected 'n=<int> K=<int> backend=<exact|float>'");
  int n = static_cast<int>(detail::parse_int64(detail::expect_key(header[0], "n", lines[0].number), lines[0].number, "n"));
  int k_dim = static_cast<int>(detail::parse_int64(detail::expect_key(header[1], "K", lines[0].number), lines[0].number, "K"));
  std::string backend_name = detail::expect_key(header[2], "backend", lines[0].number);
  bool exact;
  if (backend_name == "exact") {
    exact = true;
  } else if (backend_name == "float") {
    exact = false;
  } else {
    detail::parse_fail(lines[0].number, "backend must be 'exact' or 'float', got '" + backend_name + "'");
  }
  if (n < 1 || n > kMaxQubits) detail::parse_fail(lines[0].number, "n outside [1, " + std::to_string(kMaxQubits) + "]");
  if (k_dim < 1) detail::parse_fail(lines[0].number, "K must be positive");

  std::vector<CodeSpace::ExactEntries> exact_words;
  std::vector<CodeSpace::FloatEntries> float_words;
  std::vector<std::vector<std::uint64_t>> seen_basis;
  int current = -1;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& [number, text] = lines[li];
    auto tokens = detail::split_words(text);
    if (tokens[0] == "codeword") {
      if (tokens.size() != 3) detail::parse_fail(number, "expected 'codeword <j> scale=<positive int>'");
      std::int64_t j = detail::parse_int64(tokens[1], number, "codeword index");
      if (j != current + 1) {
        detail::parse_fail(number, "codeword indices must run 0.." + std::to_string(k_dim - 1) +
                         " in order; got " + std::to_string(j));
      }
      if (j >= k_dim) detail::parse_fail(number, "codeword index " + std::to_string(j) + " exceeds K-1");
      std::int64_t scale = detail::parse_int64(detail::expect_key(tokens[2], "scale", number), number, "scale");
      if (scale <= 0) detail::parse_fail(number, "scale must be positive");
      ++current;
      if (exact) {
        exact_words.push_back({static_cast<std::uint64_t>(scale), {}});
      } else {
        float_words.push_back({static_cast<std::uint64_t>(scale), {}});
      }
      seen_basis.emplace_back();
      continue;
    }

    if (current < 0) detail::parse_fail(number, "amplitude entry before any 'codeword' header");
    if (tokens.size() != 2) detail::parse_fail(number, "expected '<bitstring> <re>[,<im>]'");
    const std::string& bits = tokens[0];
    if (static_cast<int>(bits.size()) != n) {
      detail::parse_fail(number, "bitstring '" + bits + "' is not " + std::to_string(n) + " characters");
    }
    std::uint64_t basis = 0;
    for (int j = 0; j < n; ++j) {
      if (bits[j] == '1') {
        basis |= 1ull << j;
      } else if (bits[j] != '0') {
        detail::parse_fail(number, "bitstring character '" + std::string(1, bits[j]) + "' at position " +
                         std::to_string(j + 1));
      }
    }
    auto& seen = seen_basis[current];
    if (std::find(seen.begin(), seen.end(), basis) != seen.end()) {
      detail::parse_fail(number, "duplicate basis index " + bits);
    }
    seen.push_back(basis);

    std::string re = tokens[1], im;
    std::size_t comma = tokens[1].find(',');
    if (comma != std::string::npos) {
      re = tokens[1].substr(0, comma);
      im = tokens[1].substr(comma + 1);
      if (im.empty()) detail::parse_fail(number, "missing imaginary part after ','");
    }
    if (exact) {
      GaussianInt v{detail::parse_int64(re, number, "amplitude"), 0};
      if (!im.empty()) v.im = detail::parse_int64(im, number, "amplitude");
      exact_words[current].amplitudes.emplace_back(basis, v);
    } else {
      std::complex<double> v{detail::parse_double(re, number, "amplitude"), 0.0};
      if (!im.empty()) v.imag(detail::parse_double(im, number, "amplitude"));
      float_words[current].amplitudes.emplace_back(basis, v);
    }
  }

  if (current + 1 != k_dim) {
    throw ParseError("file declares K=" + std::to_string(k_dim) + " but contains " +
                     std::to_string(current + 1) + " codeword blocks");
  }
  return exact ? CodeSpace::from_amplitude_table(n, std::move(exact_words))
               : CodeSpace::from_amplitude_table(n, std::move(float_words));
}

}  // namespace qwe
