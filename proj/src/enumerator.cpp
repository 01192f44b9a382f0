#include "qwe/enumerator.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "qwe/detail/text.hpp"

namespace qwe {

namespace {

constexpr std::uint64_t kChunkGrid = 64;  // fixed partition, independent of worker count

std::int64_t to_signed(std::uint64_t v, const char* what) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) {
    throw ArithmeticError(std::string(what) + " exceeds the exact 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

double float_tol(double reference) { return 1e-9 * std::max(1.0, std::abs(reference)); }

bool scalar_matches(const Scalar& a, const Scalar& b) {
  if (a.backend() == Backend::exact && b.backend() == Backend::exact) return a.rat() == b.rat();
  return std::abs(a.approx() - b.approx()) <= float_tol(b.approx());
}

bool scalar_is_zero(const Scalar& a, const Scalar& reference) {
  if (a.backend() == Backend::exact) return a.rat().is_zero();
  return std::abs(a.flt()) <= float_tol(reference.approx());
}

// Shared chunked driver: Accum needs operator+=; Process(E, Accum&) folds one
// weight-class element.
template <typename Accum, typename Process>
Accum accumulate_weight_class(int n, int weight, int threads, Process process) {
  std::uint64_t subsets = binomial(n, weight);
  std::uint64_t chunks = std::min<std::uint64_t>(subsets, kChunkGrid);
  if (chunks == 0) chunks = 1;
  std::vector<Accum> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      while (!failed.load(std::memory_order_relaxed)) {
        std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) break;
        std::uint64_t lo = subsets * c / chunks;
        std::uint64_t hi = subsets * (c + 1) / chunks;
        Accum local{};
        for (const PauliString& e : WeightClassRange(n, weight, lo, hi)) {
          process(e, local);
        }
        partial[c] += local;
      }
    } catch (...) {
      std::scoped_lock lock(error_mutex);
      if (!error) error = std::current_exception();
      failed.store(true, std::memory_order_relaxed);
    }
  };

  int workers = threads;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers <= 0) workers = 1;
  workers = static_cast<int>(std::min<std::uint64_t>(workers, chunks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  Accum total{};
  for (std::uint64_t c = 0; c < chunks; ++c) total += partial[c];  // fixed merge order
  return total;
}

struct ExactAccum {
  Rational trace_sq{0};
  Rational pair_norm{0};
  ExactAccum& operator+=(const ExactAccum& o) {
    trace_sq += o.trace_sq;
    pair_norm += o.pair_norm;
    return *this;
  }
};

struct FloatAccum {
  double trace_sq = 0;
  double pair_norm = 0;
  FloatAccum& operator+=(const FloatAccum& o) {
    trace_sq += o.trace_sq;
    pair_norm += o.pair_norm;
    return *this;
  }
};

}  // namespace

const Rational& Scalar::rat() const {
  if (backend_ != Backend::exact) throw PreconditionError("rat() on a floating scalar");
  return rat_;
}

double Scalar::flt() const {
  if (backend_ != Backend::floating) throw PreconditionError("flt() on an exact scalar");
  return flt_;
}

std::string Scalar::str() const {
  if (backend_ == Backend::exact) return rat_.str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), flt_);
  (void)ec;
  return std::string(buf, ptr);
}

std::string EnumeratorPair::render_lines() const {
  std::ostringstream out;
  for (int i = 0; i <= n; ++i) {
    out << i << ' ' << a[i].str() << ' ' << b[i].str() << '\n';
  }
  return out.str();
}

void EnumeratorPair::validate() const {
  if (a.size() != static_cast<std::size_t>(n + 1) || b.size() != a.size()) {
    throw ValidationError("enumerator vectors must have length n + 1");
  }
  auto value_ok = [&](const Scalar& s, double lo) {
    return backend == Backend::exact ? true : s.flt() >= lo;
  };
  Scalar one = backend == Backend::exact ? Scalar::exact(Rational(1)) : Scalar::floating(1.0);
  if (!scalar_matches(a[0], one) || !scalar_matches(b[0], one)) {
    throw ValidationError("enumerators must start with A_0 = B_0 = 1");
  }
  for (int i = 0; i <= n; ++i) {
    bool nonneg = backend == Backend::exact
                      ? (a[i].rat().sign() >= 0 && b[i].rat().sign() >= 0)
                      : (value_ok(a[i], -float_tol(1)) && value_ok(b[i], -float_tol(1)));
    if (!nonneg) throw ValidationError("enumerator entries must be nonnegative");
    bool dominated = backend == Backend::exact
                         ? a[i].rat() <= b[i].rat()
                         : a[i].flt() <= b[i].flt() + float_tol(b[i].flt());
    if (!dominated) {
      throw ValidationError("B_" + std::to_string(i) + " < A_" + std::to_string(i));
    }
  }
}

EnumeratorPair parse_enumerator_lines(const std::string& text, Backend backend) {
  std::istringstream in(text);
  EnumeratorPair pair;
  pair.backend = backend;
  int expected = 0;
  for (const auto& [number, line] : detail::significant_lines(in)) {
    auto tokens = detail::split_words(line);
    if (tokens.size() != 3) detail::parse_fail(number, "expected 'i A_i B_i'");
    std::int64_t i = detail::parse_int64(tokens[0], number, "weight index");
    if (i != expected) {
      detail::parse_fail(number, "weight indices must run 0..n in order");
    }
    ++expected;
    if (backend == Backend::exact) {
      pair.a.push_back(Scalar::exact(Rational::parse(tokens[1])));
      pair.b.push_back(Scalar::exact(Rational::parse(tokens[2])));
    } else {
      pair.a.push_back(Scalar::floating(detail::parse_double(tokens[1], number, "A value")));
      pair.b.push_back(Scalar::floating(detail::parse_double(tokens[2], number, "B value")));
    }
  }
  if (pair.a.empty()) throw ParseError("no enumerator lines found");
  pair.n = expected - 1;
  return pair;
}

EnumeratorPair brute_force_enumerators(const CodeSpace& space, const BruteForceOptions& options) {
  int n = space.n();
  if (n > kBruteForceDefaultCap && !options.allow_large) {
    throw PreconditionError("brute-force enumeration is capped at n = " +
                            std::to_string(kBruteForceDefaultCap) +
                            " by default; enable the large-n override to proceed");
  }
  int k_dim = space.dim();

  EnumeratorPair pair;
  pair.n = n;
  pair.backend = space.backend();
  pair.a.resize(n + 1);
  pair.b.resize(n + 1);

  if (space.backend() == Backend::exact) {
    std::vector<std::int64_t> scales(k_dim);
    for (int j = 0; j < k_dim; ++j) scales[j] = to_signed(space.word_scale(j), "codeword scale");
    auto process = [&](const PauliString& e, ExactAccum& acc) {
      Rational trace(0);
      Rational norms(0);
      for (int a = 0; a < k_dim; ++a) {
        for (int b = a; b < k_dim; ++b) {
          Amplitude m = space.matrix_element(a, e, b);
          if (a == b) {
            if (m.g.im != 0) {
              throw ValidationError("non-real diagonal element for a Hermitian representative");
            }
            trace += Rational(m.g.re, scales[a]);
            norms += m.norm_sq_exact();
          } else {
            norms += m.norm_sq_exact() * Rational(2);
          }
        }
      }
      acc.trace_sq += trace * trace;
      acc.pair_norm += norms;
    };
    Rational k_sq(static_cast<std::int64_t>(k_dim) * k_dim);
    Rational k_rat(k_dim);
    for (int i = 0; i <= n; ++i) {
      ExactAccum total = accumulate_weight_class<ExactAccum>(n, i, options.threads, process);
      pair.a[i] = Scalar::exact(total.trace_sq / k_sq);
      pair.b[i] = Scalar::exact(total.pair_norm / k_rat);
    }
  } else {
    auto process = [&](const PauliString& e, FloatAccum& acc) {
      double trace = 0;
      double norms = 0;
      for (int a = 0; a < k_dim; ++a) {
        for (int b = a; b < k_dim; ++b) {
          Amplitude m = space.matrix_element(a, e, b);
          if (a == b) {
            trace += m.approx().real();
            norms += m.norm_sq();
          } else {
            norms += 2 * m.norm_sq();
          }
        }
      }
      acc.trace_sq += trace * trace;
      acc.pair_norm += norms;
    };
    for (int i = 0; i <= n; ++i) {
      FloatAccum total = accumulate_weight_class<FloatAccum>(n, i, options.threads, process);
      pair.a[i] = Scalar::floating(total.trace_sq / (static_cast<double>(k_dim) * k_dim));
      pair.b[i] = Scalar::floating(total.pair_norm / k_dim);
    }
  }
  pair.validate();
  return pair;
}

EnumeratorPair stabilizer_enumerators(const StabilizerGroup& s) {
  std::vector<std::int64_t> a_counts(s.n + 1, 0);
  std::vector<std::int64_t> b_counts(s.n + 1, 0);
  for_each_group_element(s, [&](const PauliString& g) { ++a_counts[weight_profile(g).wt]; });
  for_each_centralizer_element(s, [&](const PauliString& p) { ++b_counts[weight_profile(p).wt]; });

  EnumeratorPair pair;
  pair.n = s.n;
  pair.backend = Backend::exact;
  pair.a.reserve(s.n + 1);
  pair.b.reserve(s.n + 1);
  for (int i = 0; i <= s.n; ++i) {
    pair.a.push_back(Scalar::exact(Rational(a_counts[i])));
    pair.b.push_back(Scalar::exact(Rational(b_counts[i])));
  }
  pair.validate();
  return pair;
}

std::optional<int> distance(const EnumeratorPair& pair) {
  for (int i = 0; i <= pair.n; ++i) {
    if (!scalar_matches(pair.a[i], pair.b[i])) return i;
  }
  return std::nullopt;
}

bool x_transversal_on_labels(const CodeSpace& space) {
  if (space.dim() != 2) return false;
  PauliString xall{space.n(), space.n() == 64 ? ~0ull : (1ull << space.n()) - 1, 0, 0};
  return space.matrix_element(1, xall, 0).equals_int(1) &&
         space.matrix_element(0, xall, 1).equals_int(1);
}

bool z_transversal_on_labels(const CodeSpace& space) {
  if (space.dim() != 2) return false;
  PauliString zall{space.n(), 0, space.n() == 64 ? ~0ull : (1ull << space.n()) - 1, 0};
  return space.matrix_element(0, zall, 0).equals_int(1) &&
         space.matrix_element(1, zall, 1).equals_int(-1);
}

namespace {

void require_k2_real_x(const CodeSpace& space, bool need_z, const char* op) {
  if (space.dim() != 2) {
    throw PreconditionError(std::string(op) + " requires K = 2, got K = " +
                            std::to_string(space.dim()));
  }
  if (!space.is_real()) {
    throw PreconditionError(std::string(op) + " requires a real code space");
  }
  if (!x_transversal_on_labels(space)) {
    throw PreconditionError(std::string(op) +
                            " requires X^n to exchange the codeword labels exactly");
  }
  if (need_z && !z_transversal_on_labels(space)) {
    throw PreconditionError(std::string(op) +
                            " requires Z^n to grade the codeword labels exactly");
  }
}

// Sum of |<a|E|b>|^2 over one weight class, filtered on the weight profile.
template <typename Filter>
Scalar filtered_norm_sum(const CodeSpace& space, int weight, int a, int b, Filter filter) {
  if (space.backend() == Backend::exact) {
    Rational total(0);
    for (const PauliString& e : WeightClassRange(space.n(), weight)) {
      if (!filter(weight_profile(e))) continue;
      total += space.matrix_element(a, e, b).norm_sq_exact();
    }
    return Scalar::exact(total);
  }
  double total = 0;
  for (const PauliString& e : WeightClassRange(space.n(), weight)) {
    if (!filter(weight_profile(e))) continue;
    total += space.matrix_element(a, e, b).norm_sq();
  }
  return Scalar::floating(total);
}

}  // namespace

std::vector<Scalar> restricted_a_coefficients(const CodeSpace& space) {
  require_k2_real_x(space, /*need_z=*/true, "restricted A");
  std::vector<Scalar> out;
  out.reserve(space.n() + 1);
  for (int i = 0; i <= space.n(); ++i) {
    out.push_back(filtered_norm_sum(space, i, 0, 0, [](const WeightProfile& w) {
      return w.wt_x % 2 == 0 && w.wt_z % 2 == 0;
    }));
  }
  return out;
}

CdDecomposition cd_decomposition(const CodeSpace& space) {
  require_k2_real_x(space, /*need_z=*/false, "the C/D decomposition");
  CdDecomposition out;
  out.c.reserve(space.n() + 1);
  out.d.reserve(space.n() + 1);
  for (int i = 0; i <= space.n(); ++i) {
    out.c.push_back(filtered_norm_sum(space, i, 0, 0, [](const WeightProfile& w) {
      return w.wt_x % 2 == 0 && w.wt_z % 2 == 1;
    }));
    out.d.push_back(filtered_norm_sum(space, i, 0, 1, [](const WeightProfile& w) {
      return w.wt_x % 2 == 1;
    }));
  }
  return out;
}

TheoremContext theorem_context_for(const StabilizerGroup& s) {
  TheoremContext ctx;
  bool real = is_real_code(s);
  bool even = all_even_check(s);
  ctx.hypotheses_asserted = real && even && s.k == 1;
  if (ctx.hypotheses_asserted) {
    ctx.note = "real k=1 stabilizer group with all letter counts even";
  } else if (!real) {
    ctx.note = "group is not real (a generator has an odd Y count)";
  } else if (s.k != 1) {
    ctx.note = "group has k = " + std::to_string(s.k) + ", theorems need k = 1";
  } else if (s.n % 2 == 0) {
    ctx.note = "n is even, so X and Z cannot both be exactly transversal";
  } else {
    ctx.note = "a generator has an odd X, Y, or Z letter count";
  }
  return ctx;
}

TheoremContext theorem_context_for(const CodeSpace& space) {
  TheoremContext ctx;
  bool k2 = space.dim() == 2;
  bool real = space.is_real();
  bool xt = k2 && x_transversal_on_labels(space);
  bool zt = k2 && z_transversal_on_labels(space);
  ctx.hypotheses_asserted = k2 && real && xt && zt;
  if (ctx.hypotheses_asserted) {
    ctx.note = "real K=2 space with X and Z transversal on the labels";
  } else if (!k2) {
    ctx.note = "K != 2";
  } else if (!real) {
    ctx.note = "code space is not real";
  } else {
    ctx.note = "X^n or Z^n does not act transversally on the labels";
  }
  return ctx;
}

TheoremReport theorem_check(const EnumeratorPair& pair, const TheoremContext& context) {
  TheoremReport report;
  report.note = context.note;
  if (!context.hypotheses_asserted) {
    report.applicable = false;
    return report;
  }
  report.applicable = true;
  bool all_pass = true;
  for (int i = 0; i <= pair.n; ++i) {
    if (i % 2 == 1) {
      bool pass = scalar_is_zero(pair.a[i], pair.b[i]);
      report.a_odd_zero.push_back({i, pass});
      all_pass = all_pass && pass;
    } else {
      bool pass = scalar_matches(pair.a[i], pair.b[i]);
      report.a_even_equals_b.push_back({i, pass});
      all_pass = all_pass && pass;
    }
  }
  report.code_distance = distance(pair);
  report.distance_odd = report.code_distance.has_value() && *report.code_distance % 2 == 1;
  report.overall_pass = all_pass && report.distance_odd;
  return report;
}

namespace {

// Quaternary Krawtchouk value K_j(i) = sum_s (-1)^s 3^{j-s} C(i,s) C(n-i,j-s).
std::int64_t krawtchouk(int n, int j, int i) {
  std::int64_t total = 0;
  for (int s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    std::int64_t term = to_signed(binomial(i, s), "Krawtchouk binomial");
    term = detail::checked_mul(term, to_signed(binomial(n - i, j - s), "Krawtchouk binomial"));
    for (int t = 0; t < j - s; ++t) term = detail::checked_mul(term, 3);
    total = (s % 2 == 0) ? detail::checked_add(total, term) : detail::checked_sub(total, term);
  }
  return total;
}

}  // namespace

std::vector<Scalar> macwilliams_transform(const std::vector<Scalar>& a, int n, int k_dim) {
  if (a.size() != static_cast<std::size_t>(n + 1)) {
    throw DimensionError("enumerator vector must have length n + 1");
  }
  if (n > 62) throw ArithmeticError("transform needs 2^n in 64-bit range");
  std::vector<Scalar> out;
  out.reserve(n + 1);
  bool exact = a.empty() || a[0].backend() == Backend::exact;
  std::int64_t pow2n = 1ll << n;
  for (int j = 0; j <= n; ++j) {
    if (exact) {
      Rational total(0);
      for (int i = 0; i <= n; ++i) {
        total += a[i].rat() * Rational(krawtchouk(n, j, i));
      }
      out.push_back(Scalar::exact(total * Rational(k_dim, pow2n)));
    } else {
      double total = 0;
      for (int i = 0; i <= n; ++i) {
        total += a[i].flt() * static_cast<double>(krawtchouk(n, j, i));
      }
      out.push_back(Scalar::floating(total * static_cast<double>(k_dim) / static_cast<double>(pow2n)));
    }
  }
  return out;
}

}  // namespace qwe
