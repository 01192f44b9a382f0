// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "qwe/catalog.hpp"
#include "qwe/cli.hpp"
#include "qwe/enumerator.hpp"

using namespace qwe;

namespace {

bool g_any_fail = false;

void report(int criterion, bool pass, const std::string& text) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, text.c_str());
  if (!pass) g_any_fail = true;
}

void skip(int criterion, const std::string& text) {
  std::printf("SKIP criterion %d: %s\n", criterion, text.c_str());
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Scalar> as_scalars(const std::vector<Rational>& values) {
  std::vector<Scalar> out;
  for (const Rational& v : values) out.push_back(Scalar::exact(v));
  return out;
}

std::vector<const CatalogEntry*> stabilizer_entries() {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : builtin_codes()) {
    if (e.kind == CatalogEntry::Kind::stabilizer) out.push_back(&e);
  }
  return out;
}

// Criterion 1: group-method enumeration equals the embedded rows, < 1 s each.
void criterion_1() {
  bool pass = true;
  std::string detail;
  for (const CatalogEntry* e : stabilizer_entries()) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int status = cli::run({"enumerate", e->name, "--method", "group", "--format", "lines"},
                          out, err);
    double elapsed = seconds_since(start);
    bool ok = status == 0 && elapsed < 1.0;
    if (ok) {
      EnumeratorPair pair = parse_enumerator_lines(out.str(), Backend::exact);
      ok = pair.a == as_scalars(e->expected_a) && pair.b == as_scalars(e->expected_b);
    }
    pass = pass && ok;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s %.3fs%s ", e->name.c_str(), elapsed, ok ? "" : " MISMATCH");
    detail += buf;
  }
  report(1, pass, "Table rows via the group method, <1s each: " + detail);
}

// Criterion 2: the brute-force method matches the group method byte for
// byte through the command line, n = 11 included under --slow.
void criterion_2() {
  bool pass = true;
  std::string detail;
  auto run_lines = [&](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    pass = pass && status == 0;
    return out.str();
  };
  auto start_small = std::chrono::steady_clock::now();
  for (const char* name : {"five-qubit", "steane", "shor"}) {
    std::string group_out = run_lines({"enumerate", name, "--method", "group", "--format", "lines"});
    std::string brute_out = run_lines({"enumerate", name, "--method", "brute", "--format", "lines"});
    pass = pass && group_out == brute_out && !group_out.empty();
  }
  double small_elapsed = seconds_since(start_small);
  pass = pass && small_elapsed < 60.0;

  auto start_slow = std::chrono::steady_clock::now();
  std::string group11 =
      run_lines({"enumerate", "eleven-one-five", "--method", "group", "--format", "lines"});
  std::string brute11 = run_lines(
      {"enumerate", "eleven-one-five", "--method", "brute", "--format", "lines", "--slow"});
  double slow_elapsed = seconds_since(start_slow);
  pass = pass && group11 == brute11 && !group11.empty();

  char buf[128];
  std::snprintf(buf, sizeof(buf), "n in {5,7,9} in %.1fs; n=11 with --slow in %.1fs",
                small_elapsed, slow_elapsed);
  detail = buf;
  report(2, pass, "brute and group methods byte-identical: " + detail);
}

// Criterion 3: A_odd = 0, A_even = B_even, odd distances {3,3,3,5}.
void criterion_3() {
  bool pass = true;
  for (const CatalogEntry* e : stabilizer_entries()) {
    StabilizerGroup s = group_for(*e);
    EnumeratorPair pair = stabilizer_enumerators(s);
    TheoremReport r = theorem_check(pair, theorem_context_for(s));
    bool ok = r.applicable && r.overall_pass && r.code_distance == e->expected_distance;
    pass = pass && ok;
  }
  report(3, pass, "parity theorems on every stabilizer entry (d = 3,3,3,5, all odd)");
}

// Random k=1 groups with all letter counts even, by rejection sampling.
StabilizerGroup random_all_even_group(std::mt19937_64& rng, int n) {
  while (true) {
    std::vector<PauliString> chosen;
    int attempts = 0;
    while (static_cast<int>(chosen.size()) < n - 1 && attempts < 6000) {
      ++attempts;
      PauliString cand = testing::random_pauli(rng, n, /*hermitian_only=*/true);
      WeightProfile w = weight_profile(cand);
      if (w.n_x % 2 || w.n_y % 2 || w.n_z % 2 || w.wt == 0) continue;
      bool commuting = true;
      for (const PauliString& g : chosen) commuting = commuting && commutes(cand, g);
      if (!commuting) continue;
      std::vector<PauliString> trial = chosen;
      trial.push_back(cand);
      try {
        validate_group(trial);
      } catch (const ValidationError&) {
        continue;
      }
      chosen = std::move(trial);
    }
    if (static_cast<int>(chosen.size()) == n - 1) return validate_group(chosen);
  }
}

// Criterion 4: >= 500 random all-even groups satisfy the theorems.
void criterion_4() {
  std::mt19937_64 rng(20250811);
  int checked = 0;
  bool pass = true;
  std::string counterexample;
  for (int n : {5, 7}) {
    for (int rep = 0; rep < 250; ++rep) {
      StabilizerGroup s = random_all_even_group(rng, n);
      if (!all_even_check(s)) {
        pass = false;
        counterexample = "sampler produced a non-all-even group";
        break;
      }
      EnumeratorPair pair = stabilizer_enumerators(s);
      TheoremReport r = theorem_check(pair, theorem_context_for(s));
      ++checked;
      if (!(r.applicable && r.overall_pass)) {
        pass = false;
        counterexample = " counterexample:";
        for (const PauliString& g : s.generators) counterexample += " " + to_label(g);
        break;
      }
    }
    if (!pass) break;
  }
  report(4, pass, "theorems hold for " + std::to_string(checked) +
                      " random all-even k=1 groups (n = 5, 7)" + counterexample);
}

// Criterion 5: matrix-element and weight identities.
void criterion_5() {
  bool pass = true;
  std::string failed_part;
  auto fail_part = [&](const std::string& what) {
    pass = false;
    if (failed_part.empty()) failed_part = " failed at: " + what;
  };

  {  // weight identity over 10^4 random strings
    std::mt19937_64 rng(97);
    for (int rep = 0; rep < 10000; ++rep) {
      PauliString p = testing::random_pauli(rng, 1 + static_cast<int>(rng() % 20));
      WeightProfile w = weight_profile(p);
      if (w.n_y != w.wt_x + w.wt_z - w.wt) {
        fail_part("weight identity");
        break;
      }
    }
  }

  {  // transpose law vs the dense oracle, n <= 3, exhaustive
    for (int n = 1; n <= 3 && pass; ++n) {
      for (std::uint64_t x = 0; x < (1ull << n); ++x) {
        for (std::uint64_t z = 0; z < (1ull << n); ++z) {
          PauliString p{n, x, z, static_cast<std::uint8_t>(std::popcount(x & z) & 3)};
          testing::Matrix m = testing::dense_from_pauli(p);
          bool symmetric = true;
          for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c)
              if (m[r][c] != m[c][r]) symmetric = false;
          if (symmetric != is_symmetric(p)) fail_part("transpose law");
        }
      }
    }
  }

  {  // antisymmetric strings vanish on every real catalog diagonal, wt <= 3
    for (const CatalogEntry* e : stabilizer_entries()) {
      if (!pass) break;
      CodeSpace space = synthesize_codewords(group_for(*e));
      if (!space.is_real()) fail_part("realness of " + e->name);
      for (int i = 1; i <= 3 && pass; ++i) {
        for (const PauliString& p : WeightClassRange(space.n(), i)) {
          if (weight_profile(p).n_y % 2 == 0) continue;
          for (int a = 0; a < space.dim(); ++a) {
            if (!space.matrix_element(a, p, a).is_zero()) {
              fail_part("antisymmetric diagonal on " + e->name);
              break;
            }
          }
          if (!pass) break;
        }
      }
    }
  }

  {  // parity vanishing on five-qubit and Steane, all E of weight <= 3
    for (const char* name : {"five-qubit", "steane"}) {
      if (!pass) break;
      CodeSpace space = synthesize_codewords(group_for(*find_code(name)));
      for (int i = 0; i <= 3 && pass; ++i) {
        for (const PauliString& p : WeightClassRange(space.n(), i)) {
          WeightProfile w = weight_profile(p);
          Amplitude d0 = space.matrix_element(0, p, 0);
          Amplitude d1 = space.matrix_element(1, p, 1);
          Amplitude off = space.matrix_element(0, p, 1);
          if (w.wt_x % 2 == 1 && (!d0.is_zero() || !d1.is_zero())) fail_part("odd-X diagonal");
          if (w.wt_x % 2 == 0 && !off.is_zero()) fail_part("even-X off-diagonal");
          if (w.wt_z % 2 == 0 && !(d0.g == d1.g)) fail_part("even-Z diagonal equality");
          bool mismatch = (w.n_y % 2 == 0 && w.wt_z % 2 == 1) ||
                          (w.n_y % 2 == 1 && w.wt_z % 2 == 0);
          if (mismatch && !off.is_zero()) fail_part("parity-mismatch off-diagonal");
          if (!pass) break;
        }
      }
    }
  }

  {  // restricted A and the C/D split on five-qubit and Steane
    for (const char* name : {"five-qubit", "steane"}) {
      if (!pass) break;
      StabilizerGroup s = group_for(*find_code(name));
      CodeSpace space = synthesize_codewords(s);
      EnumeratorPair pair = brute_force_enumerators(space);
      if (restricted_a_coefficients(space) != pair.a) fail_part("restricted A");
      CdDecomposition cd = cd_decomposition(space);
      for (int i = 0; i <= pair.n; ++i) {
        if (pair.a[i].rat() + cd.c[i].rat() + cd.d[i].rat() != pair.b[i].rat()) {
          fail_part("B = A + C + D");
        }
        if (i % 2 == 0 && (!cd.c[i].rat().is_zero() || !cd.d[i].rat().is_zero())) {
          fail_part("C, D even vanishing");
        }
      }
    }
  }

  report(5, pass, "matrix-element and weight identity suite" + failed_part);
}

// Criterion 6: group and centralizer totals.
void criterion_6() {
  bool pass = true;
  std::string detail;
  for (const CatalogEntry* e : stabilizer_entries()) {
    StabilizerGroup s = group_for(*e);
    EnumeratorPair pair = stabilizer_enumerators(s);
    Rational a_total(0), b_total(0);
    for (int i = 0; i <= pair.n; ++i) {
      a_total += pair.a[i].rat();
      b_total += pair.b[i].rat();
    }
    bool ok = a_total == Rational(1ll << (s.n - s.k)) && b_total == Rational(1ll << (s.n + s.k));
    pass = pass && ok;
    detail += a_total.str() + "/" + b_total.str() + " ";
  }
  report(6, pass, "totals sum to 2^(n-k) and 2^(n+k): " + detail);
}

// Criterion 7: Hadamard-conjugated Shor.
void criterion_7() {
  StabilizerGroup shor = group_for(*find_code("shor"));
  StabilizerGroup conj = hadamard_conjugate(shor);
  bool rows_equal = stabilizer_enumerators(conj) == stabilizer_enumerators(shor);
  bool verdict_ok =
      transversality_report(conj).verdict == TransversalVerdict::exactly_transversal;
  report(7, rows_equal && verdict_ok,
         "Hadamard-conjugated Shor: identical enumerators, exactly transversal");
}

// Criterion 8: conditional non-additive fixture.
void criterion_8() {
  const CatalogEntry* e = find_code("eleven-two-three");
  if (!std::filesystem::exists(e->codeword_path)) {
    skip(8, "external codeword file " + e->codeword_path + " absent");
    return;
  }
  CodeSpace space = load_codeword_file(e->codeword_path);
  EnumeratorPair pair = brute_force_enumerators(space);
  bool ok = pair.a == as_scalars(e->expected_a) && pair.b == as_scalars(e->expected_b);
  report(8, ok, "((11,2,3)) codeword file reproduces the fractional rows exactly");
}

// Criterion 9: MacWilliams cross-check, pins first.
void criterion_9() {
  bool pins = macwilliams_transform(as_scalars({1, 0}), 1, 2) == as_scalars({1, 3});
  {
    const CatalogEntry* five = find_code("five-qubit");
    pins = pins && macwilliams_transform(as_scalars(five->expected_a), 5, 2) ==
                       as_scalars(five->expected_b);
  }
  bool pass = pins;
  for (const CatalogEntry& e : builtin_codes()) {
    int n = static_cast<int>(e.expected_a.size()) - 1;
    pass = pass &&
           macwilliams_transform(as_scalars(e.expected_a), n, 2) == as_scalars(e.expected_b);
  }
  report(9, pass, std::string("MacWilliams transform maps every catalog A row to its B row") +
                      (pins ? "" : " (pin rows failed)"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%s\n", g_any_fail ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS");
  return g_any_fail ? 1 : 0;
}
