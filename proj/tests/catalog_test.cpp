#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qwe/catalog.hpp"
#include "qwe/enumerator.hpp"

using namespace qwe;

namespace {

std::vector<Scalar> as_scalars(const std::vector<Rational>& values) {
  std::vector<Scalar> out;
  for (const Rational& v : values) out.push_back(Scalar::exact(v));
  return out;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    path = (std::filesystem::temp_directory_path() /
            ("qwe_catalog_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter()++) + ".txt"))
               .string();
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("catalog names are stable") {
  std::vector<std::string> names;
  for (const CatalogEntry& e : builtin_codes()) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"five-qubit", "steane", "shor", "eleven-one-five",
                                          "eleven-two-three"});
  CHECK(find_code("steane") != nullptr);
  CHECK(find_code("nope") == nullptr);
}

TEST_CASE("expected rows are well formed") {
  for (const CatalogEntry& e : builtin_codes()) {
    CHECK(e.expected_a.size() == e.expected_b.size());
    CHECK(e.expected_a[0] == Rational(1));
    CHECK(e.expected_b[0] == Rational(1));
  }
  const CatalogEntry* na = find_code("eleven-two-three");
  REQUIRE(na != nullptr);
  CHECK(na->expected_a[4] == Rational(110, 3));
  CHECK(na->expected_a[10] == Rational(880, 3));
  CHECK(na->expected_b[3] == Rational(55, 3));
  CHECK(na->expected_b[9] == Rational(4400, 3));
}

TEST_CASE("stabilizer entries reproduce their golden rows") {
  for (const CatalogEntry& e : builtin_codes()) {
    if (e.kind != CatalogEntry::Kind::stabilizer) continue;
    CAPTURE(e.name);
    StabilizerGroup s = group_for(e);
    CHECK(s.k == 1);

    EnumeratorPair group_path = stabilizer_enumerators(s);
    CHECK(group_path.a == as_scalars(e.expected_a));
    CHECK(group_path.b == as_scalars(e.expected_b));
    CHECK(distance(group_path) == e.expected_distance);

    CHECK(is_real_code(s));
    CHECK(all_even_check(s));
    REQUIRE(e.expected_verdict.has_value());
    CHECK(transversality_report(s).verdict == *e.expected_verdict);

    if (s.n <= 9) {
      EnumeratorPair brute_path = brute_force_enumerators(synthesize_codewords(s));
      CHECK(brute_path == group_path);
    }
  }
}

TEST_CASE("conditional non-additive fixture") {
  const CatalogEntry* e = find_code("eleven-two-three");
  REQUIRE(e != nullptr);
  CHECK(e->kind == CatalogEntry::Kind::external_codewords);
  if (!std::filesystem::exists(e->codeword_path)) {
    MESSAGE("codeword file ", e->codeword_path, " absent; fixture skipped");
    return;
  }
  CodeSpace space = load_codeword_file(e->codeword_path);
  CHECK(space.is_real());
  EnumeratorPair pair = brute_force_enumerators(space);
  CHECK(pair.a == as_scalars(e->expected_a));
  CHECK(pair.b == as_scalars(e->expected_b));
}

TEST_CASE("load_stabilizer_file") {
  TempFile good("# five-qubit minus one generator\nXZZXI\nIXZZX\nXIXZZ\n");
  StabilizerGroup s = load_stabilizer_file(good.path);
  CHECK(s.n == 5);
  CHECK(s.k == 2);

  TempFile uneven("XZZXI\nIXZZ\n");
  CHECK_THROWS_AS(load_stabilizer_file(uneven.path), ParseError);

  CHECK_THROWS_AS(load_stabilizer_file("/nonexistent/file.stab"), ParseError);
}

TEST_CASE("load_codeword_file") {
  TempFile good(
      "n=2 K=1 backend=exact\n"
      "codeword 0 scale=2\n"
      "00 1\n"
      "11 1\n");
  CodeSpace space = load_codeword_file(good.path);
  CHECK(space.n() == 2);

  TempFile skewed(
      "n=1 K=2 backend=exact\n"
      "codeword 0 scale=1\n"
      "0 1\n"
      "codeword 1 scale=2\n"
      "0 1\n"
      "1 1\n");
  CHECK_THROWS_AS(load_codeword_file(skewed.path), ValidationError);
}
