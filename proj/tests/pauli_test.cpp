#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "dense_oracle.hpp"
#include "qwe/pauli.hpp"

using namespace qwe;
using namespace qwe::testing;

TEST_CASE("from_label letter map and sign prefixes") {
  PauliString p = from_label("XZZXI");
  CHECK(p.n == 5);
  CHECK(p.x_mask == 0b01001u);  // qubits 0 and 3
  CHECK(p.z_mask == 0b00110u);  // qubits 1 and 2
  CHECK(p.phase_exp == 0);

  PauliString y = from_label("Y");
  CHECK(y.x_mask == 1u);
  CHECK(y.z_mask == 1u);
  CHECK(y.phase_exp == 1);

  PauliString mzz = from_label("-ZZ");
  CHECK(mzz.x_mask == 0u);
  CHECK(mzz.z_mask == 0b11u);
  CHECK(mzz.phase_exp == 2);

  CHECK(from_label("iY").phase_exp == 2);
  CHECK(from_label("-iY").phase_exp == 0);
  CHECK(from_label("+XX") == from_label("XX"));
}

TEST_CASE("from_label errors name the position") {
  CHECK_THROWS_AS(from_label(""), ParseError);
  CHECK_THROWS_AS(from_label("-"), ParseError);
  CHECK_THROWS_AS(from_label("i"), ParseError);
  CHECK_THROWS_WITH_AS(from_label("XZQX"), doctest::Contains("position 3"), ParseError);
  CHECK_THROWS_WITH_AS(from_label("-Xy"), doctest::Contains("position 3"), ParseError);
}

TEST_CASE("label round trip") {
  for (const char* s : {"XZZXI", "Y", "-ZZ", "iY", "-iY", "IIIII", "-XYZI"}) {
    CHECK(to_label(from_label(s)) == s);
  }
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 2000; ++rep) {
    PauliString p = random_pauli(rng, 1 + static_cast<int>(rng() % 12));
    CHECK(from_label(to_label(p)) == p);
  }
}

TEST_CASE("weight_profile counts") {
  WeightProfile w = weight_profile(from_label("XIYZY"));
  CHECK(w.wt == 4);
  CHECK(w.wt_x == 3);
  CHECK(w.wt_z == 3);
  CHECK(w.n_x == 1);
  CHECK(w.n_y == 2);
  CHECK(w.n_z == 1);
  CHECK(w.wt_x + w.wt_z - w.wt == 2);

  CHECK(weight_profile(from_label("IIIII")) == WeightProfile{});

  WeightProfile v = weight_profile(from_label("XZZXI"));
  CHECK(v.wt == 4);
  CHECK(v.wt_x == 2);
  CHECK(v.wt_z == 2);
  CHECK(v.n_y == 0);
}

TEST_CASE("weight identity n_Y = wt_X + wt_Z - wt over random strings") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10000; ++rep) {
    PauliString p = random_pauli(rng, 1 + static_cast<int>(rng() % 20));
    WeightProfile w = weight_profile(p);
    CHECK(w.n_y == w.wt_x + w.wt_z - w.wt);
    CHECK(w.wt == w.n_x + w.n_y + w.n_z);
    CHECK(w.wt_x == w.n_x + w.n_y);
    CHECK(w.wt_z == w.n_z + w.n_y);
    CHECK(w.wt <= p.n);
  }
}

TEST_CASE("is_symmetric") {
  CHECK_FALSE(is_symmetric(from_label("Y")));
  CHECK(is_symmetric(from_label("YY")));
  CHECK(is_symmetric(from_label("XZZXI")));
}

TEST_CASE("symmetry matches dense transpose for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
      for (std::uint64_t z = 0; z < (1ull << n); ++z) {
        PauliString p{n, x, z, static_cast<std::uint8_t>(std::popcount(x & z) & 3)};
        Matrix m = dense_from_pauli(p);
        bool transpose_equal = true;
        for (std::size_t r = 0; r < m.size(); ++r)
          for (std::size_t c = 0; c < m.size(); ++c)
            if (m[r][c] != m[c][r]) transpose_equal = false;
        CHECK(transpose_equal == is_symmetric(p));
      }
    }
  }
}

TEST_CASE("multiply fixed products") {
  PauliString x = from_label("X"), z = from_label("Z");
  PauliString xz = multiply(x, z);
  CHECK(xz.x_mask == 1u);
  CHECK(xz.z_mask == 1u);
  CHECK(to_label(xz) == "-iY");

  CHECK(to_label(multiply(z, x)) == "iY");
  CHECK(multiply(x, x) == identity(1));
  CHECK_THROWS_AS(multiply(x, from_label("XX")), DimensionError);
}

TEST_CASE("multiply agrees with the dense matrix oracle") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 500; ++rep) {
    int n = 1 + static_cast<int>(rng() % 3);
    PauliString p = random_pauli(rng, n);
    PauliString q = random_pauli(rng, n);
    CHECK(dense_from_pauli(multiply(p, q)) == matmul(dense_from_pauli(p), dense_from_pauli(q)));
  }
}

TEST_CASE("multiply is associative and self-products are scaled identity") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    int n = 1 + static_cast<int>(rng() % 10);
    PauliString p = random_pauli(rng, n);
    PauliString q = random_pauli(rng, n);
    PauliString r = random_pauli(rng, n);
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));

    PauliString sq = multiply(p, p);
    CHECK(sq.x_mask == 0u);
    CHECK(sq.z_mask == 0u);
    CHECK((sq.phase_exp == 0 || sq.phase_exp == 2));

    bool phase_agrees = multiply(p, q).phase_exp == multiply(q, p).phase_exp;
    CHECK(phase_agrees == commutes(p, q));
  }
}

TEST_CASE("commutes") {
  CHECK_FALSE(commutes(from_label("X"), from_label("Z")));
  CHECK_FALSE(commutes(from_label("XXX"), from_label("ZZZ")));
  CHECK(commutes(from_label("XX"), from_label("ZZ")));
  CHECK(commutes(from_label("XZZXI"), from_label("IXZZX")));
  CHECK_THROWS_AS(commutes(from_label("X"), from_label("XX")), DimensionError);
}

TEST_CASE("apply_to_basis fixed cases") {
  CHECK(apply_to_basis(from_label("Z"), 1) == std::pair<std::uint64_t, int>{1, 2});
  CHECK(apply_to_basis(from_label("Y"), 0) == std::pair<std::uint64_t, int>{1, 1});
  // |01> has qubit 1 set, i.e. basis index 2.
  CHECK(apply_to_basis(from_label("XZ"), 2) == std::pair<std::uint64_t, int>{3, 2});
  CHECK_THROWS_AS(apply_to_basis(from_label("XZ"), 4), DimensionError);
}

TEST_CASE("apply_to_basis agrees with dense columns") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 400; ++rep) {
    int n = 1 + static_cast<int>(rng() % 3);
    PauliString p = random_pauli(rng, n);
    Matrix m = dense_from_pauli(p);
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
      auto [y, phase] = apply_to_basis(p, x);
      for (std::uint64_t row = 0; row < (1ull << n); ++row) {
        CInt expect = row == y ? i_pow(phase) : CInt{0, 0};
        CHECK(m[kron_row(row, n)][kron_row(x, n)] == expect);
      }
    }
  }
}

TEST_CASE("weight class sizes and order") {
  CHECK(weight_class_size(3, 0) == 1);
  CHECK(weight_class_size(3, 1) == 9);
  CHECK(weight_class_size(5, 4) == 405);
  CHECK_THROWS_AS(weight_class_size(3, 4), DimensionError);

  std::vector<std::string> first;
  for (const PauliString& p : WeightClassRange(3, 1)) first.push_back(to_label(p));
  CHECK(first == std::vector<std::string>{"XII", "YII", "ZII", "IXI", "IYI", "IZI", "IIX", "IIY", "IIZ"});
}

TEST_CASE("weight class enumeration is exact, unique, and sliceable") {
  for (int n : {3, 5}) {
    for (int i = 0; i <= n; ++i) {
      std::set<std::string> seen;
      std::uint64_t count = 0;
      for (const PauliString& p : WeightClassRange(n, i)) {
        CHECK(weight_profile(p).wt == i);
        CHECK(p.phase_exp == (weight_profile(p).n_y & 3));
        seen.insert(to_label(p));
        ++count;
      }
      CHECK(count == weight_class_size(n, i));
      CHECK(seen.size() == count);
    }
  }

  // Slices by subset rank concatenate to the full class.
  WeightClassRange full(5, 3);
  std::vector<PauliString> whole(full.begin(), full.end());
  std::vector<PauliString> pieces;
  std::uint64_t subsets = full.subset_count();
  for (std::uint64_t lo = 0; lo < subsets; lo += 3) {
    WeightClassRange part(5, 3, lo, std::min(lo + 3, subsets));
    pieces.insert(pieces.end(), part.begin(), part.end());
  }
  CHECK(pieces == whole);
}

TEST_CASE("permute_qubits relabels letters") {
  PauliString p = from_label("XYZ");
  CHECK(to_label(permute_qubits(p, {2, 0, 1})) == "YZX");
  CHECK_THROWS_AS(permute_qubits(p, {0, 0, 1}), ValidationError);
}

TEST_CASE("hermiticity predicate") {
  CHECK(is_hermitian(from_label("Y")));
  CHECK(is_hermitian(from_label("-XZ")));
  CHECK_FALSE(is_hermitian(from_label("iX")));
  CHECK(sign_exponent(from_label("-YY")) == 2);
}
