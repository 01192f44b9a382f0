#include "qwe/stabilizer.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>

#include "qwe/detail/text.hpp"

namespace qwe {

namespace {

// Symplectic binary vector (x|z); column c < n addresses x_c, column n + c
// addresses z_c.
struct SympVec {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  bool is_zero() const { return x == 0 && z == 0; }
  friend SympVec operator^(SympVec a, SympVec b) { return {a.x ^ b.x, a.z ^ b.z}; }
  friend bool operator==(SympVec a, SympVec b) = default;
  friend bool operator<(SympVec a, SympVec b) { return a.x != b.x ? a.x < b.x : a.z < b.z; }
};

SympVec to_vec(const PauliString& p) { return {p.x_mask, p.z_mask}; }

PauliString unsigned_pauli(int n, SympVec v) {
  return PauliString{n, v.x, v.z, static_cast<std::uint8_t>(std::popcount(v.x & v.z) & 3)};
}

int symp_form(SympVec a, SympVec b) {
  return (std::popcount(a.x & b.z) ^ std::popcount(a.z & b.x)) & 1;
}

int column_bit(SympVec v, int n, int col) {
  return col < n ? static_cast<int>((v.x >> col) & 1u) : static_cast<int>((v.z >> (col - n)) & 1u);
}

// Reduced row echelon basis over GF(2), pivot columns ascending (x before z).
class Gf2Basis {
 public:
  explicit Gf2Basis(int n) : n_(n) {}

  // Inserts v if independent; returns false when v reduces to zero.
  bool insert(SympVec v) {
    v = reduce(v);
    if (v.is_zero()) return false;
    int pivot = lowest_column(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (column_bit(rows_[r], n_, pivot)) rows_[r] = rows_[r] ^ v;
    }
    std::size_t at = 0;
    while (at < rows_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + at, v);
    pivots_.insert(pivots_.begin() + at, pivot);
    return true;
  }

  // Canonical coset representative of v modulo the row space.
  SympVec reduce(SympVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (column_bit(v, n_, pivots_[r])) v = v ^ rows_[r];
    }
    return v;
  }

  bool contains(SympVec v) const { return reduce(v).is_zero(); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int lowest_column(SympVec v) const {
    for (int c = 0; c < 2 * n_; ++c) {
      if (column_bit(v, n_, c)) return c;
    }
    return 2 * n_;
  }

  int n_;
  std::vector<SympVec> rows_;
  std::vector<int> pivots_;
};

Gf2Basis row_space_of(const StabilizerGroup& s) {
  Gf2Basis basis(s.n);
  for (const PauliString& g : s.generators) basis.insert(to_vec(g));
  return basis;
}

// Signed basis of the x-trivial (diagonal) subgroup, obtained by eliminating
// x columns with exact Pauli row operations.
std::vector<PauliString> diagonal_subgroup_basis(const StabilizerGroup& s) {
  std::vector<PauliString> rows = s.generators;
  std::vector<bool> used(rows.size(), false);
  for (int col = 0; col < s.n; ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && ((rows[r].x_mask >> col) & 1u)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    used[pivot] = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot && ((rows[r].x_mask >> col) & 1u)) rows[r] = multiply(rows[r], rows[pivot]);
    }
  }
  std::vector<PauliString> diag;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!used[r]) diag.push_back(rows[r]);
  }
  return diag;
}

// Basis state |x0> with positive projector diagonal: solve z_d . x0 = sign_d
// over GF(2) for the diagonal subgroup basis, free variables zero.
std::uint64_t canonical_seed(const StabilizerGroup& s) {
  std::vector<std::pair<std::uint64_t, int>> rows;  // (z_mask, rhs)
  for (const PauliString& d : diagonal_subgroup_basis(s)) {
    rows.emplace_back(d.z_mask, sign_exponent(d) == 2 ? 1 : 0);
  }
  std::vector<int> pivots;
  std::vector<std::pair<std::uint64_t, int>> reduced;
  for (auto row : rows) {
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if ((row.first >> pivots[r]) & 1u) {
        row.first ^= reduced[r].first;
        row.second ^= reduced[r].second;
      }
    }
    if (row.first == 0) {
      if (row.second != 0) {
        throw ValidationError("-I is in the generated group");  // unreachable after validation
      }
      continue;
    }
    int pivot = std::countr_zero(row.first);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if ((reduced[r].first >> pivot) & 1u) {
        reduced[r].first ^= row.first;
        reduced[r].second ^= row.second;
      }
    }
    reduced.push_back(row);
    pivots.push_back(pivot);
  }
  std::uint64_t seed = 0;
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    if (reduced[r].second) seed |= 1ull << pivots[r];
  }
  return seed;
}

using SparseState = std::vector<std::pair<std::uint64_t, GaussianInt>>;

SparseState apply_pauli(const PauliString& p, const SparseState& state) {
  SparseState out;
  out.reserve(state.size());
  for (const auto& [basis, value] : state) {
    auto [y, phase] = apply_to_basis(p, basis);
    out.emplace_back(y, value.times_i_pow(static_cast<unsigned>(phase)));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseState add_states(const SparseState& a, const SparseState& b) {
  SparseState out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      GaussianInt sum = a[i].second + b[j].second;
      if (!sum.is_zero()) out.emplace_back(a[i].first, sum);
      ++i;
      ++j;
    }
  }
  return out;
}

// Divides out the common integer factor; returns the state and its squared norm.
std::pair<SparseState, std::uint64_t> normalize_state(SparseState state) {
  std::uint64_t common = 0;
  for (const auto& [basis, value] : state) {
    common = std::gcd(common, detail::unsigned_magnitude(value.re));
    common = std::gcd(common, detail::unsigned_magnitude(value.im));
  }
  std::int64_t norm_sq = 0;
  for (auto& [basis, value] : state) {
    value.re /= static_cast<std::int64_t>(common);
    value.im /= static_cast<std::int64_t>(common);
    norm_sq = detail::checked_add(norm_sq, value.norm_sq());
  }
  return {std::move(state), static_cast<std::uint64_t>(norm_sq)};
}

// +1: equal, -1: negated, 0: neither.
int compare_states(const SparseState& a, const SparseState& b) {
  if (a.size() != b.size()) return 0;
  int verdict = 0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].first != b[t].first) return 0;
    const GaussianInt &u = a[t].second, &v = b[t].second;
    int here;
    if (u == v) {
      here = 1;
    } else if (u.re == -v.re && u.im == -v.im) {
      here = -1;
    } else {
      return 0;
    }
    if (verdict == 0) verdict = here;
    if (verdict != here) return 0;
  }
  return verdict;
}

// Normalized projection of |seed> onto the code space: entries gcd-reduced,
// scale = resulting squared norm.
std::pair<SparseState, std::uint64_t> project_seed(const StabilizerGroup& s, std::uint64_t seed) {
  std::map<std::uint64_t, GaussianInt> accum;
  for_each_group_element(s, [&](const PauliString& g) {
    auto [y, phase] = apply_to_basis(g, seed);
    accum[y] += GaussianInt{1, 0}.times_i_pow(static_cast<unsigned>(phase));
  });
  SparseState state;
  for (const auto& [basis, value] : accum) {
    if (!value.is_zero()) state.emplace_back(basis, value);
  }
  if (state.empty()) {
    throw ValidationError("projector annihilates the canonical seed");  // unreachable
  }
  return normalize_state(std::move(state));
}

struct SynthesisData {
  SparseState seed_state;
  std::uint64_t scale = 1;
  LogicalBasis basis;
  std::vector<SympVec> z_vecs;
  std::vector<SympVec> x_vecs;
};

// Pure logical of one letter type: a mask commuting with every generator
// (null space of the opposite-part rows) whose class lies outside the group.
bool find_pure_type_logical(const StabilizerGroup& s, const Gf2Basis& rows, bool x_type,
                            SympVec& out) {
  std::vector<std::uint64_t> reduced;
  std::vector<int> pivots;
  for (const PauliString& g : s.generators) {
    std::uint64_t row = x_type ? g.z_mask : g.x_mask;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if ((row >> pivots[r]) & 1u) row ^= reduced[r];
    }
    if (row == 0) continue;
    int pivot = std::countr_zero(row);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if ((reduced[r] >> pivot) & 1u) reduced[r] ^= row;
    }
    reduced.push_back(row);
    pivots.push_back(pivot);
  }
  std::vector<std::uint64_t> null_basis;
  std::vector<bool> is_pivot(s.n, false);
  for (int p : pivots) is_pivot[p] = true;
  for (int free_col = 0; free_col < s.n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::uint64_t v = 1ull << free_col;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if ((reduced[r] >> free_col) & 1u) v |= 1ull << pivots[r];
    }
    null_basis.push_back(v);
  }
  std::uint64_t combos = 1ull << null_basis.size();
  for (std::uint64_t combo = 1; combo < combos; ++combo) {
    std::uint64_t mask = 0;
    for (std::size_t t = 0; t < null_basis.size(); ++t) {
      if ((combo >> t) & 1u) mask ^= null_basis[t];
    }
    SympVec vec = x_type ? SympVec{mask, 0} : SympVec{0, mask};
    if (!rows.contains(vec)) {
      out = rows.reduce(vec);
      return true;
    }
  }
  return false;
}

SynthesisData derive_canonical_basis(const StabilizerGroup& s) {
  SynthesisData out;
  std::uint64_t seed = canonical_seed(s);
  std::tie(out.seed_state, out.scale) = project_seed(s, seed);
  if (s.k == 0) return out;

  Gf2Basis rows = row_space_of(s);

  // Coset representatives spanning N(S)/S.
  std::vector<SympVec> logicals;
  Gf2Basis combined = rows;
  for (const PauliString& c : centralizer_basis(s)) {
    SympVec r = combined.reduce(to_vec(c));
    if (!r.is_zero()) {
      logicals.push_back(rows.reduce(to_vec(c)));
      combined.insert(r);
    }
  }
  if (logicals.size() != static_cast<std::size_t>(2 * s.k)) {
    throw ValidationError("internal error: logical quotient has unexpected rank");
  }

  auto class_rep = [&](std::uint64_t combo) {
    SympVec v{};
    for (std::size_t t = 0; t < logicals.size(); ++t) {
      if ((combo >> t) & 1u) v = v ^ logicals[t];
    }
    return rows.reduce(v);
  };

  // Logical Z classes. A mixed CSS presentation with unequal check-type
  // counts keeps the concatenated-code grading (logical Z is the pure logical
  // of the minority type; this is what makes the standard Shor presentation
  // come out swapped). Everything else grades by the classes that fix the
  // projected seed.
  if (s.k == 1 && s.n % 2 == 1) {
    int pure_x = 0, pure_z = 0;
    bool css = true;
    for (const PauliString& g : s.generators) {
      if (g.x_mask != 0 && g.z_mask != 0) css = false;
      else if (g.x_mask != 0) ++pure_x;
      else ++pure_z;
    }
    if (css && pure_x >= 1 && pure_z >= 1 && pure_x != pure_z) {
      SympVec preferred{};
      if (find_pure_type_logical(s, rows, /*x_type=*/pure_x < pure_z, preferred)) {
        out.z_vecs.push_back(preferred);
      }
    }
  }
  if (out.z_vecs.empty()) {
    Gf2Basis fixer_span = rows;
    std::uint64_t combos = 1ull << logicals.size();
    for (std::uint64_t combo = 1;
         combo < combos && out.z_vecs.size() < static_cast<std::size_t>(s.k); ++combo) {
      SympVec rep = class_rep(combo);
      if (fixer_span.contains(rep)) continue;
      PauliString candidate = unsigned_pauli(s.n, rep);
      if (compare_states(apply_pauli(candidate, out.seed_state), out.seed_state) == 0) continue;
      fixer_span.insert(rep);
      out.z_vecs.push_back(rep);
    }
  }
  if (out.z_vecs.size() != static_cast<std::size_t>(s.k)) {
    throw ValidationError("internal error: could not find the grading logical classes");
  }

  // Logical X partners: anticommute with their own Z, commute with the rest;
  // prefer even-Y representatives, then the smaller reduced (x, z).
  std::uint64_t combos = 1ull << logicals.size();
  for (int j = 0; j < s.k; ++j) {
    bool found = false;
    SympVec best{};
    int best_y_parity = 2;
    for (std::uint64_t combo = 1; combo < combos; ++combo) {
      SympVec rep = class_rep(combo);
      if (rep.is_zero()) continue;
      bool ok = true;
      for (int i = 0; i < s.k && ok; ++i) {
        ok = symp_form(rep, out.z_vecs[i]) == (i == j ? 1 : 0);
      }
      for (std::size_t t = 0; t < out.x_vecs.size() && ok; ++t) {
        ok = symp_form(rep, out.x_vecs[t]) == 0;
      }
      if (!ok) continue;
      int y_parity = std::popcount(rep.x & rep.z) & 1;
      if (!found || y_parity < best_y_parity ||
          (y_parity == best_y_parity && rep < best)) {
        found = true;
        best = rep;
        best_y_parity = y_parity;
      }
    }
    if (!found) throw ValidationError("internal error: no symplectic partner for logical Z");
    out.x_vecs.push_back(best);
  }

  // Representatives. When a class is the class of a transversal X^n or Z^n,
  // use that literal operator so the synthesized labels see it exactly.
  std::uint64_t ones = s.n == 64 ? ~0ull : (1ull << s.n) - 1;
  SympVec xt{ones, 0}, zt{0, ones};
  auto is_logical_vec = [&](SympVec t) {
    for (const PauliString& g : s.generators) {
      if (symp_form(t, to_vec(g)) != 0) return false;
    }
    return !rows.contains(t);
  };
  bool xt_logical = is_logical_vec(xt);
  bool zt_logical = is_logical_vec(zt);
  auto representative = [&](SympVec cls) {
    if (xt_logical && cls == rows.reduce(xt)) return unsigned_pauli(s.n, xt);
    if (zt_logical && cls == rows.reduce(zt)) return unsigned_pauli(s.n, zt);
    return unsigned_pauli(s.n, cls);
  };
  for (int j = 0; j < s.k; ++j) {
    out.basis.z_ops.push_back(representative(out.z_vecs[j]));
    out.basis.x_ops.push_back(representative(out.x_vecs[j]));
  }

  // Grade the projected seed into the joint +1 eigenvector of the logical Zs.
  SparseState state = out.seed_state;
  for (int j = 0; j < s.k; ++j) {
    SparseState projected = add_states(state, apply_pauli(out.basis.z_ops[j], state));
    state = projected.empty() ? apply_pauli(out.basis.x_ops[j], state) : std::move(projected);
  }
  std::tie(out.seed_state, out.scale) = normalize_state(std::move(state));
  return out;
}

CodeSpace codewords_from(const StabilizerGroup& s, const SynthesisData& data) {
  std::vector<CodeSpace::ExactEntries> words;
  std::uint64_t count = 1ull << s.k;
  words.reserve(count);
  for (std::uint64_t b = 0; b < count; ++b) {
    SparseState state = data.seed_state;
    for (int j = 0; j < s.k; ++j) {
      if ((b >> j) & 1u) state = apply_pauli(data.basis.x_ops[j], state);
    }
    CodeSpace::ExactEntries word;
    word.scale = data.scale;
    word.amplitudes = std::move(state);
    words.push_back(std::move(word));
  }
  return CodeSpace::from_amplitude_table(s.n, std::move(words));
}

}  // namespace

StabilizerGroup validate_group(std::vector<PauliString> generators) {
  if (generators.empty()) throw ValidationError("a stabilizer group needs at least one generator");
  int n = generators[0].n;
  for (const PauliString& g : generators) {
    if (g.n != n) {
      throw DimensionError("generator " + to_label(g) + " has " + std::to_string(g.n) +
                           " qubits, expected " + std::to_string(n));
    }
    int sign = sign_exponent(g);
    if (sign != 0 && sign != 2) {
      throw ValidationError("generator " + to_label(g) + " is not a +/-1 signed Pauli string");
    }
  }
  if (generators.size() > static_cast<std::size_t>(n)) {
    throw ValidationError("more generators than qubits");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!commutes(generators[i], generators[j])) {
        throw ValidationError("generators " + to_label(generators[i]) + " and " +
                              to_label(generators[j]) + " do not commute");
      }
    }
  }

  // Independence, tracking which input subset each reduced row came from.
  // A dependent subset multiplies to exactly +/-I, separating the two errors.
  std::vector<SympVec> reduced_rows;  // ascending pivot order
  std::vector<int> row_pivots;
  std::vector<std::uint64_t> combos;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    SympVec v = to_vec(generators[i]);
    std::uint64_t combo = 1ull << i;
    for (std::size_t r = 0; r < reduced_rows.size(); ++r) {
      if (column_bit(v, n, row_pivots[r])) {
        v = v ^ reduced_rows[r];
        combo ^= combos[r];
      }
    }
    if (v.is_zero()) {
      PauliString product = identity(n);
      for (std::size_t t = 0; t < generators.size(); ++t) {
        if ((combo >> t) & 1u) product = multiply(product, generators[t]);
      }
      if (product.phase_exp == 2) {
        throw ValidationError("-I is in the generated group (generator " +
                              to_label(generators[i]) + " closes a subset multiplying to -I)");
      }
      throw ValidationError("generator " + to_label(generators[i]) +
                            " is dependent on earlier generators");
    }
    int pivot = 0;
    while (!column_bit(v, n, pivot)) ++pivot;
    std::size_t at = 0;
    while (at < reduced_rows.size() && row_pivots[at] < pivot) ++at;
    reduced_rows.insert(reduced_rows.begin() + at, v);
    row_pivots.insert(row_pivots.begin() + at, pivot);
    combos.insert(combos.begin() + at, combo);
  }

  StabilizerGroup s;
  s.n = n;
  s.k = n - static_cast<int>(generators.size());
  s.generators = std::move(generators);
  return s;
}

std::vector<PauliString> enumerate_group(const StabilizerGroup& s) {
  std::vector<PauliString> out;
  out.reserve(1ull << s.generators.size());
  for_each_group_element(s, [&](const PauliString& g) { out.push_back(g); });
  return out;
}

std::vector<PauliString> centralizer_basis(const StabilizerGroup& s) {
  // Commutation with g is ordinary orthogonality to the swapped vector
  // (z_g | x_g); the centralizer is the null space of those rows.
  int n = s.n;
  std::vector<SympVec> rows;
  std::vector<int> pivots;
  for (const PauliString& g : s.generators) {
    SympVec v{g.z_mask, g.x_mask};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (column_bit(v, n, pivots[r])) v = v ^ rows[r];
    }
    if (v.is_zero()) continue;  // cannot happen for validated groups
    int pivot = 0;
    while (!column_bit(v, n, pivot)) ++pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (column_bit(rows[r], n, pivot)) rows[r] = rows[r] ^ v;
    }
    rows.push_back(v);
    pivots.push_back(pivot);
  }

  std::vector<bool> is_pivot(2 * n, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<PauliString> basis;
  basis.reserve(n + s.k);
  for (int free_col = 0; free_col < 2 * n; ++free_col) {
    if (is_pivot[free_col]) continue;
    SympVec v{};
    if (free_col < n) {
      v.x |= 1ull << free_col;
    } else {
      v.z |= 1ull << (free_col - n);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (column_bit(rows[r], n, free_col)) {
        if (pivots[r] < n) {
          v.x |= 1ull << pivots[r];
        } else {
          v.z |= 1ull << (pivots[r] - n);
        }
      }
    }
    basis.push_back(unsigned_pauli(n, v));
  }
  return basis;
}

std::vector<PauliString> enumerate_centralizer(const StabilizerGroup& s) {
  std::vector<PauliString> out;
  out.reserve(1ull << (s.n + s.k));
  for_each_centralizer_element(s, [&](const PauliString& p) { out.push_back(p); });
  return out;
}

LogicalBasis canonical_logical_basis(const StabilizerGroup& s) {
  return derive_canonical_basis(s).basis;
}

CodeSpace synthesize_codewords(const StabilizerGroup& s) {
  return codewords_from(s, derive_canonical_basis(s));
}

CodeSpace synthesize_codewords(const StabilizerGroup& s, const LogicalBasis& basis) {
  if (basis.z_ops.size() != static_cast<std::size_t>(s.k) ||
      basis.x_ops.size() != static_cast<std::size_t>(s.k)) {
    throw ValidationError("logical basis must supply k logical Z and k logical X operators");
  }
  Gf2Basis rows = row_space_of(s);
  for (int j = 0; j < s.k; ++j) {
    const PauliString& z = basis.z_ops[j];
    const PauliString& x = basis.x_ops[j];
    for (const PauliString& p : {z, x}) {
      if (p.n != s.n) throw DimensionError("logical operator qubit count mismatch");
      int sign = sign_exponent(p);
      if (sign != 0 && sign != 2) {
        throw ValidationError("logical operator " + to_label(p) + " is not +/-1 Hermitian");
      }
      for (const PauliString& g : s.generators) {
        if (!commutes(p, g)) {
          throw ValidationError("logical operator " + to_label(p) +
                                " does not commute with generator " + to_label(g));
        }
      }
      if (rows.contains(to_vec(p))) {
        throw ValidationError("logical operator " + to_label(p) + " lies in the stabilizer");
      }
    }
    for (int i = 0; i < s.k; ++i) {
      if (symp_form(to_vec(basis.x_ops[j]), to_vec(basis.z_ops[i])) != (i == j ? 1 : 0) ||
          (i != j && symp_form(to_vec(basis.z_ops[j]), to_vec(basis.z_ops[i])) != 0) ||
          (i != j && symp_form(to_vec(basis.x_ops[j]), to_vec(basis.x_ops[i])) != 0)) {
        throw ValidationError("logical operators do not satisfy the symplectic pairing");
      }
    }
  }

  // Extend the group by the signed logical Zs so the projected seed is their
  // joint +1 eigenvector, then build the rest of the ladder.
  StabilizerGroup extended;
  extended.n = s.n;
  extended.k = 0;
  extended.generators = s.generators;
  extended.generators.insert(extended.generators.end(), basis.z_ops.begin(), basis.z_ops.end());

  SynthesisData data;
  std::uint64_t seed = canonical_seed(extended);
  std::tie(data.seed_state, data.scale) = project_seed(extended, seed);
  data.basis = basis;
  return codewords_from(s, data);
}

bool is_real_code(const StabilizerGroup& s) {
  for (const PauliString& g : s.generators) {
    if (weight_profile(g).n_y % 2 != 0) return false;
  }
  return true;
}

bool all_even_check(const StabilizerGroup& s) {
  if (s.n % 2 == 0) return false;
  for (const PauliString& g : s.generators) {
    WeightProfile w = weight_profile(g);
    if (w.n_x % 2 || w.n_y % 2 || w.n_z % 2) return false;
  }
  return true;
}

const char* to_string(TransversalVerdict v) {
  switch (v) {
    case TransversalVerdict::exactly_transversal: return "exactly_transversal";
    case TransversalVerdict::swapped: return "swapped";
    default: return "not_transversal";
  }
}

const char* to_string(LogicalLabel l) {
  switch (l) {
    case LogicalLabel::outside_centralizer: return "outside centralizer";
    case LogicalLabel::in_stabilizer: return "stabilizer element";
    case LogicalLabel::logical_x: return "logical X";
    case LogicalLabel::logical_y: return "logical Y";
    case LogicalLabel::logical_z: return "logical Z";
    default: return "undetermined";
  }
}

TransversalityReport transversality_report(const StabilizerGroup& s) {
  TransversalityReport report;
  report.n_odd = (s.n % 2) == 1;
  report.x_in_centralizer = true;
  report.z_in_centralizer = true;
  for (const PauliString& g : s.generators) {
    WeightProfile w = weight_profile(g);
    if (w.wt_z % 2) report.x_in_centralizer = false;  // X^n commutes iff wt_Z even
    if (w.wt_x % 2) report.z_in_centralizer = false;  // Z^n commutes iff wt_X even
  }
  std::uint64_t ones = s.n == 64 ? ~0ull : (1ull << s.n) - 1;
  SympVec x_vec{ones, 0};
  SympVec z_vec{0, ones};
  Gf2Basis rows = row_space_of(s);
  report.x_in_group = report.x_in_centralizer && rows.contains(x_vec);
  report.z_in_group = report.z_in_centralizer && rows.contains(z_vec);

  auto basic_label = [](bool in_centralizer, bool in_group) {
    if (!in_centralizer) return LogicalLabel::outside_centralizer;
    if (in_group) return LogicalLabel::in_stabilizer;
    return LogicalLabel::undetermined;
  };
  report.x_implements = basic_label(report.x_in_centralizer, report.x_in_group);
  report.z_implements = basic_label(report.z_in_centralizer, report.z_in_group);

  bool x_logical = report.x_in_centralizer && !report.x_in_group;
  bool z_logical = report.z_in_centralizer && !report.z_in_group;
  if (report.n_odd && (x_logical || z_logical)) {
    if (s.k != 1) {
      throw PreconditionError("classifying transversal logicals requires k = 1, got k = " +
                              std::to_string(s.k));
    }
    SynthesisData data = derive_canonical_basis(s);
    SympVec z_class = rows.reduce(data.z_vecs[0]);
    SympVec x_class = rows.reduce(data.x_vecs[0]);
    SympVec y_class = rows.reduce(z_class ^ x_class);
    auto classify = [&](SympVec v) {
      SympVec r = rows.reduce(v);
      if (r == z_class) return LogicalLabel::logical_z;
      if (r == x_class) return LogicalLabel::logical_x;
      if (r == y_class) return LogicalLabel::logical_y;
      return LogicalLabel::undetermined;
    };
    if (x_logical) report.x_implements = classify(x_vec);
    if (z_logical) report.z_implements = classify(z_vec);
  }

  if (report.n_odd && report.x_implements == LogicalLabel::logical_x &&
      report.z_implements == LogicalLabel::logical_z) {
    report.verdict = TransversalVerdict::exactly_transversal;
  } else if (report.n_odd && report.x_implements == LogicalLabel::logical_z &&
             report.z_implements == LogicalLabel::logical_x) {
    report.verdict = TransversalVerdict::swapped;
  } else {
    report.verdict = TransversalVerdict::not_transversal;
  }
  return report;
}

StabilizerGroup hadamard_conjugate(const StabilizerGroup& s) {
  std::vector<PauliString> conjugated;
  conjugated.reserve(s.generators.size());
  for (const PauliString& g : s.generators) {
    PauliString h;
    h.n = g.n;
    h.x_mask = g.z_mask;
    h.z_mask = g.x_mask;
    // H X^a Z^b H = (-1)^{a.b} X^b Z^a per qubit, i.e. a sign flip per Y.
    h.phase_exp = static_cast<std::uint8_t>(
        (g.phase_exp + 2 * (std::popcount(g.x_mask & g.z_mask) & 1)) & 3);
    conjugated.push_back(h);
  }
  return validate_group(std::move(conjugated));
}

StabilizerGroup parse_stabilizer_stream(std::istream& in) {
  std::vector<detail::TextLine> lines = detail::significant_lines(in);
  if (lines.empty()) throw ParseError("empty stabilizer file");
  std::vector<PauliString> generators;
  int n = -1;
  for (const auto& [number, text] : lines) {
    PauliString g;
    try {
      g = from_label(text);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what());
    }
    if (n < 0) n = g.n;
    if (g.n != n) {
      throw ParseError("line " + std::to_string(number) + ": generator has " +
                       std::to_string(g.n) + " qubits but earlier lines have " +
                       std::to_string(n));
    }
    generators.push_back(g);
  }
  return validate_group(std::move(generators));
}

}  // namespace qwe
