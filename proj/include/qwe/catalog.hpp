#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwe/enumerator.hpp"
#include "qwe/rational.hpp"
#include "qwe/stabilizer.hpp"

namespace qwe {

// A built-in code with its golden enumerator rows (exact rationals, so the
// comparison is equality, never tolerance).
struct CatalogEntry {
  enum class Kind { stabilizer, external_codewords };

  std::string name;          // stable CLI identifier
  std::string display_name;  // e.g. "[[5,1,3]]"
  Kind kind = Kind::stabilizer;
  std::vector<std::string> generators;  // stabilizer entries
  std::string codeword_path;            // external entries: expected file location
  std::vector<Rational> expected_a;
  std::vector<Rational> expected_b;
  int expected_distance = 0;
  bool expected_real = true;
  std::optional<TransversalVerdict> expected_verdict;
};

const std::vector<CatalogEntry>& builtin_codes();

// nullptr when the name is unknown.
const CatalogEntry* find_code(std::string_view name);

// Validated group for a stabilizer entry.
StabilizerGroup group_for(const CatalogEntry& entry);

StabilizerGroup load_stabilizer_file(const std::string& path);
CodeSpace load_codeword_file(const std::string& path);

}  // namespace qwe
