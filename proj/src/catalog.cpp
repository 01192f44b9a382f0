#include "qwe/catalog.hpp"

#include <fstream>

namespace qwe {

namespace {

std::vector<Rational> row(std::vector<Rational> values) { return values; }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    e.name = "five-qubit";
    e.display_name = "[[5,1,3]]";
    e.generators = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};  // cyclic shifts of XZZXI
    e.expected_a = row({1, 0, 0, 0, 15, 0});
    e.expected_b = row({1, 0, 0, 30, 15, 18});
    e.expected_distance = 3;
    e.expected_verdict = TransversalVerdict::exactly_transversal;
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "steane";
    e.display_name = "[[7,1,3]] Steane";
    // Hamming [7,4] checks, once as X-type and once as Z-type.
    e.generators = {"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"};
    e.expected_a = row({1, 0, 0, 0, 21, 0, 42, 0});
    e.expected_b = row({1, 0, 0, 21, 21, 126, 42, 45});
    e.expected_distance = 3;
    e.expected_verdict = TransversalVerdict::exactly_transversal;
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "shor";
    e.display_name = "[[9,1,3]] Shor";
    // ZZ pairs inside the blocks plus X blocks across them.
    e.generators = {"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII",
                    "IIIIIIZZI", "IIIIIIIZZ", "XXXXXXIII", "IIIXXXXXX"};
    e.expected_a = row({1, 0, 9, 0, 27, 0, 75, 0, 144, 0});
    e.expected_b = row({1, 0, 9, 39, 27, 207, 75, 333, 144, 189});
    e.expected_distance = 3;
    e.expected_verdict = TransversalVerdict::swapped;
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "eleven-one-five";
    e.display_name = "[[11,1,5]]";
    // Shortened from the cyclic length-12 self-dual code generated by the
    // shifts of XIIZIZZZIZII, then relettered qubit by qubit into the form
    // where X^11 and Z^11 are the logical pair. Accepted against the golden
    // rows below, which also certify the distance.
    e.generators = {"IIIIXZYYIXZ", "IIIIYYIYZZY", "IIIXIXIXXYY", "IIIYIIXYXZZ",
                    "IIXIIYZXZYI", "IIYIIIYYYYY", "IXIIIZIXZXX", "IYIIIIZZXYX",
                    "XIIIIXYXYXI", "YIIIIYXIZXZ"};
    e.expected_a = row({1, 0, 0, 0, 0, 0, 198, 0, 495, 0, 330, 0});
    e.expected_b = row({1, 0, 0, 0, 0, 198, 198, 990, 495, 1650, 330, 234});
    e.expected_distance = 5;
    e.expected_verdict = TransversalVerdict::exactly_transversal;
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "eleven-two-three";
    e.display_name = "((11,2,3))";
    e.kind = CatalogEntry::Kind::external_codewords;
    // Non-additive; the codewords must be supplied externally. The golden
    // rows stay as the conditional fixture.
    e.codeword_path = "data/eleven-two-three.codewords";
    e.expected_a = row({1, 0, 0, 0, Rational(110, 3), 0, 88, 0, 605, 0, Rational(880, 3), 0});
    e.expected_b = row({1, 0, 0, Rational(55, 3), Rational(110, 3), 88, 88, 1210, 605,
                        Rational(4400, 3), Rational(880, 3), 289});
    e.expected_distance = 3;
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_codes() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry* find_code(std::string_view name) {
  for (const CatalogEntry& e : builtin_codes()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

StabilizerGroup group_for(const CatalogEntry& entry) {
  if (entry.kind != CatalogEntry::Kind::stabilizer) {
    throw PreconditionError(entry.name + " is not a stabilizer entry");
  }
  std::vector<PauliString> gens;
  gens.reserve(entry.generators.size());
  for (const std::string& label : entry.generators) gens.push_back(from_label(label));
  return validate_group(std::move(gens));
}

StabilizerGroup load_stabilizer_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open stabilizer file '" + path + "'");
  try {
    return parse_stabilizer_stream(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

CodeSpace load_codeword_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open codeword file '" + path + "'");
  try {
    return parse_codeword_stream(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace qwe
