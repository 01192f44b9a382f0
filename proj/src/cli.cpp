#include "qwe/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>

#include "qwe/catalog.hpp"
#include "qwe/enumerator.hpp"

namespace qwe::cli {

namespace {

struct CommonOptions {
  std::string catalog_name;
  std::string stabilizer_path;
  std::string codewords_path;
  std::string method = "auto";
  std::string format = "table";
  int threads = 0;
  bool slow = false;
};

// One resolved input: a stabilizer group, a codeword space, or both (groups
// synthesize their codewords on demand).
struct Source {
  std::optional<StabilizerGroup> group;
  std::optional<CodeSpace> space;
  const CatalogEntry* entry = nullptr;
};

void add_source_flags(CLI::App* cmd, CommonOptions& opt, bool with_method) {
  cmd->add_option("name", opt.catalog_name, "catalog entry name");
  cmd->add_option("--stabilizer", opt.stabilizer_path, "stabilizer generator file");
  cmd->add_option("--codewords", opt.codewords_path, "codeword file");
  if (with_method) {
    cmd->add_option("--method", opt.method, "auto|brute|group")
        ->check(CLI::IsMember({"auto", "brute", "group"}));
  }
  cmd->add_option("--format", opt.format, "table|lines")
      ->check(CLI::IsMember({"table", "lines"}));
  cmd->add_option("--threads", opt.threads, "worker bound for brute-force enumeration");
  cmd->add_flag("--slow", opt.slow, "enable n >= 11 brute force");
}

Source resolve_source(const CommonOptions& opt) {
  int given = !opt.catalog_name.empty();
  given += !opt.stabilizer_path.empty();
  given += !opt.codewords_path.empty();
  if (given != 1) {
    throw ValidationError("exactly one input is required: a catalog name, --stabilizer, or --codewords");
  }
  Source src;
  if (!opt.stabilizer_path.empty()) {
    src.group = load_stabilizer_file(opt.stabilizer_path);
    return src;
  }
  if (!opt.codewords_path.empty()) {
    src.space = load_codeword_file(opt.codewords_path);
    return src;
  }
  src.entry = find_code(opt.catalog_name);
  if (!src.entry) throw ValidationError("unknown catalog name '" + opt.catalog_name + "'");
  if (src.entry->kind == CatalogEntry::Kind::stabilizer) {
    src.group = group_for(*src.entry);
  } else {
    if (!std::filesystem::exists(src.entry->codeword_path)) {
      throw ValidationError(src.entry->display_name + " needs an external codeword file at '" +
                            src.entry->codeword_path + "'");
    }
    src.space = load_codeword_file(src.entry->codeword_path);
  }
  return src;
}

void check_slow_gate(const CommonOptions& opt, int n) {
  if (n >= 11 && !opt.slow) {
    throw PreconditionError("brute-force enumeration at n = " + std::to_string(n) +
                            " requires --slow");
  }
}

EnumeratorPair compute_pair(const Source& src, const CommonOptions& opt) {
  std::string method = opt.method;
  if (method == "auto") method = src.group ? "group" : "brute";
  if (method == "group") {
    if (!src.group) throw ValidationError("--method group requires a stabilizer source");
    return stabilizer_enumerators(*src.group);
  }
  const CodeSpace space = src.space ? *src.space : synthesize_codewords(*src.group);
  check_slow_gate(opt, space.n());
  BruteForceOptions options;
  options.threads = opt.threads;
  options.allow_large = opt.slow;
  return brute_force_enumerators(space, options);
}

std::string render_row(const std::vector<Scalar>& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i].str();
  }
  out += ")";
  return out;
}

std::string render_row(const std::vector<Rational>& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += row[i].str();
  }
  out += ")";
  return out;
}

void print_pair(std::ostream& out, const EnumeratorPair& pair, const std::string& format) {
  if (format == "lines") {
    out << pair.render_lines();
  } else {
    out << "A = " << render_row(pair.a) << "\n";
    out << "B = " << render_row(pair.b) << "\n";
  }
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

int run_enumerate(const CommonOptions& opt, std::ostream& out) {
  Source src = resolve_source(opt);
  print_pair(out, compute_pair(src, opt), opt.format);
  return 0;
}

int run_distance(const CommonOptions& opt, std::ostream& out) {
  Source src = resolve_source(opt);
  std::optional<int> d = distance(compute_pair(src, opt));
  if (d) {
    out << *d << "\n";
  } else {
    out << "no discrepancy\n";
  }
  return 0;
}

int run_check(const CommonOptions& opt, std::ostream& out) {
  Source src = resolve_source(opt);
  if (src.group) {
    const StabilizerGroup& s = *src.group;
    out << "n = " << s.n << ", k = " << s.k << "\n";
    out << "real_code: " << yes_no(is_real_code(s)) << "\n";
    out << "all_even: " << yes_no(all_even_check(s)) << "\n";
    TransversalityReport r = transversality_report(s);
    out << "n_parity: " << (r.n_odd ? "odd" : "even") << "\n";
    out << "x_in_centralizer: " << yes_no(r.x_in_centralizer) << "\n";
    out << "z_in_centralizer: " << yes_no(r.z_in_centralizer) << "\n";
    out << "x_in_group: " << yes_no(r.x_in_group) << "\n";
    out << "z_in_group: " << yes_no(r.z_in_group) << "\n";
    out << "x_implements: " << to_string(r.x_implements) << "\n";
    out << "z_implements: " << to_string(r.z_implements) << "\n";
    out << "verdict: " << to_string(r.verdict) << "\n";
  } else {
    const CodeSpace& space = *src.space;
    out << "n = " << space.n() << ", K = " << space.dim() << "\n";
    out << "real: " << yes_no(space.is_real()) << "\n";
    out << "x_transversal_on_labels: " << yes_no(x_transversal_on_labels(space)) << "\n";
    out << "z_transversal_on_labels: " << yes_no(z_transversal_on_labels(space)) << "\n";
  }
  return 0;
}

bool print_index_checks(std::ostream& out, const char* label, const std::vector<IndexCheck>& checks) {
  bool all = true;
  std::string failures;
  for (const IndexCheck& c : checks) {
    if (!c.pass) {
      all = false;
      if (!failures.empty()) failures += ",";
      failures += std::to_string(c.index);
    }
  }
  out << label << (all ? "pass" : "FAIL at i=" + failures) << "\n";
  return all;
}

bool scalars_close(const Scalar& x, const Scalar& y) {
  if (x.backend() == Backend::exact && y.backend() == Backend::exact) return x.rat() == y.rat();
  return std::abs(x.approx() - y.approx()) <= 1e-9 * std::max(1.0, std::abs(y.approx()));
}

// Codeword-level identities; exact equality on the exact backend, 1e-9
// relative tolerance on the floating one.
bool run_identity_checks(std::ostream& out, const CodeSpace& space, const EnumeratorPair& pair) {
  std::vector<Scalar> restricted = restricted_a_coefficients(space);
  CdDecomposition cd = cd_decomposition(space);
  bool restricted_ok = true;
  bool split_ok = true;
  bool even_ok = true;
  for (int i = 0; i <= pair.n; ++i) {
    restricted_ok = restricted_ok && scalars_close(restricted[i], pair.a[i]);
    if (pair.backend == Backend::exact) {
      split_ok = split_ok && pair.a[i].rat() + cd.c[i].rat() + cd.d[i].rat() == pair.b[i].rat();
      if (i % 2 == 0) {
        even_ok = even_ok && cd.c[i].rat().is_zero() && cd.d[i].rat().is_zero();
      }
    } else {
      double sum = pair.a[i].approx() + cd.c[i].approx() + cd.d[i].approx();
      split_ok = split_ok && scalars_close(Scalar::floating(sum), pair.b[i]);
      if (i % 2 == 0) {
        double tol = 1e-9 * std::max(1.0, pair.b[i].approx());
        even_ok = even_ok && std::abs(cd.c[i].approx()) <= tol &&
                  std::abs(cd.d[i].approx()) <= tol;
      }
    }
  }
  out << "restricted A = A: " << (restricted_ok ? "pass" : "FAIL") << "\n";
  out << "B = A + C + D: " << (split_ok ? "pass" : "FAIL") << "\n";
  out << "C_i = D_i = 0 for even i: " << (even_ok ? "pass" : "FAIL") << "\n";
  return restricted_ok && split_ok && even_ok;
}

int run_verify(const CommonOptions& opt, std::ostream& out) {
  Source src = resolve_source(opt);
  EnumeratorPair pair;
  TheoremContext ctx;
  std::optional<CodeSpace> identity_space;
  bool identity_skipped = false;

  if (src.group) {
    const StabilizerGroup& s = *src.group;
    pair = stabilizer_enumerators(s);
    ctx = theorem_context_for(s);
    TransversalityReport r = transversality_report(s);
    out << "verdict: " << to_string(r.verdict) << "\n";
    if (ctx.hypotheses_asserted) {
      StabilizerGroup normalized = s;
      if (r.verdict == TransversalVerdict::swapped) {
        out << "note: transversal X and Z implement the opposite logicals; "
               "verifying the Hadamard-conjugated group (same enumerators)\n";
        normalized = hadamard_conjugate(s);
      }
      if (s.n <= 9 || opt.slow) {
        identity_space = synthesize_codewords(normalized);
      } else {
        identity_skipped = true;
      }
    }
  } else {
    const CodeSpace& space = *src.space;
    check_slow_gate(opt, space.n());
    BruteForceOptions options;
    options.threads = opt.threads;
    options.allow_large = opt.slow;
    pair = brute_force_enumerators(space, options);
    ctx = theorem_context_for(space);
    if (ctx.hypotheses_asserted) identity_space = space;
  }

  TheoremReport report = theorem_check(pair, ctx);
  if (!report.applicable) {
    out << "theorems: not applicable (" << report.note << ")\n";
    return 0;
  }
  out << "theorems: applicable (" << report.note << ")\n";
  bool ok = true;
  ok &= print_index_checks(out, "A_i = 0 for odd i: ", report.a_odd_zero);
  ok &= print_index_checks(out, "A_i = B_i for even i: ", report.a_even_equals_b);
  out << "distance: ";
  if (report.code_distance) {
    out << *report.code_distance << (report.distance_odd ? " (odd): pass" : " (even): FAIL") << "\n";
    ok = ok && report.distance_odd;
  } else {
    out << "no discrepancy: FAIL\n";
    ok = false;
  }

  if (identity_space) {
    ok &= run_identity_checks(out, *identity_space, pair);
  } else if (identity_skipped) {
    out << "restricted identities: skipped (n = " << pair.n << "; pass --slow)\n";
  }
  out << "overall: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_catalog(const CommonOptions& opt, std::ostream& out) {
  if (opt.catalog_name.empty()) {
    for (const CatalogEntry& e : builtin_codes()) {
      out << e.name << "  " << e.display_name << "  ";
      if (e.kind == CatalogEntry::Kind::stabilizer) {
        out << "stabilizer, d=" << e.expected_distance;
      } else {
        out << "external codewords (" << e.codeword_path << "), d=" << e.expected_distance;
      }
      out << "\n";
    }
    return 0;
  }
  const CatalogEntry* e = find_code(opt.catalog_name);
  if (!e) throw ValidationError("unknown catalog name '" + opt.catalog_name + "'");
  out << e->display_name << "\n";
  out << "expected A = " << render_row(e->expected_a) << "\n";
  out << "expected B = " << render_row(e->expected_b) << "\n";
  out << "expected d = " << e->expected_distance << "\n";
  if (e->kind == CatalogEntry::Kind::external_codewords) {
    bool present = std::filesystem::exists(e->codeword_path);
    out << "codeword file: " << e->codeword_path << (present ? " (present)" : " (absent)") << "\n";
    return 0;
  }
  StabilizerGroup s = group_for(*e);
  EnumeratorPair pair = stabilizer_enumerators(s);
  std::vector<Scalar> ea, eb;
  for (const Rational& v : e->expected_a) ea.push_back(Scalar::exact(v));
  for (const Rational& v : e->expected_b) eb.push_back(Scalar::exact(v));
  bool rows_match = pair.a == ea && pair.b == eb;
  std::optional<int> d = distance(pair);
  bool d_match = d.has_value() && *d == e->expected_distance;
  bool verdict_match = !e->expected_verdict.has_value() ||
                       transversality_report(s).verdict == *e->expected_verdict;
  out << "computed A = " << render_row(pair.a) << "\n";
  out << "computed B = " << render_row(pair.b) << "\n";
  out << "computed d = ";
  if (d) {
    out << *d;
  } else {
    out << "no discrepancy";
  }
  out << "\n";
  out << "rows: " << (rows_match ? "match" : "MISMATCH") << "\n";
  out << "distance: " << (d_match ? "match" : "MISMATCH") << "\n";
  out << "flags: " << (verdict_match ? "match" : "MISMATCH") << "\n";
  return rows_match && d_match && verdict_match ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"quantum weight enumerators for stabilizer and explicit codes"};
  app.require_subcommand(0, 1);

  CommonOptions enum_opt, dist_opt, check_opt, verify_opt, catalog_opt;
  CLI::App* cmd_enum = app.add_subcommand("enumerate", "print the A and B enumerators");
  add_source_flags(cmd_enum, enum_opt, /*with_method=*/true);
  CLI::App* cmd_dist = app.add_subcommand("distance", "print the code distance");
  add_source_flags(cmd_dist, dist_opt, /*with_method=*/true);
  CLI::App* cmd_check = app.add_subcommand("check", "print the predicate battery");
  add_source_flags(cmd_check, check_opt, /*with_method=*/false);
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the theorem and identity checks");
  add_source_flags(cmd_verify, verify_opt, /*with_method=*/false);
  CLI::App* cmd_catalog = app.add_subcommand("catalog", "list or show built-in codes");
  cmd_catalog->add_option("name", catalog_opt.catalog_name, "catalog entry name");

  std::vector<const char*> argv;
  argv.push_back("qwe");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_enum)) return run_enumerate(enum_opt, out);
    if (app.got_subcommand(cmd_dist)) return run_distance(dist_opt, out);
    if (app.got_subcommand(cmd_check)) return run_check(check_opt, out);
    if (app.got_subcommand(cmd_verify)) return run_verify(verify_opt, out);
    if (app.got_subcommand(cmd_catalog)) return run_catalog(catalog_opt, out);
    err << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qwe::cli
