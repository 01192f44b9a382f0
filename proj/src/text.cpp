#include "qwe/detail/text.hpp"

#include <istream>
#include <sstream>

#include "qwe/error.hpp"

namespace qwe::detail {

std::vector<TextLine> significant_lines(std::istream& in) {
  std::vector<TextLine> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::size_t begin = raw.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = raw.find_last_not_of(" \t\r");
    lines.push_back({number, raw.substr(begin, end - begin + 1)});
  }
  return lines;
}

void parse_fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_int64(const std::string& text, int line, const char* what) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(text, &used);
    if (used != text.size()) parse_fail(line, std::string("trailing characters in ") + what);
    return v;
  } catch (const std::invalid_argument&) {
    parse_fail(line, std::string("expected an integer for ") + what + ", got '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ArithmeticError("line " + std::to_string(line) + ": " + what +
                          " exceeds the 64-bit range");
  }
}

double parse_double(const std::string& text, int line, const char* what) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) parse_fail(line, std::string("trailing characters in ") + what);
    return v;
  } catch (const std::out_of_range&) {
    parse_fail(line, std::string("out-of-range decimal for ") + what);
  } catch (const std::invalid_argument&) {
    parse_fail(line, std::string("expected a decimal for ") + what + ", got '" + text + "'");
  }
}

std::string expect_key(const std::string& token, const char* key, int line) {
  std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) {
    parse_fail(line, "expected '" + prefix + "...', got '" + token + "'");
  }
  return token.substr(prefix.size());
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace qwe::detail
