#pragma once

// Line-oriented parsing helpers shared by the file-format readers.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qwe::detail {

struct TextLine {
  int number = 0;
  std::string text;
};

// Strips '#' comments, trims whitespace, and drops blank lines, keeping
// 1-based line numbers.
std::vector<TextLine> significant_lines(std::istream& in);

[[noreturn]] void parse_fail(int line, const std::string& what);

std::int64_t parse_int64(const std::string& text, int line, const char* what);
double parse_double(const std::string& text, int line, const char* what);

// Returns the value of a "key=value" token or fails with the line number.
std::string expect_key(const std::string& token, const char* key, int line);

std::vector<std::string> split_words(const std::string& text);

}  // namespace qwe::detail
