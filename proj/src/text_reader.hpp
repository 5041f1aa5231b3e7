#pragma once

// Line/token reader shared by the text formats (VFI, GRAPH, VREP, HREP).

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyiso/errors.hpp"

namespace polyiso::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Advances to the next line that is not a comment. Blank lines are
  /// skipped when `skip_blank` is set, otherwise returned with no tokens.
  /// Returns false at end of input.
  bool next(bool skip_blank) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      tokenize(line);
      if (!tokens_.empty() && tokens_.front().text.front() == '#') continue;
      if (tokens_.empty() && skip_blank) continue;
      return true;
    }
    tokens_.clear();
    return false;
  }

  /// True if nothing but blank and comment lines remain.
  bool only_trailing_blank() { return !next(true); }

  std::size_t line() const noexcept { return line_no_; }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }

  [[noreturn]] void fail(std::size_t column, const std::string& what) const { throw ParseError(line_no_, column, what); }

  std::uint64_t to_uint(const Token& t) const {
    std::uint64_t v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e) fail(t.column, "expected a non-negative integer, got '" + std::string(t.text) + "'");
    return v;
  }

  /// Reads "<keyword> <a> <b>" and returns the two counts.
  std::pair<std::uint64_t, std::uint64_t> header2(std::string_view keyword) {
    if (!next(true)) throw ParseError(line_no_ + 1, 0, "missing '" + std::string(keyword) + "' header");
    if (tokens_.empty() || tokens_[0].text != keyword)
      fail(tokens_.empty() ? 0 : tokens_[0].column, "expected header '" + std::string(keyword) + "'");
    if (tokens_.size() != 3) fail(0, "header must be '" + std::string(keyword) + " <count> <count>'");
    return {to_uint(tokens_[1]), to_uint(tokens_[2])};
  }

 private:
  void tokenize(std::string_view line) {
    tokens_.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      tokens_.push_back({line.substr(i, j - i), i + 1});
      i = j;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
  std::vector<Token> tokens_;
};

std::string read_file(const std::string& path);

}  // namespace polyiso::detail
