#pragma once

// Line-oriented cursor shared by the equation and word parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "relsg/equation.hpp"
#include "relsg/errors.hpp"

namespace relsg::detail {

/// Drops a trailing comment: a `#` not followed by a digit.
inline std::string_view strip_comment(std::string_view line) {
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '#' && (k + 1 >= line.size() || !std::isdigit(static_cast<unsigned char>(line[k + 1])))) {
      return line.substr(0, k);
    }
  }
  return line;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_identifier() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string identifier() {
    if (!at_identifier()) fail("expected an identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ElementId number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 0xFFFFFFFEull) fail("number too large");
      ++pos_;
    }
    return static_cast<ElementId>(v);
  }

  bool at_constant() {
    const char c = peek();
    return c == '#' || c == '[';
  }
  /// `#k` or `[i0, i1, ...]`.
  ElementRef element_ref() {
    if (accept('#')) {
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a digit after '#'");
      }
      return number();
    }
    expect('[');
    PowerTuple t;
    if (!accept(']')) {
      do {
        t.coords.push_back(number());
      } while (accept(','));
      expect(']');
    }
    if (t.coords.empty()) fail("empty power constant");
    return t;
  }

  Term term() {
    if (at_constant()) return Constant{element_ref()};
    if (at_identifier()) return Variable{identifier()};
    fail("expected a variable or constant");
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    throw ParseError(message, line_, pos_ + 1);
  }

  std::size_t column() const { return pos_ + 1; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace relsg::detail
