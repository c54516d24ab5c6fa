#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "bethck/errors.hpp"
#include "bethck/upset.hpp"
#include "bethck/world.hpp"

namespace bethck::detail {

// Hand-rolled scanner shared by the small text formats.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool peek_is(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool consume(std::string_view tok) {
    if (!peek_is(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!consume(tok)) fail("expected '" + std::string(tok) + "'");
  }

  bool peek_ident_char() {
    skip_ws();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  std::string read_ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start])))
      fail("expected identifier", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  // Consumes `word` only when it is a whole identifier.
  bool consume_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
      return false;
    pos_ = after;
    return true;
  }

  std::string read_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Nat read_nat() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected natural number", start);
    if (digits.size() > 18) fail("number too large", start);
    return std::stoull(digits);
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

UPSet parse_upset_expr(TextCursor& in);
World parse_world_spec(TextCursor& in);

}  // namespace bethck::detail
