#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "rbax/errors.hpp"

namespace rbax::detail {

enum class Tok {
  ident,
  integer,
  lbracket,
  rbracket,
  lparen,
  rparen,
  plus,
  minus,
  star,
  slash,
  dot,
  comma,
  caret,
  bar,
  end,
};

struct Token {
  Tok kind = Tok::end;
  std::string_view text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      throw ParseError(std::string("expected ") + what, cur_.pos);
    }
    return next();
  }

  bool accept(Tok kind) {
    if (cur_.kind != kind) return false;
    advance();
    return true;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    cur_.pos = pos_;
    if (pos_ >= src_.size()) {
      cur_.kind = Tok::end;
      cur_.text = {};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      cur_.kind = Tok::ident;
      cur_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      cur_.kind = Tok::integer;
      cur_.text = src_.substr(start, pos_ - start);
      return;
    }
    cur_.text = src_.substr(pos_, 1);
    ++pos_;
    switch (c) {
      case '[': cur_.kind = Tok::lbracket; return;
      case ']': cur_.kind = Tok::rbracket; return;
      case '(': cur_.kind = Tok::lparen; return;
      case ')': cur_.kind = Tok::rparen; return;
      case '+': cur_.kind = Tok::plus; return;
      case '-': cur_.kind = Tok::minus; return;
      case '*': cur_.kind = Tok::star; return;
      case '/': cur_.kind = Tok::slash; return;
      case '.': cur_.kind = Tok::dot; return;
      case ',': cur_.kind = Tok::comma; return;
      case '^': cur_.kind = Tok::caret; return;
      case '|': cur_.kind = Tok::bar; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_;
};

}  // namespace rbax::detail
