// Copyright 2026 The dill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DILL_SRC_LEXER_HPP
#define DILL_SRC_LEXER_HPP

#include <cctype>
#include <string>
#include <vector>

#include "dill/error.hpp"

namespace dill::detail {

struct Token {
  enum class Kind { Ident, Number, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

// Shared tokenizer for every textual format. '#' starts a line comment.
class Lexer {
public:
  explicit Lexer(const std::string& src) {
    std::size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (src[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
        ++i;
      }
    };
    while (i < src.size()) {
      unsigned char c = static_cast<unsigned char>(src[i]);
      if (std::isspace(c)) {
        advance(1);
        continue;
      }
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') advance(1);
        continue;
      }
      Token t;
      t.line = line;
      t.column = col;
      if (std::isalpha(c) || c == '_') {
        std::size_t j = i;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
          ++j;
        t.kind = Token::Kind::Ident;
        t.text = src.substr(i, j - i);
        advance(j - i);
      } else if (std::isdigit(c)) {
        std::size_t j = i;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        t.kind = Token::Kind::Number;
        t.text = src.substr(i, j - i);
        advance(j - i);
      } else if (c == '"') {
        std::size_t j = i + 1;
        while (j < src.size() && src[j] != '"') ++j;
        if (j == src.size()) throw ParseError(line, col, "unterminated string");
        t.kind = Token::Kind::String;
        t.text = src.substr(i + 1, j - i - 1);
        advance(j + 1 - i);
      } else {
        t.kind = Token::Kind::Punct;
        t.text = std::string(1, static_cast<char>(c));
        advance(1);
      }
      toks_.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.column = col;
    toks_.push_back(end);
  }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  Token next() {
    Token t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_punct(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
  }
  bool is_ident(const char* p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Ident && peek(ahead).text == p;
  }
  bool accept(const char* p) {
    if (is_punct(p) || is_ident(p)) {
      next();
      return true;
    }
    return false;
  }
  void expect(const char* p) {
    if (!accept(p)) fail(std::string("expected '") + p + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, msg + ", found " + got);
  }
  std::size_t position() const { return pos_; }
  void reset(std::size_t p) { pos_ = p; }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace dill::detail

#endif
