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


#ifndef DILL_SRC_TERM_TEXT_HPP
#define DILL_SRC_TERM_TEXT_HPP

#include <string>

#include "dill/algebra.hpp"
#include "parse_internal.hpp"

namespace dill::text {

// "c1 * t1 + c2 * t2 + ..."; a unit coefficient is omitted, "0" is empty.
template <class T, class F>
std::string print_comb(const LinComb<T>& c, F term) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [t, k] : c) {
    if (!out.empty()) out += " + ";
    if (!k.is_one()) out += k.str() + " * ";
    out += term(t);
  }
  return out;
}

// Parses the same shape; term() reads one summand and may return a sum.
template <class T, class F>
LinComb<T> parse_comb(detail::Lexer& lx, F term) {
  using detail::Token;
  LinComb<T> out;
  bool first = true;
  while (true) {
    bool neg = false;
    if (!first) {
      if (lx.accept("+")) {
      } else if (lx.accept("-")) {
        neg = true;
      } else {
        break;
      }
    }
    first = false;
    Scalar c(1);
    bool have_coef = false;
    if (lx.peek().kind == Token::Kind::Number || lx.is_punct("-")) {
      c = detail::parse_scalar(lx);
      have_coef = true;
    }
    if (neg) c = -c;
    if (have_coef && !lx.is_punct("*")) {
      if (!c.is_zero()) lx.fail("expected '*' after coefficient");
      continue;
    }
    if (have_coef) lx.expect("*");
    out.add(term().scaled(c));
  }
  return out;
}

}  // namespace dill::text

#endif
