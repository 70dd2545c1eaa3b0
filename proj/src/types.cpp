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

#include "dill/types.hpp"

#include "lexer.hpp"
#include "parse_internal.hpp"

namespace dill {

std::strong_ordering LType::operator<=>(const LType& o) const {
  if (auto c = static_cast<int>(kind) <=> static_cast<int>(o.kind); c != 0) return c;
  if (auto c = atom <=> o.atom; c != 0) return c;
  return kids <=> o.kids;
}

LType dual(const LType& a) {
  switch (a.kind) {
    case LType::Kind::Atom: return LType::coatom(a.atom);
    case LType::Kind::CoAtom: return LType::atom_of(a.atom);
    case LType::Kind::Tens: return LType::par(dual(a.left()), dual(a.right()));
    case LType::Kind::Par: return LType::tens(dual(a.left()), dual(a.right()));
    case LType::Kind::Excl: return LType::intn(dual(a.body()));
    case LType::Kind::Int: return LType::excl(dual(a.body()));
  }
  return a;
}

namespace {

void print_into(const LType& a, std::string& out, bool nested) {
  switch (a.kind) {
    case LType::Kind::Atom: out += a.atom; return;
    case LType::Kind::CoAtom: out += "~" + a.atom; return;
    case LType::Kind::Excl:
    case LType::Kind::Int:
      out += a.kind == LType::Kind::Excl ? "!" : "?";
      print_into(a.body(), out, true);
      return;
    case LType::Kind::Tens:
    case LType::Kind::Par:
      if (nested) out += "(";
      print_into(a.left(), out, true);
      out += a.kind == LType::Kind::Tens ? " tens " : " par ";
      print_into(a.right(), out, true);
      if (nested) out += ")";
      return;
  }
}

}  // namespace

std::string print_type(const LType& a) {
  std::string out;
  print_into(a, out, false);
  return out;
}

namespace detail {

bool is_lower_ident(const std::string& s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) return false;
  return true;
}

LType parse_type_prefix(Lexer& lx) {
  if (lx.accept("!")) return LType::excl(parse_type_prefix(lx));
  if (lx.accept("?")) return LType::intn(parse_type_prefix(lx));
  if (lx.accept("(")) {
    LType t = parse_type_expr(lx);
    lx.expect(")");
    return t;
  }
  bool co = lx.accept("~");
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::Ident || !is_lower_ident(t.text) || t.text == "tens" ||
      t.text == "par")
    lx.fail("expected a type");
  std::string name = lx.next().text;
  return co ? LType::coatom(name) : LType::atom_of(name);
}

LType parse_type_expr(Lexer& lx) {
  LType t = parse_type_prefix(lx);
  while (true) {
    if (lx.accept("tens")) {
      t = LType::tens(std::move(t), parse_type_prefix(lx));
    } else if (lx.accept("par")) {
      t = LType::par(std::move(t), parse_type_prefix(lx));
    } else {
      return t;
    }
  }
}

}  // namespace detail

LType parse_type(const std::string& text) {
  detail::Lexer lx(text);
  LType t = detail::parse_type_expr(lx);
  if (!lx.at_end()) lx.fail("trailing input after type");
  return t;
}

void collect_atoms(const LType& a, std::set<std::string>& out) {
  if (a.kind == LType::Kind::Atom || a.kind == LType::Kind::CoAtom) out.insert(a.atom);
  for (const auto& k : a.kids) collect_atoms(k, out);
}

std::size_t type_size(const LType& a) {
  std::size_t n = 1;
  for (const auto& k : a.kids) n += type_size(k);
  return n;
}

}  // namespace dill
