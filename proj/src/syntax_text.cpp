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

#include <set>

#include "dill/syntax.hpp"
#include "parse_internal.hpp"

namespace dill {

namespace {

void print_into(const Tree& t, std::string& out, bool nested);

void print_annot(const Tree& t, std::string& out) {
  if (!t->annot) return;
  out += ":";
  // Annotations are parsed as prefix types, so binary types need parentheses.
  std::string s = print_type(*t->annot);
  if (t->annot->binary()) s = "(" + s + ")";
  out += s;
}

void print_into(const Tree& t, std::string& out, bool nested) {
  switch (t->kind) {
    case TreeKind::Var: out += t->var.str(); return;
    case TreeKind::Weak: out += "w"; print_annot(t, out); return;
    case TreeKind::Coweak: out += "cw"; print_annot(t, out); return;
    case TreeKind::Tens:
    case TreeKind::Par:
      if (nested) out += "(";
      print_into(t->kids[0], out, true);
      out += t->kind == TreeKind::Tens ? " tens " : " par ";
      print_into(t->kids[1], out, true);
      if (nested) out += ")";
      return;
    case TreeKind::Der:
    case TreeKind::Coder:
    case TreeKind::Contr:
    case TreeKind::Cocontr:
    case TreeKind::Box:
      out += tree_kind_name(t->kind);
      if (t->kind == TreeKind::Box) out += "{" + print_net(*t->content) + "}";
      out += "(";
      for (std::size_t i = 0; i < t->kids.size(); ++i) {
        if (i) out += ", ";
        print_into(t->kids[i], out, false);
      }
      out += ")";
      return;
  }
}

}  // namespace

std::string print_tree(const Tree& t) {
  std::string out;
  print_into(t, out, false);
  return out;
}

std::string print_cut(const Cut& c) {
  return "<" + print_tree(c.left) + " | " + print_tree(c.right) + ">";
}

std::string print_simple(const SimpleNet& p) {
  std::string out = "(";
  if (!p.trees().empty()) {
    out += "[";
    for (std::size_t i = 0; i < p.trees().size(); ++i) {
      if (i) out += ", ";
      out += print_tree(p.trees()[i]);
    }
    out += "] ";
  }
  out += ";";
  for (std::size_t i = 0; i < p.cuts().size(); ++i) {
    out += i ? ", " : " ";
    out += print_cut(p.cuts()[i]);
  }
  out += ")";
  return out;
}

std::string print_net(const Net& n) {
  if (n.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, t] : n.entries()) {
    if (!first) out += " + ";
    first = false;
    if (!t.coef.is_one()) out += t.coef.str() + " * ";
    out += print_simple(t.rep);
  }
  return out;
}

namespace detail {

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"w",  "cw", "d",   "cd",   "c",
                                          "cc", "box", "tens", "par"};
  return k;
}

Tree parse_tree_expr(Lexer& lx);

std::optional<LType> parse_annot(Lexer& lx) {
  if (!lx.accept(":")) return std::nullopt;
  return parse_type_prefix(lx);
}

std::vector<Tree> parse_args(Lexer& lx, std::size_t exact) {
  lx.expect("(");
  std::vector<Tree> args;
  if (!lx.is_punct(")")) {
    args.push_back(parse_tree_expr(lx));
    while (lx.accept(",")) args.push_back(parse_tree_expr(lx));
  }
  lx.expect(")");
  if (exact != static_cast<std::size_t>(-1) && args.size() != exact)
    lx.fail("expected " + std::to_string(exact) + " arguments");
  return args;
}

Tree parse_tree_atom(Lexer& lx) {
  if (lx.accept("(")) {
    Tree t = parse_tree_expr(lx);
    lx.expect(")");
    return t;
  }
  if (lx.accept("~")) {
    const Token& t = lx.peek();
    if (t.kind != Token::Kind::Ident || !is_lower_ident(t.text) || keywords().count(t.text))
      lx.fail("expected a variable after '~'");
    return tree::var(lx.next().text, true);
  }
  const Token& t = lx.peek();
  if (t.kind != Token::Kind::Ident) lx.fail("expected a tree");
  std::string word = t.text;
  if (word == "w" || word == "cw") {
    lx.next();
    auto a = parse_annot(lx);
    return word == "w" ? tree::weak(a) : tree::coweak(a);
  }
  if (word == "d" || word == "cd") {
    lx.next();
    auto args = parse_args(lx, 1);
    return word == "d" ? tree::der(args[0]) : tree::coder(args[0]);
  }
  if (word == "c" || word == "cc") {
    lx.next();
    auto args = parse_args(lx, 2);
    return word == "c" ? tree::contr(args[0], args[1]) : tree::cocontr(args[0], args[1]);
  }
  if (word == "box") {
    Token at = lx.next();
    lx.expect("{");
    Net content = parse_net_expr(lx, static_cast<std::size_t>(-1));
    lx.expect("}");
    auto args = parse_args(lx, static_cast<std::size_t>(-1));
    if (content.is_zero()) content = Net(args.size() + 1);
    if (content.width() != args.size() + 1)
      throw ParseError(at.line, at.column,
                       "box content width " + std::to_string(content.width()) +
                           " does not match " + std::to_string(args.size()) + " arguments");
    return tree::box(content, std::move(args));
  }
  if (!is_lower_ident(word) || keywords().count(word)) lx.fail("expected a tree");
  lx.next();
  return tree::var(word, false);
}

Tree parse_tree_expr(Lexer& lx) {
  Tree t = parse_tree_atom(lx);
  while (true) {
    if (lx.accept("tens")) {
      t = tree::tens(t, parse_tree_atom(lx));
    } else if (lx.accept("par")) {
      t = tree::par(t, parse_tree_atom(lx));
    } else {
      return t;
    }
  }
}

SimpleNet parse_simple(Lexer& lx) {
  Token at = lx.peek();
  lx.expect("(");
  std::vector<Tree> trees;
  if (lx.accept("[")) {
    if (!lx.is_punct("]")) {
      trees.push_back(parse_tree_expr(lx));
      while (lx.accept(",")) trees.push_back(parse_tree_expr(lx));
    }
    lx.expect("]");
  }
  lx.expect(";");
  std::vector<Cut> cuts;
  if (lx.is_punct("<")) {
    do {
      lx.expect("<");
      Tree l = parse_tree_expr(lx);
      lx.expect("|");
      Tree r = parse_tree_expr(lx);
      lx.expect(">");
      cuts.push_back({l, r});
    } while (lx.accept(","));
  }
  lx.expect(")");
  try {
    return SimpleNet(std::move(trees), std::move(cuts));
  } catch (const MalformedNet& e) {
    throw ParseError(at.line, at.column, e.what());
  }
}

}  // namespace

Scalar parse_scalar(Lexer& lx) {
  bool neg = false;
  while (lx.is_punct("-") || lx.is_punct("+")) neg ^= lx.next().text == "-";
  if (lx.peek().kind != Token::Kind::Number) lx.fail("expected a number");
  std::string text = lx.next().text;
  if (lx.is_punct("/") && lx.peek(1).kind == Token::Kind::Number) {
    lx.next();
    text += "/" + lx.next().text;
  }
  Token here = lx.peek();
  try {
    Scalar s = Scalar::parse(text);
    return neg ? -s : s;
  } catch (const Error& e) {
    throw ParseError(here.line, here.column, e.what());
  }
}

Net parse_net_expr(Lexer& lx, std::size_t width_hint) {
  struct Term {
    Scalar c;
    SimpleNet p;
  };
  std::vector<Term> terms;
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
      c = parse_scalar(lx);
      have_coef = true;
    }
    if (neg) c = -c;
    if (have_coef && !lx.is_punct("*")) {
      if (!c.is_zero()) lx.fail("expected '*' after coefficient");
      continue;  // a literal zero term
    }
    if (have_coef) lx.expect("*");
    terms.push_back({c, parse_simple(lx)});
  }
  std::size_t width = terms.empty() ? width_hint : terms.front().p.width();
  if (width == static_cast<std::size_t>(-1)) width = 0;
  Net n(width);
  for (const auto& t : terms) {
    if (t.p.width() != width) lx.fail("simple nets of different widths in a sum");
    n.add(t.p, t.c);
  }
  return n;
}

}  // namespace detail

Net parse_net(const std::string& text, std::size_t width_hint) {
  detail::Lexer lx(text);
  Net n = detail::parse_net_expr(lx, width_hint);
  if (!lx.at_end()) lx.fail("trailing input after net");
  return n;
}

Tree parse_tree(const std::string& text) {
  detail::Lexer lx(text);
  Tree t = detail::parse_tree_expr(lx);
  if (!lx.at_end()) lx.fail("trailing input after tree");
  return t;
}

}  // namespace dill
