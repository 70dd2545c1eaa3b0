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

#include "dill/dterm.hpp"

#include <algorithm>
#include <random>

#include "parse_internal.hpp"
#include "term_text.hpp"

namespace dill {

struct DTerm::Node {
  Kind kind = Kind::Var;
  std::string name;
  std::size_t index = 0;
  std::vector<DTerm> kids;   // Abs body, App / Diff head
  DComb arg;                 // App
  std::vector<DTerm> dargs;  // Diff, sorted
  std::size_t size = 1;
};

namespace {

template <class T>
int compare_comb(const LinComb<T>& a, const LinComb<T>& b) {
  auto i = a.begin(), j = b.begin();
  for (; i != a.end() && j != b.end(); ++i, ++j) {
    if (int c = compare(i->first, j->first)) return c;
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
  }
  if (i != a.end()) return 1;
  if (j != b.end()) return -1;
  return 0;
}

std::size_t comb_size(const DComb& c) {
  std::size_t n = 0;
  for (const auto& [t, k] : c) n += t.size();
  return n;
}

}  // namespace

DTerm DTerm::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  DTerm t;
  t.n_ = n;
  return t;
}

DTerm DTerm::bound(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bound;
  n->index = index;
  DTerm t;
  t.n_ = n;
  return t;
}

DTerm DTerm::abs(std::string hint, DTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->name = std::move(hint);
  n->size = 1 + body.size();
  n->kids.push_back(std::move(body));
  DTerm t;
  t.n_ = n;
  return t;
}

DTerm DTerm::app(DTerm head, DComb arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = 1 + head.size() + comb_size(arg);
  n->kids.push_back(std::move(head));
  n->arg = std::move(arg);
  DTerm t;
  t.n_ = n;
  return t;
}

DTerm DTerm::diff(DTerm head, std::vector<DTerm> args) {
  while (head.kind() == Kind::Diff) {
    args.insert(args.end(), head.dargs().begin(), head.dargs().end());
    head = head.head();
  }
  if (args.empty()) return head;
  std::sort(args.begin(), args.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Diff;
  n->size = 1 + head.size();
  for (const auto& a : args) n->size += a.size();
  n->kids.push_back(std::move(head));
  n->dargs = std::move(args);
  DTerm t;
  t.n_ = n;
  return t;
}

DTerm::Kind DTerm::kind() const { return n_->kind; }
const std::string& DTerm::name() const { return n_->name; }
std::size_t DTerm::index() const { return n_->index; }
const DTerm& DTerm::body() const { return n_->kids.at(0); }
const DTerm& DTerm::head() const { return n_->kids.at(0); }
const DComb& DTerm::arg() const { return n_->arg; }
const std::vector<DTerm>& DTerm::dargs() const { return n_->dargs; }
std::size_t DTerm::size() const { return n_->size; }

int compare(const DTerm& a, const DTerm& b) {
  if (a.n_ == b.n_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case DTerm::Kind::Var:
      return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    case DTerm::Kind::Bound:
      return a.index() < b.index() ? -1 : (a.index() > b.index() ? 1 : 0);
    case DTerm::Kind::Abs:
      return compare(a.body(), b.body());
    case DTerm::Kind::App:
      if (int c = compare(a.head(), b.head())) return c;
      return compare_comb(a.arg(), b.arg());
    case DTerm::Kind::Diff: {
      if (int c = compare(a.head(), b.head())) return c;
      const auto& x = a.dargs();
      const auto& y = b.dargs();
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
        if (int c = compare(x[i], y[i])) return c;
      return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
    }
  }
  return 0;
}

namespace dterm {

DComb var(const std::string& x) { return DComb(DTerm::var(x)); }

DComb lam(const std::string& x, const DComb& body) {
  DComb out;
  for (const auto& [t, c] : body) out.add(DTerm::abs(x, close_term(t, x)), c);
  return out;
}

DComb app(const DComb& head, const DComb& arg) {
  DComb out;
  for (const auto& [t, c] : head) out.add(DTerm::app(t, arg), c);
  return out;
}

DComb diff(const DComb& head, const DComb& arg) {
  DComb out;
  for (const auto& [t, c] : head)
    for (const auto& [u, d] : arg) out.add(DTerm::diff(t, {u}), c * d);
  return out;
}

}  // namespace dterm

namespace {

void collect_free(const DTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case DTerm::Kind::Var:
      out.insert(t.name());
      return;
    case DTerm::Kind::Bound:
      return;
    case DTerm::Kind::Abs:
      collect_free(t.body(), out);
      return;
    case DTerm::Kind::App:
      collect_free(t.head(), out);
      for (const auto& [u, c] : t.arg()) collect_free(u, out);
      return;
    case DTerm::Kind::Diff:
      collect_free(t.head(), out);
      for (const auto& u : t.dargs()) collect_free(u, out);
      return;
  }
}

// Applies f to every variable leaf, tracking the binder depth.
template <class F>
DTerm map_leaves(const DTerm& t, std::size_t depth, const F& f) {
  switch (t.kind()) {
    case DTerm::Kind::Var:
    case DTerm::Kind::Bound:
      return f(t, depth);
    case DTerm::Kind::Abs:
      return DTerm::abs(t.name(), map_leaves(t.body(), depth + 1, f));
    case DTerm::Kind::App: {
      DComb arg;
      for (const auto& [u, c] : t.arg()) arg.add(map_leaves(u, depth, f), c);
      return DTerm::app(map_leaves(t.head(), depth, f), arg);
    }
    case DTerm::Kind::Diff: {
      std::vector<DTerm> args;
      for (const auto& u : t.dargs()) args.push_back(map_leaves(u, depth, f));
      return DTerm::diff(map_leaves(t.head(), depth, f), args);
    }
  }
  return t;
}

// All combinations of one term from each factor, with the product weight.
void expand(const std::vector<DComb>& factors, std::size_t i, std::vector<DTerm>& cur,
            const Scalar& w, const std::function<void(const std::vector<DTerm>&, const Scalar&)>& k) {
  if (i == factors.size()) {
    k(cur, w);
    return;
  }
  for (const auto& [t, c] : factors[i]) {
    cur.push_back(t);
    expand(factors, i + 1, cur, w * c, k);
    cur.pop_back();
  }
}

DComb diff_of(const DComb& head, const std::vector<DComb>& args) {
  std::vector<DComb> factors{head};
  factors.insert(factors.end(), args.begin(), args.end());
  DComb out;
  std::vector<DTerm> cur;
  expand(factors, 0, cur, Scalar(1), [&](const std::vector<DTerm>& ts, const Scalar& w) {
    out.add(DTerm::diff(ts[0], std::vector<DTerm>(ts.begin() + 1, ts.end())), w);
  });
  return out;
}

DComb abs_of(const std::string& hint, const DComb& body) {
  DComb out;
  for (const auto& [t, c] : body) out.add(DTerm::abs(hint, t), c);
  return out;
}

}  // namespace

std::set<std::string> free_vars(const DTerm& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

std::set<std::string> free_vars(const DComb& t) {
  std::set<std::string> out;
  for (const auto& [u, c] : t) collect_free(u, out);
  return out;
}

DTerm open_term(const DTerm& body, const std::string& x) {
  return map_leaves(body, 0, [&](const DTerm& leaf, std::size_t depth) {
    if (leaf.kind() == DTerm::Kind::Bound && leaf.index() == depth) return DTerm::var(x);
    return leaf;
  });
}

DTerm close_term(const DTerm& t, const std::string& x) {
  return map_leaves(t, 0, [&](const DTerm& leaf, std::size_t depth) {
    if (leaf.kind() == DTerm::Kind::Var && leaf.name() == x) return DTerm::bound(depth);
    return leaf;
  });
}

std::string fresh_name(const std::set<std::string>& avoid) {
  for (std::size_t i = 0;; ++i) {
    std::string n = "_" + std::to_string(i);
    if (!avoid.count(n)) return n;
  }
}

DComb subst(const DTerm& m, const DComb& r, const std::string& x) {
  switch (m.kind()) {
    case DTerm::Kind::Var:
      return m.name() == x ? r : DComb(m);
    case DTerm::Kind::Bound:
      return DComb(m);
    case DTerm::Kind::Abs:
      return abs_of(m.name(), subst(m.body(), r, x));
    case DTerm::Kind::App: {
      DComb arg = subst(m.arg(), r, x);
      DComb out;
      for (const auto& [h, c] : subst(m.head(), r, x)) out.add(DTerm::app(h, arg), c);
      return out;
    }
    case DTerm::Kind::Diff: {
      std::vector<DComb> args;
      for (const auto& u : m.dargs()) args.push_back(subst(u, r, x));
      return diff_of(subst(m.head(), r, x), args);
    }
  }
  return {};
}

DComb subst(const DComb& m, const DComb& r, const std::string& x) {
  DComb out;
  for (const auto& [t, c] : m) out.add(subst(t, r, x).scaled(c));
  return out;
}

DComb dsubst(const DTerm& m, const DTerm& n, const std::string& x) {
  switch (m.kind()) {
    case DTerm::Kind::Var:
      return m.name() == x ? DComb(n) : DComb();
    case DTerm::Kind::Bound:
      return {};
    case DTerm::Kind::Abs:
      return abs_of(m.name(), dsubst(m.body(), n, x));
    case DTerm::Kind::App: {
      // (dM/dx . N) R + (D M . (dR/dx . N)) R
      DComb out;
      for (const auto& [h, c] : dsubst(m.head(), n, x)) out.add(DTerm::app(h, m.arg()), c);
      for (const auto& [u, c] : dsubst(m.arg(), DComb(n), x))
        out.add(DTerm::app(DTerm::diff(m.head(), {u}), m.arg()), c);
      return out;
    }
    case DTerm::Kind::Diff: {
      // One term for the head and one for each argument.
      DComb out;
      for (const auto& [h, c] : dsubst(m.head(), n, x)) out.add(DTerm::diff(h, m.dargs()), c);
      for (std::size_t i = 0; i < m.dargs().size(); ++i)
        for (const auto& [u, c] : dsubst(m.dargs()[i], n, x)) {
          std::vector<DTerm> args = m.dargs();
          args[i] = u;
          out.add(DTerm::diff(m.head(), args), c);
        }
      return out;
    }
  }
  return {};
}

DComb dsubst(const DComb& m, const DComb& n, const std::string& x) {
  DComb out;
  for (const auto& [t, c] : m)
    for (const auto& [u, d] : n) out.add(dsubst(t, u, x).scaled(c * d));
  return out;
}

namespace {

const DTerm& nth_term(const DComb& c, std::size_t k) {
  auto it = c.begin();
  std::advance(it, static_cast<long>(k));
  return it->first;
}

void collect_redexes(const DTerm& t, std::vector<std::size_t>& path, std::size_t target,
                     bool post, std::vector<DRedex>& out) {
  auto here = [&]() {
    if (t.kind() == DTerm::Kind::App && t.head().kind() == DTerm::Kind::Abs)
      out.push_back({target, path, DRedex::Kind::Beta, 0});
    if (t.kind() == DTerm::Kind::Diff && t.head().kind() == DTerm::Kind::Abs)
      for (std::size_t i = 0; i < t.dargs().size(); ++i)
        out.push_back({target, path, DRedex::Kind::DBeta, i});
  };
  if (!post) here();
  auto child = [&](std::size_t i, const DTerm& u) {
    path.push_back(i);
    collect_redexes(u, path, target, post, out);
    path.pop_back();
  };
  switch (t.kind()) {
    case DTerm::Kind::Var:
    case DTerm::Kind::Bound:
      break;
    case DTerm::Kind::Abs:
      child(0, t.body());
      break;
    case DTerm::Kind::App: {
      child(0, t.head());
      std::size_t i = 1;
      for (const auto& [u, c] : t.arg()) child(i++, u);
      break;
    }
    case DTerm::Kind::Diff:
      child(0, t.head());
      for (std::size_t i = 0; i < t.dargs().size(); ++i) child(i + 1, t.dargs()[i]);
      break;
  }
  if (post) here();
}

std::vector<DRedex> redexes(const DComb& t, bool post) {
  std::vector<DRedex> out;
  std::size_t k = 0;
  for (const auto& [u, c] : t) {
    std::vector<std::size_t> path;
    collect_redexes(u, path, k++, post, out);
  }
  return out;
}

DComb fire(const DTerm& t, const DRedex& r) {
  if (r.kind == DRedex::Kind::Beta) {
    if (t.kind() != DTerm::Kind::App || t.head().kind() != DTerm::Kind::Abs)
      throw NotARedex("not a beta redex");
    const DTerm& body = t.head().body();
    std::set<std::string> avoid = free_vars(body);
    for (const auto& v : free_vars(t.arg())) avoid.insert(v);
    std::string v = fresh_name(avoid);
    return subst(open_term(body, v), t.arg(), v);
  }
  if (t.kind() != DTerm::Kind::Diff || t.head().kind() != DTerm::Kind::Abs ||
      r.arg >= t.dargs().size())
    throw NotARedex("not a derivative redex");
  const DTerm& lam = t.head();
  std::set<std::string> avoid = free_vars(t);
  std::string v = fresh_name(avoid);
  std::vector<DTerm> rest = t.dargs();
  DTerm n = rest[r.arg];
  rest.erase(rest.begin() + static_cast<long>(r.arg));
  DComb out;
  for (const auto& [u, c] : dsubst(open_term(lam.body(), v), n, v))
    out.add(DTerm::diff(DTerm::abs(lam.name(), close_term(u, v)), rest), c);
  return out;
}

DComb step_at(const DTerm& t, const DRedex& r, std::size_t depth) {
  if (depth == r.path.size()) return fire(t, r);
  std::size_t i = r.path[depth];
  switch (t.kind()) {
    case DTerm::Kind::Var:
    case DTerm::Kind::Bound:
      break;
    case DTerm::Kind::Abs: {
      if (i != 0) break;
      std::string v = fresh_name(free_vars(t.body()));
      DComb out;
      for (const auto& [u, c] : step_at(open_term(t.body(), v), r, depth + 1))
        out.add(DTerm::abs(t.name(), close_term(u, v)), c);
      return out;
    }
    case DTerm::Kind::App: {
      if (i == 0) {
        DComb out;
        for (const auto& [h, c] : step_at(t.head(), r, depth + 1)) out.add(DTerm::app(h, t.arg()), c);
        return out;
      }
      if (i > t.arg().size()) break;
      const DTerm& u = nth_term(t.arg(), i - 1);
      Scalar c = t.arg().coefficient(u);
      DComb arg = t.arg();
      arg.add(u, -c);
      arg.add(step_at(u, r, depth + 1).scaled(c));
      return DComb(DTerm::app(t.head(), arg));
    }
    case DTerm::Kind::Diff: {
      std::vector<DComb> args;
      for (const auto& u : t.dargs()) args.push_back(DComb(u));
      if (i == 0) return diff_of(step_at(t.head(), r, depth + 1), args);
      if (i > args.size()) break;
      args[i - 1] = step_at(t.dargs()[i - 1], r, depth + 1);
      return diff_of(DComb(t.head()), args);
    }
  }
  throw NotARedex("no such position");
}

}  // namespace

std::vector<DRedex> find_redexes(const DComb& t) { return redexes(t, false); }

DComb step(const DComb& t, const DRedex& r) {
  if (r.target >= t.size()) throw NotARedex("no such support element");
  const DTerm& u = nth_term(t, r.target);
  Scalar c = t.coefficient(u);
  DComb out = t;
  out.add(u, -c);
  out.add(step_at(u, r, 0).scaled(c));
  return out;
}

DNormalizeResult normalize_dterm(const DComb& t, std::size_t fuel, TermStrategy s) {
  std::mt19937_64 rng(s.seed);
  DNormalizeResult res{t, 0};
  while (true) {
    std::vector<DRedex> rs = redexes(res.term, s.kind == TermStrategy::Kind::LeftmostInnermost);
    if (rs.empty()) return res;
    if (res.steps >= fuel) throw TermFuelExhausted(print_dcomb(t), res.steps);
    std::size_t k = 0;
    if (s.kind == TermStrategy::Kind::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
      k = pick(rng);
    }
    res.term = step(res.term, rs[k]);
    ++res.steps;
  }
}

// ---- text ----

namespace {

using detail::Lexer;
using detail::Token;

struct Printer {
  std::set<std::string> avoid;
  std::vector<std::string> names;

  std::string binder(const std::string& hint) {
    std::string base = hint.empty() || hint[0] == '_' ? "x" : hint;
    std::string n = base;
    for (std::size_t k = 1; avoid.count(n) ||
                            std::find(names.begin(), names.end(), n) != names.end();
         ++k)
      n = base + std::to_string(k);
    return n;
  }

  bool atomic(const DTerm& t) const {
    return t.kind() == DTerm::Kind::Var || t.kind() == DTerm::Kind::Bound;
  }

  std::string atom(const DTerm& t) { return atomic(t) ? term(t) : "(" + term(t) + ")"; }

  std::string term(const DTerm& t) {
    switch (t.kind()) {
      case DTerm::Kind::Var:
        return t.name();
      case DTerm::Kind::Bound:
        if (t.index() >= names.size()) return "?" + std::to_string(t.index());
        return names[names.size() - 1 - t.index()];
      case DTerm::Kind::Abs: {
        std::string n = binder(t.name());
        names.push_back(n);
        std::string b = term(t.body());
        names.pop_back();
        return "\\" + n + ". " + b;
      }
      case DTerm::Kind::App: {
        std::string a;
        if (t.arg().size() == 1 && t.arg().begin()->second.is_one() &&
            atomic(t.arg().begin()->first))
          a = term(t.arg().begin()->first);
        else
          a = "(" + comb(t.arg()) + ")";
        return "(" + term(t.head()) + ") " + a;
      }
      case DTerm::Kind::Diff: {
        std::string s = atom(t.head());
        for (std::size_t i = 0; i < t.dargs().size(); ++i) {
          if (i) s = "(" + s + ")";
          s = "D " + s + " . " + atom(t.dargs()[i]);
        }
        return s;
      }
    }
    return "";
  }

  std::string comb(const DComb& c) {
    return text::print_comb(c, [&](const DTerm& t) {
      return c.size() > 1 && t.kind() == DTerm::Kind::Abs ? "(" + term(t) + ")" : term(t);
    });
  }
};

struct Parser {
  Lexer& lx;
  std::vector<std::string> scope;

  DComb leaf(const std::string& x) {
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i] == x) return DComb(DTerm::bound(scope.size() - 1 - i));
    return dterm::var(x);
  }

  bool starts_atom() const {
    return (lx.peek().kind == Token::Kind::Ident && lx.peek().text != "D") || lx.is_punct("(");
  }

  std::string ident() {
    if (lx.peek().kind != Token::Kind::Ident || lx.peek().text == "D") lx.fail("expected a variable");
    return lx.next().text;
  }

  DComb atom() {
    if (lx.accept("(")) {
      DComb c = comb();
      lx.expect(")");
      return c;
    }
    return leaf(ident());
  }

  DComb term() {
    if (lx.accept("\\")) {
      std::string x = ident();
      lx.expect(".");
      scope.push_back(x);
      DComb body = comb();
      scope.pop_back();
      return abs_of(x, body);
    }
    if (lx.is_ident("D")) {
      lx.next();
      DComb m = atom();
      lx.expect(".");
      DComb n = atom();
      return dterm::diff(m, n);
    }
    DComb head = atom();
    while (starts_atom()) head = dterm::app(head, atom());
    return head;
  }

  DComb comb() {
    return text::parse_comb<DTerm>(lx, [&]() { return term(); });
  }
};

}  // namespace

DComb parse_dterm(const std::string& text) {
  Lexer lx(text);
  Parser p{lx, {}};
  DComb c = p.comb();
  if (!lx.at_end()) lx.fail("trailing input after term");
  return c;
}

std::string print_dterm(const DTerm& t) {
  Printer p{free_vars(t), {}};
  return p.term(t);
}

std::string print_dcomb(const DComb& t) {
  Printer p{free_vars(t), {}};
  return p.comb(t);
}

}  // namespace dill
