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


#include "dill/rterm.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "parse_internal.hpp"
#include "term_text.hpp"

namespace dill {

struct RTerm::Node {
  Kind kind = Kind::Var;
  std::string name;
  std::size_t index = 0;
  std::vector<RTerm> kids;  // Abs body, BApp head
  Multiset<RTerm> bunch;
  std::size_t size = 1;
};

RTerm RTerm::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  RTerm t;
  t.n_ = n;
  return t;
}

RTerm RTerm::bound(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bound;
  n->index = index;
  RTerm t;
  t.n_ = n;
  return t;
}

RTerm RTerm::abs(std::string hint, RTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->name = std::move(hint);
  n->size = 1 + body.size();
  n->kids.push_back(std::move(body));
  RTerm t;
  t.n_ = n;
  return t;
}

RTerm RTerm::bapp(RTerm head, Multiset<RTerm> bunch) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::BApp;
  n->size = 1 + head.size();
  for (const auto& [u, k] : bunch.entries()) n->size += k * u.size();
  n->kids.push_back(std::move(head));
  n->bunch = std::move(bunch);
  RTerm t;
  t.n_ = n;
  return t;
}

RTerm::Kind RTerm::kind() const { return n_->kind; }
const std::string& RTerm::name() const { return n_->name; }
std::size_t RTerm::index() const { return n_->index; }
const RTerm& RTerm::body() const { return n_->kids.at(0); }
const RTerm& RTerm::head() const { return n_->kids.at(0); }
const Multiset<RTerm>& RTerm::bunch() const { return n_->bunch; }
std::size_t RTerm::size() const { return n_->size; }

int compare(const RTerm& a, const RTerm& b) {
  if (a.n_ == b.n_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case RTerm::Kind::Var:
      return a.name() < b.name() ? -1 : (a.name() == b.name() ? 0 : 1);
    case RTerm::Kind::Bound:
      return a.index() < b.index() ? -1 : (a.index() > b.index() ? 1 : 0);
    case RTerm::Kind::Abs:
      return compare(a.body(), b.body());
    case RTerm::Kind::BApp: {
      if (int c = compare(a.head(), b.head())) return c;
      const auto& x = a.bunch().entries();
      const auto& y = b.bunch().entries();
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (int c = compare(x[i].first, y[i].first)) return c;
        if (x[i].second != y[i].second) return x[i].second < y[i].second ? -1 : 1;
      }
      return x.size() < y.size() ? -1 : (x.size() > y.size() ? 1 : 0);
    }
  }
  return 0;
}

namespace rterm {

RComb var(const std::string& x) { return RComb(RTerm::var(x)); }

RComb lam(const std::string& x, const RComb& body) {
  RComb out;
  for (const auto& [t, c] : body) out.add(RTerm::abs(x, close_term(t, x)), c);
  return out;
}

namespace {
void expand(const RTerm& head, const std::vector<RComb>& slots, std::size_t i,
            std::vector<RTerm>& cur, const Scalar& w, RComb& out) {
  if (i == slots.size()) {
    out.add(RTerm::bapp(head, Multiset<RTerm>(cur)), w);
    return;
  }
  for (const auto& [t, c] : slots[i]) {
    cur.push_back(t);
    expand(head, slots, i + 1, cur, w * c, out);
    cur.pop_back();
  }
}
}  // namespace

RComb bapp(const RComb& head, const std::vector<RComb>& bunch) {
  RComb out;
  std::vector<RTerm> cur;
  for (const auto& [h, c] : head) expand(h, bunch, 0, cur, c, out);
  return out;
}

}  // namespace rterm

namespace {

void collect_free(const RTerm& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case RTerm::Kind::Var:
      out.insert(t.name());
      return;
    case RTerm::Kind::Bound:
      return;
    case RTerm::Kind::Abs:
      collect_free(t.body(), out);
      return;
    case RTerm::Kind::BApp:
      collect_free(t.head(), out);
      for (const auto& [u, k] : t.bunch().entries()) collect_free(u, out);
      return;
  }
}

template <class F>
RTerm map_leaves(const RTerm& t, std::size_t depth, F& f) {
  switch (t.kind()) {
    case RTerm::Kind::Var:
    case RTerm::Kind::Bound:
      return f(t, depth);
    case RTerm::Kind::Abs:
      return RTerm::abs(t.name(), map_leaves(t.body(), depth + 1, f));
    case RTerm::Kind::BApp: {
      RTerm h = map_leaves(t.head(), depth, f);
      std::vector<RTerm> items;
      for (const auto& u : t.bunch().elements()) items.push_back(map_leaves(u, depth, f));
      return RTerm::bapp(h, Multiset<RTerm>(items));
    }
  }
  return t;
}

std::vector<RComb> slots_of(const RTerm& t) {
  std::vector<RComb> out;
  for (const auto& u : t.bunch().elements()) out.emplace_back(u);
  return out;
}

}  // namespace

std::set<std::string> free_vars(const RTerm& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

std::set<std::string> free_vars(const RComb& t) {
  std::set<std::string> out;
  for (const auto& [u, c] : t) collect_free(u, out);
  return out;
}

RTerm open_term(const RTerm& body, const std::string& x) {
  auto f = [&](const RTerm& leaf, std::size_t depth) {
    if (leaf.kind() == RTerm::Kind::Bound && leaf.index() == depth) return RTerm::var(x);
    return leaf;
  };
  return map_leaves(body, 0, f);
}

RTerm close_term(const RTerm& t, const std::string& x) {
  auto f = [&](const RTerm& leaf, std::size_t depth) {
    if (leaf.kind() == RTerm::Kind::Var && leaf.name() == x) return RTerm::bound(depth);
    return leaf;
  };
  return map_leaves(t, 0, f);
}

std::size_t deg(const RTerm& s, const std::string& x) {
  switch (s.kind()) {
    case RTerm::Kind::Var:
      return s.name() == x ? 1 : 0;
    case RTerm::Kind::Bound:
      return 0;
    case RTerm::Kind::Abs:
      return deg(s.body(), x);
    case RTerm::Kind::BApp: {
      std::size_t n = deg(s.head(), x);
      for (const auto& [u, k] : s.bunch().entries()) n += k * deg(u, x);
      return n;
    }
  }
  return 0;
}

RTerm subst_occurrences(const RTerm& s, const std::string& x, const std::vector<RTerm>& ts) {
  std::size_t next = 0;
  auto f = [&](const RTerm& leaf, std::size_t) {
    if (leaf.kind() != RTerm::Kind::Var || leaf.name() != x) return leaf;
    if (next >= ts.size()) throw UsageError("subst_occurrences: too few terms");
    return ts[next++];
  };
  RTerm out = map_leaves(s, 0, f);
  if (next != ts.size()) throw UsageError("subst_occurrences: too many terms");
  return out;
}

RComb subst(const RTerm& s, const RComb& r, const std::string& x) {
  switch (s.kind()) {
    case RTerm::Kind::Var:
      return s.name() == x ? r : RComb(s);
    case RTerm::Kind::Bound:
      return RComb(s);
    case RTerm::Kind::Abs: {
      RComb out;
      for (const auto& [u, c] : subst(s.body(), r, x)) out.add(RTerm::abs(s.name(), u), c);
      return out;
    }
    case RTerm::Kind::BApp: {
      std::vector<RComb> slots;
      for (const auto& u : s.bunch().elements()) slots.push_back(subst(u, r, x));
      return rterm::bapp(subst(s.head(), r, x), slots);
    }
  }
  return {};
}

RComb subst(const RComb& s, const RComb& r, const std::string& x) {
  RComb out;
  for (const auto& [t, c] : s) out.add(subst(t, r, x).scaled(c));
  return out;
}

RComb dsubst(const RTerm& s, const RTerm& t, const std::string& x) {
  std::size_t n = deg(s, x);
  RComb out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RTerm> ts(n, RTerm::var(x));
    ts[i] = t;
    out.add(subst_occurrences(s, x, ts), Scalar(1));
  }
  return out;
}

RComb dsubst(const RComb& s, const RComb& t, const std::string& x) {
  RComb out;
  for (const auto& [u, c] : s)
    for (const auto& [v, d] : t) out.add(dsubst(u, v, x).scaled(c * d));
  return out;
}

RComb bunch_reduce(const RTerm& redex) {
  if (redex.kind() != RTerm::Kind::BApp || redex.head().kind() != RTerm::Kind::Abs)
    throw NotARedex("bunch_reduce needs <\\x. s>[...]");
  std::string v = fresh_name(free_vars(redex));
  RTerm s = open_term(redex.head().body(), v);
  std::vector<RTerm> items = redex.bunch().elements();
  if (deg(s, v) != items.size()) return {};
  std::vector<std::size_t> perm(items.size());
  std::iota(perm.begin(), perm.end(), 0);
  RComb out;
  do {
    std::vector<RTerm> ts;
    for (std::size_t i : perm) ts.push_back(items[i]);
    out.add(subst_occurrences(s, v, ts), Scalar(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

void collect_redexes(const RTerm& t, std::vector<std::size_t>& path, std::size_t target,
                     bool post, std::vector<RRedex>& out) {
  bool here = t.kind() == RTerm::Kind::BApp && t.head().kind() == RTerm::Kind::Abs;
  if (here && !post) out.push_back({target, path});
  auto child = [&](std::size_t i, const RTerm& u) {
    path.push_back(i);
    collect_redexes(u, path, target, post, out);
    path.pop_back();
  };
  if (t.kind() == RTerm::Kind::Abs) child(0, t.body());
  if (t.kind() == RTerm::Kind::BApp) {
    child(0, t.head());
    std::vector<RTerm> items = t.bunch().elements();
    for (std::size_t i = 0; i < items.size(); ++i) child(i + 1, items[i]);
  }
  if (here && post) out.push_back({target, path});
}

std::vector<RRedex> redexes(const RComb& t, bool post) {
  std::vector<RRedex> out;
  std::size_t k = 0;
  for (const auto& [u, c] : t) {
    std::vector<std::size_t> path;
    collect_redexes(u, path, k++, post, out);
  }
  return out;
}

RComb step_at(const RTerm& t, const RRedex& r, std::size_t depth) {
  if (depth == r.path.size()) return bunch_reduce(t);
  std::size_t i = r.path[depth];
  if (t.kind() == RTerm::Kind::Abs && i == 0) {
    std::string v = fresh_name(free_vars(t.body()));
    RComb out;
    for (const auto& [u, c] : step_at(open_term(t.body(), v), r, depth + 1))
      out.add(RTerm::abs(t.name(), close_term(u, v)), c);
    return out;
  }
  if (t.kind() == RTerm::Kind::BApp) {
    std::vector<RComb> slots = slots_of(t);
    if (i == 0) return rterm::bapp(step_at(t.head(), r, depth + 1), slots);
    if (i <= slots.size()) {
      slots[i - 1] = step_at(slots[i - 1].begin()->first, r, depth + 1);
      return rterm::bapp(RComb(t.head()), slots);
    }
  }
  throw NotARedex("no such position");
}

}  // namespace

std::vector<RRedex> find_redexes(const RComb& t) { return redexes(t, false); }

RComb step(const RComb& t, const RRedex& r) {
  if (r.target >= t.size()) throw NotARedex("no such support element");
  auto it = t.begin();
  std::advance(it, static_cast<long>(r.target));
  RComb out = t;
  out.add(it->first, -it->second);
  out.add(step_at(it->first, r, 0).scaled(it->second));
  return out;
}

RNormalizeResult normalize_resource(const RComb& t, std::size_t fuel, TermStrategy s) {
  std::mt19937_64 rng(s.seed);
  RNormalizeResult res{t, 0};
  while (true) {
    std::vector<RRedex> rs = redexes(res.term, s.kind == TermStrategy::Kind::LeftmostInnermost);
    if (rs.empty()) return res;
    if (res.steps >= fuel) throw TermFuelExhausted(print_rcomb(t), res.steps);
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

  std::string term(const RTerm& t) {
    switch (t.kind()) {
      case RTerm::Kind::Var:
        return t.name();
      case RTerm::Kind::Bound:
        if (t.index() >= names.size()) return "?" + std::to_string(t.index());
        return names[names.size() - 1 - t.index()];
      case RTerm::Kind::Abs: {
        std::string n = binder(t.name());
        names.push_back(n);
        std::string b = term(t.body());
        names.pop_back();
        return "\\" + n + ". " + b;
      }
      case RTerm::Kind::BApp: {
        std::string s = "<" + term(t.head()) + ">[";
        bool first = true;
        for (const auto& u : t.bunch().elements()) {
          if (!first) s += ", ";
          first = false;
          s += term(u);
        }
        return s + "]";
      }
    }
    return "";
  }

  std::string comb(const RComb& c) {
    return text::print_comb(c, [&](const RTerm& t) {
      return c.size() > 1 && t.kind() == RTerm::Kind::Abs ? "(" + term(t) + ")" : term(t);
    });
  }
};

struct Parser {
  Lexer& lx;
  std::vector<std::string> scope;

  std::string ident() {
    if (lx.peek().kind != Token::Kind::Ident) lx.fail("expected a variable");
    return lx.next().text;
  }

  RComb term() {
    if (lx.accept("\\")) {
      std::string x = ident();
      lx.expect(".");
      scope.push_back(x);
      RComb body = comb();
      scope.pop_back();
      RComb out;
      for (const auto& [t, c] : body) out.add(RTerm::abs(x, t), c);
      return out;
    }
    if (lx.accept("<")) {
      RComb head = comb();
      lx.expect(">");
      lx.expect("[");
      std::vector<RComb> slots;
      if (!lx.accept("]")) {
        do slots.push_back(comb());
        while (lx.accept(","));
        lx.expect("]");
      }
      return rterm::bapp(head, slots);
    }
    if (lx.accept("(")) {
      RComb c = comb();
      lx.expect(")");
      return c;
    }
    std::string x = ident();
    for (std::size_t i = scope.size(); i-- > 0;)
      if (scope[i] == x) return RComb(RTerm::bound(scope.size() - 1 - i));
    return rterm::var(x);
  }

  RComb comb() {
    return text::parse_comb<RTerm>(lx, [&]() { return term(); });
  }
};

}  // namespace

RComb parse_rterm(const std::string& text) {
  Lexer lx(text);
  Parser p{lx, {}};
  RComb c = p.comb();
  if (!lx.at_end()) lx.fail("trailing input after term");
  return c;
}

std::string print_rterm(const RTerm& t) {
  Printer p{free_vars(t), {}};
  return p.term(t);
}

std::string print_rcomb(const RComb& t) {
  Printer p{free_vars(t), {}};
  return p.comb(t);
}

}  // namespace dill
