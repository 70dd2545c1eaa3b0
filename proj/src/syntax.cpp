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

#include "dill/syntax.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace dill {

const char* tree_kind_name(TreeKind k) {
  switch (k) {
    case TreeKind::Var: return "var";
    case TreeKind::Tens: return "tens";
    case TreeKind::Par: return "par";
    case TreeKind::Weak: return "w";
    case TreeKind::Coweak: return "cw";
    case TreeKind::Der: return "d";
    case TreeKind::Coder: return "cd";
    case TreeKind::Contr: return "c";
    case TreeKind::Cocontr: return "cc";
    case TreeKind::Box: return "box";
  }
  return "?";
}

namespace tree {
namespace {

Tree make(TreeKind k, std::vector<Tree> kids) {
  auto n = std::make_shared<TreeNode>();
  n->kind = k;
  n->kids = std::move(kids);
  n->constructors = 1;
  for (const auto& c : n->kids) n->constructors += c->constructors;
  return n;
}

}  // namespace

Tree var(Var x) {
  auto n = std::make_shared<TreeNode>();
  n->kind = TreeKind::Var;
  n->var = std::move(x);
  return n;
}
Tree var(const std::string& base, bool co) { return var(Var{base, co}); }
Tree tens(Tree a, Tree b) { return make(TreeKind::Tens, {std::move(a), std::move(b)}); }
Tree par(Tree a, Tree b) { return make(TreeKind::Par, {std::move(a), std::move(b)}); }
Tree der(Tree a) { return make(TreeKind::Der, {std::move(a)}); }
Tree coder(Tree a) { return make(TreeKind::Coder, {std::move(a)}); }
Tree contr(Tree a, Tree b) { return make(TreeKind::Contr, {std::move(a), std::move(b)}); }
Tree cocontr(Tree a, Tree b) {
  return make(TreeKind::Cocontr, {std::move(a), std::move(b)});
}

Tree weak(std::optional<LType> annot) {
  auto n = std::make_shared<TreeNode>();
  n->kind = TreeKind::Weak;
  n->annot = std::move(annot);
  n->constructors = 1;
  return n;
}

Tree coweak(std::optional<LType> annot) {
  auto n = std::make_shared<TreeNode>();
  n->kind = TreeKind::Coweak;
  n->annot = std::move(annot);
  n->constructors = 1;
  return n;
}

Tree box(const Net& content, std::vector<Tree> args) {
  if (content.width() != args.size() + 1)
    throw MalformedNet("box content of width " + std::to_string(content.width()) +
                       " with " + std::to_string(args.size()) + " arguments");
  auto n = std::make_shared<TreeNode>();
  n->kind = TreeKind::Box;
  n->kids = std::move(args);
  n->content = std::make_shared<const Net>(content);
  n->constructors = 1 + content.constructors();
  for (const auto& c : n->kids) n->constructors += c->constructors;
  return n;
}

Tree with_kids(const Tree& t, std::vector<Tree> kids) {
  auto n = std::make_shared<TreeNode>(*t);
  n->kids = std::move(kids);
  n->constructors = 1 + (t->kind == TreeKind::Box ? t->content->constructors() : 0);
  for (const auto& c : n->kids) n->constructors += c->constructors;
  return n;
}

}  // namespace tree

int compare(const Tree& a, const Tree& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == TreeKind::Var) {
    auto c = a->var <=> b->var;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (a->annot != b->annot) {
    if (!a->annot) return -1;
    if (!b->annot) return 1;
    return *a->annot < *b->annot ? -1 : 1;
  }
  if (a->kids.size() != b->kids.size()) return a->kids.size() < b->kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (int c = compare(a->kids[i], b->kids[i])) return c;
  if (a->kind == TreeKind::Box) return compare(*a->content, *b->content);
  return 0;
}

void collect_vars(const Tree& t, std::vector<Var>& out) {
  if (t->kind == TreeKind::Var) {
    out.push_back(t->var);
    return;
  }
  for (const auto& k : t->kids) collect_vars(k, out);
}

int compare(const Cut& a, const Cut& b) {
  if (int c = compare(a.left, b.left)) return c;
  return compare(a.right, b.right);
}

SimpleNet::SimpleNet(std::vector<Tree> trees, std::vector<Cut> cuts)
    : trees_(std::move(trees)), cuts_(std::move(cuts)) {
  for (auto& c : cuts_)
    if (compare(c.left, c.right) > 0) std::swap(c.left, c.right);
  std::sort(cuts_.begin(), cuts_.end(),
            [](const Cut& a, const Cut& b) { return compare(a, b) < 0; });
  std::vector<Var> occ = occurrences(*this);
  std::sort(occ.begin(), occ.end());
  for (std::size_t i = 1; i < occ.size(); ++i)
    if (occ[i] == occ[i - 1])
      throw MalformedNet("variable " + occ[i].str() + " occurs twice");
}

std::size_t SimpleNet::constructors() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t->constructors;
  for (const auto& c : cuts_) n += c.left->constructors + c.right->constructors;
  return n;
}

int compare(const SimpleNet& a, const SimpleNet& b) {
  if (a.trees().size() != b.trees().size())
    return a.trees().size() < b.trees().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.trees().size(); ++i)
    if (int c = compare(a.trees()[i], b.trees()[i])) return c;
  if (a.cuts().size() != b.cuts().size())
    return a.cuts().size() < b.cuts().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.cuts().size(); ++i)
    if (int c = compare(a.cuts()[i], b.cuts()[i])) return c;
  return 0;
}

bool SimpleNet::operator==(const SimpleNet& o) const { return compare(*this, o) == 0; }
bool SimpleNet::operator<(const SimpleNet& o) const { return compare(*this, o) < 0; }

std::vector<Var> occurrences(const SimpleNet& p) {
  std::vector<Var> out;
  for (const auto& t : p.trees()) collect_vars(t, out);
  for (const auto& c : p.cuts()) {
    collect_vars(c.left, out);
    collect_vars(c.right, out);
  }
  return out;
}

namespace {

VarSets split(const std::vector<Var>& occ) {
  std::set<Var> all(occ.begin(), occ.end());
  VarSets r;
  for (const auto& v : all) (all.count(v.dual()) ? r.bound : r.free).insert(v);
  return r;
}

Tree rename_tree(const Tree& t, const std::map<Var, Var>& m) {
  if (t->kind == TreeKind::Var) {
    auto it = m.find(t->var);
    return it == m.end() ? t : tree::var(it->second);
  }
  if (t->kids.empty()) return t;
  std::vector<Tree> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (const auto& k : t->kids) {
    kids.push_back(rename_tree(k, m));
    changed = changed || kids.back().get() != k.get();
  }
  return changed ? tree::with_kids(t, std::move(kids)) : t;
}

SimpleNet rename_net(const SimpleNet& p, const std::map<Var, Var>& m) {
  std::vector<Tree> trees;
  for (const auto& t : p.trees()) trees.push_back(rename_tree(t, m));
  std::vector<Cut> cuts;
  for (const auto& c : p.cuts())
    cuts.push_back({rename_tree(c.left, m), rename_tree(c.right, m)});
  return SimpleNet(std::move(trees), std::move(cuts));
}

// Printing with bound variables erased: a name-independent key.
void shape_into(const Tree& t, const std::set<std::string>& bound, std::string& out) {
  if (t->kind == TreeKind::Var) {
    out += bound.count(t->var.base) ? "_" : t->var.str();
    return;
  }
  out += tree_kind_name(t->kind);
  if (t->annot) out += ":" + print_type(*t->annot);
  if (t->kind == TreeKind::Box) out += "{" + print_net(*t->content) + "}";
  out += "(";
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    if (i) out += ",";
    shape_into(t->kids[i], bound, out);
  }
  out += ")";
}

}  // namespace

VarSets vars(const Tree& t) {
  std::vector<Var> occ;
  collect_vars(t, occ);
  return split(occ);
}

VarSets vars(const SimpleNet& p) { return split(occurrences(p)); }

SimpleNet alpha_canonicalize(const SimpleNet& p) {
  VarSets vs = vars(p);
  if (vs.bound.empty()) return p;
  std::set<std::string> bound_bases, reserved;
  for (const auto& v : vs.bound) bound_bases.insert(v.base);
  for (const auto& v : vs.free) reserved.insert(v.base);

  struct Side {
    Tree tree;
    std::string shape;
  };
  struct OCut {
    Side a, b;
    std::string key;
    bool ambiguous;
  };
  std::vector<OCut> cuts;
  for (const auto& c : p.cuts()) {
    Side l{c.left, {}}, r{c.right, {}};
    shape_into(l.tree, bound_bases, l.shape);
    shape_into(r.tree, bound_bases, r.shape);
    if (r.shape < l.shape) std::swap(l, r);
    OCut o{l, r, l.shape + "|" + r.shape, l.shape == r.shape};
    cuts.push_back(std::move(o));
  }
  std::stable_sort(cuts.begin(), cuts.end(),
                   [](const OCut& x, const OCut& y) { return x.key < y.key; });

  // Groups of cuts with equal shape can be traversed in any order; all orders
  // (and flips of symmetric cuts) are tried when their number is small.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < cuts.size();) {
    std::size_t j = i;
    while (j < cuts.size() && cuts[j].key == cuts[i].key) ++j;
    groups.push_back({i, j});
    i = j;
  }
  std::size_t ambiguous = 0;
  for (const auto& c : cuts) ambiguous += c.ambiguous ? 1 : 0;
  double budget = std::pow(2.0, static_cast<double>(ambiguous));
  for (const auto& g : groups)
    for (std::size_t k = 2; k <= g.second - g.first; ++k) budget *= static_cast<double>(k);
  bool exhaustive = budget <= 5040.0;

  auto build = [&](const std::vector<std::size_t>& order, std::uint64_t flips) {
    std::vector<Var> occ;
    for (const auto& t : p.trees()) collect_vars(t, occ);
    std::size_t amb_index = 0;
    for (std::size_t idx : order) {
      const OCut& c = cuts[idx];
      bool flip = false;
      if (c.ambiguous) flip = (flips >> amb_index++) & 1u;
      collect_vars(flip ? c.b.tree : c.a.tree, occ);
      collect_vars(flip ? c.a.tree : c.b.tree, occ);
    }
    std::map<Var, Var> m;
    std::size_t counter = 0;
    for (const auto& v : occ) {
      if (!bound_bases.count(v.base) || m.count(v)) continue;
      std::string name;
      do {
        name = "v" + std::to_string(counter++);
      } while (reserved.count(name));
      m[v] = Var{name, false};
      m[v.dual()] = Var{name, true};
    }
    return rename_net(p, m);
  };

  std::vector<std::size_t> order(cuts.size());
  std::iota(order.begin(), order.end(), 0);
  if (!exhaustive) return build(order, 0);

  std::optional<SimpleNet> best;
  std::function<void(std::size_t)> perm = [&](std::size_t gi) {
    if (gi == groups.size()) {
      // Flip bits are indexed by position among ambiguous cuts in traversal.
      for (std::uint64_t f = 0; f < (std::uint64_t{1} << ambiguous); ++f) {
        SimpleNet cand = build(order, f);
        if (!best || compare(cand, *best) < 0) best = std::move(cand);
      }
      return;
    }
    auto [lo, hi] = groups[gi];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      perm(gi + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  perm(0);
  return *best;
}

Net Net::of(const SimpleNet& p, const Scalar& c) {
  Net n(p.width());
  n.add(p, c);
  return n;
}

bool Net::is_simple() const {
  return terms_.size() == 1 && terms_.begin()->second.coef.is_one();
}

const SimpleNet& Net::only() const {
  if (terms_.size() != 1) throw MalformedNet("net is not a single simple net");
  return terms_.begin()->second.rep;
}

std::size_t Net::constructors() const {
  std::size_t n = 0;
  for (const auto& [k, t] : terms_) n += t.rep.constructors();
  return n;
}

Scalar Net::coefficient(const SimpleNet& p) const {
  auto it = terms_.find(alpha_canonicalize(p));
  return it == terms_.end() ? Scalar(0) : it->second.coef;
}

void Net::add(const SimpleNet& p, const Scalar& c, const Semiring& k) {
  if (p.width() != width_)
    throw MalformedNet("simple net of width " + std::to_string(p.width()) +
                       " added to a net of width " + std::to_string(width_));
  k.check(c);
  if (c.is_zero()) return;
  SimpleNet key = alpha_canonicalize(p);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Term{p, c});
    return;
  }
  Scalar s = k.add(it->second.coef, c);
  if (s.is_zero()) terms_.erase(it);
  else it->second.coef = s;
}

void Net::add(const Net& o, const Semiring& k) {
  if (o.width_ != width_ && !o.is_zero())
    throw MalformedNet("width mismatch in net sum");
  for (const auto& [key, t] : o.terms_) add(t.rep, t.coef, k);
}

Net Net::scaled(const Scalar& c, const Semiring& k) const {
  k.check(c);
  Net n(width_);
  if (c.is_zero()) return n;
  for (const auto& [key, t] : terms_) {
    Scalar s = k.mul(c, t.coef);
    if (!s.is_zero()) n.terms_.emplace(key, Term{t.rep, s});
  }
  return n;
}

Net Net::canonical() const {
  Net n(width_);
  for (const auto& [key, t] : terms_) n.terms_.emplace(key, Term{key, t.coef});
  return n;
}

int compare(const Net& a, const Net& b) {
  if (a.width() != b.width()) return a.width() < b.width() ? -1 : 1;
  auto ia = a.entries().begin(), ib = b.entries().begin();
  for (; ia != a.entries().end() && ib != b.entries().end(); ++ia, ++ib) {
    if (int c = compare(ia->first, ib->first)) return c;
    if (ia->second.coef != ib->second.coef) return ia->second.coef < ib->second.coef ? -1 : 1;
  }
  if (ia == a.entries().end() && ib == b.entries().end()) return 0;
  return ia == a.entries().end() ? -1 : 1;
}

bool Net::operator==(const Net& o) const { return compare(*this, o) == 0; }
bool Net::operator<(const Net& o) const { return compare(*this, o) < 0; }

Var FreshNames::fresh() { return Var{prefix + std::to_string(next++), false}; }

namespace {

void avoid_tree(FreshNames& f, const Tree& t);

void avoid_base(FreshNames& f, const std::string& base) {
  if (base.size() <= f.prefix.size() || base.compare(0, f.prefix.size(), f.prefix) != 0)
    return;
  std::string digits = base.substr(f.prefix.size());
  if (digits.size() > 18 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) return;
  f.next = std::max<std::uint64_t>(f.next, std::stoull(digits) + 1);
}

void avoid_tree(FreshNames& f, const Tree& t) {
  if (t->kind == TreeKind::Var) avoid_base(f, t->var.base);
  for (const auto& k : t->kids) avoid_tree(f, k);
  if (t->kind == TreeKind::Box) f.avoid(*t->content);
}

}  // namespace

void FreshNames::avoid(const SimpleNet& p) {
  for (const auto& t : p.trees()) avoid_tree(*this, t);
  for (const auto& c : p.cuts()) {
    avoid_tree(*this, c.left);
    avoid_tree(*this, c.right);
  }
}

void FreshNames::avoid(const Net& n) {
  for (const auto& [k, t] : n.entries()) avoid(t.rep);
}

Tree tree_substitute(const Tree& t, const Tree& s, const Var& target, int& hits) {
  if (t->kind == TreeKind::Var) {
    if (t->var == target) {
      ++hits;
      return s;
    }
    return t;
  }
  if (t->kids.empty()) return t;
  std::vector<Tree> kids;
  bool changed = false;
  for (const auto& k : t->kids) {
    kids.push_back(tree_substitute(k, s, target, hits));
    changed = changed || kids.back().get() != k.get();
  }
  return changed ? tree::with_kids(t, std::move(kids)) : t;
}

SimpleNet tree_substitute(const SimpleNet& p, const Tree& s, const Var& x) {
  Var target = x.dual();
  int hits = 0;
  std::vector<Tree> trees;
  for (const auto& t : p.trees()) trees.push_back(tree_substitute(t, s, target, hits));
  std::vector<Cut> cuts;
  for (const auto& c : p.cuts())
    cuts.push_back({tree_substitute(c.left, s, target, hits),
                    tree_substitute(c.right, s, target, hits)});
  if (hits != 1)
    throw NotLinear(target.str() + " occurs " + std::to_string(hits) + " times");
  return SimpleNet(std::move(trees), std::move(cuts));
}

SimpleNet rename_fresh(const SimpleNet& p, FreshNames& fresh) {
  std::map<Var, Var> m;
  for (const auto& v : occurrences(p)) {
    if (m.count(v)) continue;
    Var f = fresh.fresh();
    if (v.co) f = f.dual();
    m[v] = f;
    m[v.dual()] = f.dual();
  }
  return rename_net(p, m);
}

}  // namespace dill
