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

#include "dill/typing.hpp"

#include <memory>

namespace dill {

const char* type_error_name(TypeError::Code c) {
  switch (c) {
    case TypeError::Code::TypeMismatch: return "TypeMismatch";
    case TypeError::Code::UnboundVar: return "UnboundVar";
    case TypeError::Code::AmbiguousType: return "AmbiguousType";
    case TypeError::Code::WidthMismatch: return "WidthMismatch";
    case TypeError::Code::CutTypeClash: return "CutTypeClash";
  }
  return "TypeError";
}

TypeError::TypeError(Code code, std::string position, const std::string& message)
    : Error(type_error_name(code), (position.empty() ? "" : "at " + position + ": ") + message),
      code_(code),
      position_(std::move(position)) {}

namespace {

// Type terms with unknowns. An unknown carries a polarity so that the dual
// of an unknown is again an unknown: (m, neg) stands for m or dual(m).
struct TT;
using TP = std::shared_ptr<const TT>;

struct TT {
  LType::Kind kind = LType::Kind::Atom;
  bool meta = false;
  int id = -1;
  bool neg = false;
  std::string atom;
  TP a, b;
};

TP mk(LType::Kind k, TP a = nullptr, TP b = nullptr) {
  auto t = std::make_shared<TT>();
  t->kind = k;
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

class Unifier {
public:
  TP fresh() {
    auto t = std::make_shared<TT>();
    t->meta = true;
    t->id = static_cast<int>(binding_.size());
    binding_.push_back(nullptr);
    return t;
  }

  TP from(const LType& a) {
    switch (a.kind) {
      case LType::Kind::Atom:
      case LType::Kind::CoAtom: {
        auto t = std::make_shared<TT>();
        t->kind = a.kind;
        t->atom = a.atom;
        return t;
      }
      case LType::Kind::Tens:
      case LType::Kind::Par: return mk(a.kind, from(a.left()), from(a.right()));
      case LType::Kind::Excl:
      case LType::Kind::Int: return mk(a.kind, from(a.body()));
    }
    return nullptr;
  }

  static TP dual(const TP& t) {
    if (t->meta) {
      auto d = std::make_shared<TT>(*t);
      d->neg = !t->neg;
      return d;
    }
    switch (t->kind) {
      case LType::Kind::Atom:
      case LType::Kind::CoAtom: {
        auto d = std::make_shared<TT>(*t);
        d->kind = t->kind == LType::Kind::Atom ? LType::Kind::CoAtom : LType::Kind::Atom;
        return d;
      }
      case LType::Kind::Tens: return mk(LType::Kind::Par, dual(t->a), dual(t->b));
      case LType::Kind::Par: return mk(LType::Kind::Tens, dual(t->a), dual(t->b));
      case LType::Kind::Excl: return mk(LType::Kind::Int, dual(t->a));
      case LType::Kind::Int: return mk(LType::Kind::Excl, dual(t->a));
    }
    return t;
  }

  TP walk(TP t) const {
    while (t->meta && binding_[t->id]) t = t->neg ? dual(binding_[t->id]) : binding_[t->id];
    return t;
  }

  bool unify(TP s, TP t) {
    s = walk(s);
    t = walk(t);
    if (s->meta && t->meta && s->id == t->id) return s->neg == t->neg;
    if (s->meta) return bind(s, t);
    if (t->meta) return bind(t, s);
    if (s->kind != t->kind) return false;
    switch (s->kind) {
      case LType::Kind::Atom:
      case LType::Kind::CoAtom: return s->atom == t->atom;
      case LType::Kind::Tens:
      case LType::Kind::Par: return unify(s->a, t->a) && unify(s->b, t->b);
      case LType::Kind::Excl:
      case LType::Kind::Int: return unify(s->a, t->a);
    }
    return false;
  }

  bool resolved(const TP& t0) const {
    TP t = walk(t0);
    if (t->meta) return false;
    if (t->a && !resolved(t->a)) return false;
    if (t->b && !resolved(t->b)) return false;
    return true;
  }

  // Makes the first occurrence of each unknown in t ground positively.
  void orient(const TP& t0) {
    TP t = walk(t0);
    if (t->meta) {
      flip_.emplace(t->id, t->neg);
      return;
    }
    if (t->a) orient(t->a);
    if (t->b) orient(t->b);
  }

  LType ground(const TP& t0, const std::string& atom) const {
    TP t = walk(t0);
    if (t->meta) {
      auto f = flip_.find(t->id);
      bool neg = f == flip_.end() ? t->neg : t->neg != f->second;
      return neg ? LType::coatom(atom) : LType::atom_of(atom);
    }
    switch (t->kind) {
      case LType::Kind::Atom: return LType::atom_of(t->atom);
      case LType::Kind::CoAtom: return LType::coatom(t->atom);
      case LType::Kind::Tens: return LType::tens(ground(t->a, atom), ground(t->b, atom));
      case LType::Kind::Par: return LType::par(ground(t->a, atom), ground(t->b, atom));
      case LType::Kind::Excl: return LType::excl(ground(t->a, atom));
      case LType::Kind::Int: return LType::intn(ground(t->a, atom));
    }
    return {};
  }

  std::string show(const TP& t0) const {
    TP t = walk(t0);
    if (t->meta) return std::string(t->neg ? "~" : "") + "_T" + std::to_string(t->id);
    switch (t->kind) {
      case LType::Kind::Atom: return t->atom;
      case LType::Kind::CoAtom: return "~" + t->atom;
      case LType::Kind::Tens: return "(" + show(t->a) + " tens " + show(t->b) + ")";
      case LType::Kind::Par: return "(" + show(t->a) + " par " + show(t->b) + ")";
      case LType::Kind::Excl: return "!" + show(t->a);
      case LType::Kind::Int: return "?" + show(t->a);
    }
    return "";
  }

private:
  bool occurs(int id, const TP& t0) const {
    TP t = walk(t0);
    if (t->meta) return t->id == id;
    return (t->a && occurs(id, t->a)) || (t->b && occurs(id, t->b));
  }

  bool bind(const TP& m, const TP& t) {
    if (occurs(m->id, t)) return false;
    binding_[m->id] = m->neg ? dual(t) : t;
    return true;
  }

  std::vector<TP> binding_;
  std::map<int, bool> flip_;
};

using Code = TypeError::Code;

class Checker {
public:
  Checker(Unifier& u, bool strict) : u_(u), strict_(strict) {}

  struct Scope {
    const Context* seed = nullptr;
    bool strict = false;
    std::map<std::string, TP> env;  // type of the plain name of each base
    std::map<const TreeNode*, TP>* record = nullptr;
  };

  TP var_type(const Var& v, Scope& s, const std::string& pos) {
    if (s.strict && !s.seed->count(v))
      throw TypeError(Code::UnboundVar, pos, "variable " + v.str() + " has no type");
    auto it = s.env.find(v.base);
    if (it == s.env.end()) {
      TP t;
      auto plain = s.seed->find(Var{v.base, false});
      auto co = s.seed->find(Var{v.base, true});
      if (plain != s.seed->end()) {
        t = u_.from(plain->second);
        if (co != s.seed->end() && co->second != dual(plain->second))
          throw TypeError(Code::TypeMismatch, pos,
                          "context types of " + v.base + " and ~" + v.base + " are not dual");
      } else if (co != s.seed->end()) {
        t = Unifier::dual(u_.from(co->second));
      } else {
        t = u_.fresh();
      }
      it = s.env.emplace(v.base, t).first;
    }
    return v.co ? Unifier::dual(it->second) : it->second;
  }

  void expect(const TP& got, const TP& want, const std::string& pos, Code code = Code::TypeMismatch) {
    if (!u_.unify(got, want))
      throw TypeError(code, pos, "expected " + u_.show(want) + ", got " + u_.show(got));
  }

  TP tree(const Tree& t, Scope& s, const std::string& pos) {
    TP r = tree_inner(t, s, pos);
    if (s.record) (*s.record)[t.get()] = r;
    return r;
  }

  TP tree_inner(const Tree& t, Scope& s, const std::string& pos) {
    auto sub = [&](std::size_t i) { return pos + "." + std::to_string(i); };
    switch (t->kind) {
      case TreeKind::Var: return var_type(t->var, s, pos);
      case TreeKind::Tens:
        return mk(LType::Kind::Tens, tree(t->kids[0], s, sub(0)), tree(t->kids[1], s, sub(1)));
      case TreeKind::Par:
        return mk(LType::Kind::Par, tree(t->kids[0], s, sub(0)), tree(t->kids[1], s, sub(1)));
      case TreeKind::Weak:
      case TreeKind::Coweak: {
        auto k = t->kind == TreeKind::Weak ? LType::Kind::Int : LType::Kind::Excl;
        TP r = mk(k, u_.fresh());
        if (t->annot) expect(u_.from(*t->annot), r, pos);
        leaves_.push_back({r, pos});
        return r;
      }
      case TreeKind::Der: return mk(LType::Kind::Int, tree(t->kids[0], s, sub(0)));
      case TreeKind::Coder: return mk(LType::Kind::Excl, tree(t->kids[0], s, sub(0)));
      case TreeKind::Contr:
      case TreeKind::Cocontr: {
        auto k = t->kind == TreeKind::Contr ? LType::Kind::Int : LType::Kind::Excl;
        TP r = mk(k, u_.fresh());
        expect(tree(t->kids[0], s, sub(0)), r, sub(0));
        expect(tree(t->kids[1], s, sub(1)), r, sub(1));
        return r;
      }
      case TreeKind::Box: {
        std::vector<TP> concl;
        for (std::size_t i = 0; i < t->kids.size(); ++i) {
          TP a = u_.fresh();
          expect(tree(t->kids[i], s, sub(i)), mk(LType::Kind::Excl, a), sub(i));
          concl.push_back(mk(LType::Kind::Int, Unifier::dual(a)));
        }
        TP b = u_.fresh();
        concl.push_back(b);
        static const Context empty;
        std::size_t k = 0;
        for (const auto& [key, term] : t->content->entries()) {
          const SimpleNet& q = term.rep;
          Scope inner;
          inner.seed = &empty;
          inner.strict = false;
          simple(q, concl, inner, pos + ".box" + std::to_string(k++));
        }
        return mk(LType::Kind::Excl, b);
      }
    }
    return nullptr;
  }

  void simple(const SimpleNet& p, const std::vector<TP>& gamma, Scope& s, const std::string& pos) {
    std::string pre = pos.empty() ? "" : pos + ".";
    if (p.width() != gamma.size())
      throw TypeError(Code::WidthMismatch, pos,
                      "net of width " + std::to_string(p.width()) + " against " +
                          std::to_string(gamma.size()) + " conclusions");
    for (std::size_t i = 0; i < p.width(); ++i) {
      std::string tp = pre + "t" + std::to_string(i);
      expect(tree(p.trees()[i], s, tp), gamma[i], tp);
    }
    for (std::size_t j = 0; j < p.cuts().size(); ++j) {
      std::string cp = pre + "c" + std::to_string(j);
      TP l = tree(p.cuts()[j].left, s, cp + ".l");
      TP r = tree(p.cuts()[j].right, s, cp + ".r");
      if (!u_.unify(l, Unifier::dual(r)))
        throw TypeError(Code::CutTypeClash, cp,
                        "sides have types " + u_.show(l) + " and " + u_.show(r));
    }
  }

  void check_leaves() {
    for (const auto& [t, pos] : leaves_)
      if (!u_.resolved(t))
        throw TypeError(Code::AmbiguousType, pos,
                        "cannot determine the type of this weakening; annotate it");
  }

private:
  Unifier& u_;
  bool strict_;
  std::vector<std::pair<TP, std::string>> leaves_;
};

void check_context(const Context& phi) {
  for (const auto& [v, a] : phi) {
    auto it = phi.find(v.dual());
    if (it != phi.end() && it->second != dual(a))
      throw TypeError(Code::TypeMismatch, "",
                      "context types of " + v.str() + " and " + v.dual().str() + " are not dual");
  }
}

Inference finish(const Unifier& u, const Checker::Scope& s, const SimpleNet& p,
                 const std::vector<TP>& gamma, const std::map<const TreeNode*, TP>& rec,
                 const std::string& ground) {
  Inference inf;
  inf.phi = *s.seed;
  for (const auto& v : occurrences(p)) {
    TP base = s.env.at(v.base);
    inf.phi[v] = u.ground(v.co ? Unifier::dual(base) : base, ground);
  }
  for (const auto& g : gamma) inf.gamma.push_back(u.ground(g, ground));
  for (const auto& [n, t] : rec) inf.node_types[n] = u.ground(t, ground);
  return inf;
}

}  // namespace

Context complete_duals(const Context& phi) {
  check_context(phi);
  Context out = phi;
  for (const auto& [v, a] : phi) out.emplace(v.dual(), dual(a));
  return out;
}

LType typecheck_tree(const Context& phi, const Tree& t) {
  check_context(phi);
  Unifier u;
  Checker ch(u, true);
  Checker::Scope s;
  s.seed = &phi;
  s.strict = true;
  TP r = ch.tree(t, s, "t");
  ch.check_leaves();
  if (!u.resolved(r)) throw TypeError(Code::AmbiguousType, "t", "type is not determined");
  return u.ground(r, "o");
}

void typecheck_net(const Context& phi, const Net& p, const std::vector<LType>& gamma,
                   TypecheckOptions opts) {
  check_context(phi);
  Unifier u;
  Checker ch(u, true);
  std::vector<TP> g;
  for (const auto& a : gamma) g.push_back(u.from(a));
  if (p.width() != gamma.size() && !p.is_zero())
    throw TypeError(Code::WidthMismatch, "",
                    "net of width " + std::to_string(p.width()) + " against " +
                        std::to_string(gamma.size()) + " conclusions");
  std::size_t k = 0;
  for (const auto& [key, term] : p.entries()) {
    const SimpleNet& q = term.rep;
    Checker::Scope s;
    s.seed = &phi;
    s.strict = true;
    ch.simple(q, g, s, p.size() > 1 ? "s" + std::to_string(k) : "");
    ++k;
  }
  if (!opts.allow_ambiguous) ch.check_leaves();
}

Inference infer_simple(const SimpleNet& p, const std::vector<std::optional<LType>>& gamma,
                       const Context& seed, const std::string& ground) {
  check_context(seed);
  Unifier u;
  Checker ch(u, false);
  std::vector<TP> g;
  for (const auto& a : gamma) g.push_back(a ? u.from(*a) : u.fresh());
  std::map<const TreeNode*, TP> rec;
  Checker::Scope s;
  s.seed = &seed;
  s.record = &rec;
  ch.simple(p, g, s, "");
  for (const auto& x : g) u.orient(x);
  return finish(u, s, p, g, rec, ground);
}

NetInference infer_net(const Net& p, const std::vector<std::optional<LType>>& gamma,
                       const Context& seed, const std::string& ground) {
  check_context(seed);
  Unifier u;
  Checker ch(u, false);
  std::vector<TP> g;
  for (const auto& a : gamma) g.push_back(a ? u.from(*a) : u.fresh());
  if (p.width() != gamma.size() && !p.is_zero())
    throw TypeError(Code::WidthMismatch, "",
                    "net of width " + std::to_string(p.width()) + " against " +
                        std::to_string(gamma.size()) + " conclusions");
  std::vector<Checker::Scope> scopes;
  std::vector<std::map<const TreeNode*, TP>> recs(p.size());
  scopes.reserve(p.size());
  std::size_t k = 0;
  for (const auto& [key, term] : p.entries()) {
    const SimpleNet& q = term.rep;
    scopes.emplace_back();
    scopes.back().seed = &seed;
    scopes.back().record = &recs[k];
    ch.simple(q, g, scopes.back(), p.size() > 1 ? "s" + std::to_string(k) : "");
    ++k;
  }
  for (const auto& x : g) u.orient(x);
  NetInference out;
  k = 0;
  for (const auto& [key, term] : p.entries()) {
    out.elements.push_back(finish(u, scopes[k], term.rep, g, recs[k], ground));
    ++k;
  }
  for (const auto& x : g) out.gamma.push_back(u.ground(x, ground));
  return out;
}

}  // namespace dill
