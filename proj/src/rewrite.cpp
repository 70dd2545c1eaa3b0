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

#include "dill/rewrite.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <random>

namespace dill {

namespace {

struct RuleInfo {
  RuleId id;
  const char* name;
};

const RuleInfo kRules[] = {
    {RuleId::AxCut, "ax-cut"}, {RuleId::TensPar, "tens-par"}, {RuleId::WCw, "w-cw"},
    {RuleId::DCw, "d-cw"},     {RuleId::WCd, "w-cd"},         {RuleId::CCw, "c-cw"},
    {RuleId::WCc, "w-cc"},     {RuleId::DCd, "d-cd"},         {RuleId::CCd, "c-cd"},
    {RuleId::DCc, "d-cc"},     {RuleId::CCc, "c-cc"},         {RuleId::BoxW, "box-w"},
    {RuleId::BoxD, "box-d"},   {RuleId::BoxC, "box-c"},       {RuleId::ComBox, "box-box"},
    {RuleId::ComCw, "box-cw"}, {RuleId::ComCc, "box-cc"},     {RuleId::ComCd, "box-cd"},
};

// Copies every node of the scope, renaming through m. Leaves are copied too:
// spliced material must not share nodes with the net it came from.
Tree copy_tree(const Tree& t, const std::map<Var, Var>& m) {
  if (t->kind == TreeKind::Var) {
    auto it = m.find(t->var);
    return tree::var(it == m.end() ? t->var : it->second);
  }
  std::vector<Tree> kids;
  for (const auto& k : t->kids) kids.push_back(copy_tree(k, m));
  if (kids.empty()) return std::make_shared<TreeNode>(*t);
  return tree::with_kids(t, std::move(kids));
}

Tree fresh_leaf(const Tree& t) { return std::make_shared<TreeNode>(*t); }

// Renames the bound pairs of p apart; free variables keep their names.
SimpleNet splice_copy(const SimpleNet& p, FreshNames& fresh) {
  VarSets vs = vars(p);
  std::map<Var, Var> m;
  for (const auto& v : occurrences(p)) {
    if (m.count(v) || !vs.bound.count(v)) continue;
    Var f = fresh.fresh();
    if (v.co) f = f.dual();
    m[v] = f;
    m[v.dual()] = f.dual();
  }
  std::vector<Tree> trees;
  for (const auto& t : p.trees()) trees.push_back(copy_tree(t, m));
  std::vector<Cut> cuts;
  for (const auto& c : p.cuts()) cuts.push_back({copy_tree(c.left, m), copy_tree(c.right, m)});
  return SimpleNet(std::move(trees), std::move(cuts));
}

bool is(const Tree& t, TreeKind k) { return t->kind == k; }

Net fragment(std::vector<Cut> cuts) { return Net::of(SimpleNet({}, std::move(cuts))); }

// Rules with the ?-side (or par, or box) first.
std::optional<RuleId> match_oriented(const Tree& a, const Tree& b) {
  using K = TreeKind;
  switch (a->kind) {
    case K::Par: if (is(b, K::Tens)) return RuleId::TensPar; break;
    case K::Weak:
      if (is(b, K::Coweak)) return RuleId::WCw;
      if (is(b, K::Coder)) return RuleId::WCd;
      if (is(b, K::Cocontr)) return RuleId::WCc;
      break;
    case K::Der:
      if (is(b, K::Coweak)) return RuleId::DCw;
      if (is(b, K::Coder)) return RuleId::DCd;
      if (is(b, K::Cocontr)) return RuleId::DCc;
      break;
    case K::Contr:
      if (is(b, K::Coweak)) return RuleId::CCw;
      if (is(b, K::Coder)) return RuleId::CCd;
      if (is(b, K::Cocontr)) return RuleId::CCc;
      break;
    case K::Box:
      if (is(b, K::Weak)) return RuleId::BoxW;
      if (is(b, K::Der)) return RuleId::BoxD;
      if (is(b, K::Contr)) return RuleId::BoxC;
      break;
    default: break;
  }
  return std::nullopt;
}

// The cut with its ?-side first, when it is a non-axiom redex.
std::optional<std::pair<RuleId, Cut>> oriented(const Cut& c) {
  if (auto r = match_oriented(c.left, c.right)) return std::make_pair(*r, c);
  if (auto r = match_oriented(c.right, c.left)) return std::make_pair(*r, Cut{c.right, c.left});
  return std::nullopt;
}

bool is_promotion(RuleId r) {
  return r == RuleId::BoxW || r == RuleId::BoxD || r == RuleId::BoxC;
}

std::optional<RuleId> commutative_rule(const Tree& arg) {
  switch (arg->kind) {
    case TreeKind::Box: return RuleId::ComBox;
    case TreeKind::Coweak: return RuleId::ComCw;
    case TreeKind::Cocontr: return RuleId::ComCc;
    case TreeKind::Coder: return RuleId::ComCd;
    default: return std::nullopt;
  }
}

const Net::Term& nth_term(const Net& n, std::size_t k) {
  if (k >= n.size())
    throw NotARedex("support element " + std::to_string(k) + " out of range");
  return std::next(n.entries().begin(), static_cast<std::ptrdiff_t>(k))->second;
}

bool occurs(const Tree& t, const Var& v) {
  std::vector<Var> vs;
  collect_vars(t, vs);
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

enum class AxState { Fires, Blocked, None };

// Orientation in which the axiom/cut rule applies to cut j of p.
AxState ax_cut(const SimpleNet& p, std::size_t j, std::optional<SimpleNet>* out) {
  const Cut& c = p.cuts()[j];
  bool blocked = false;
  for (int side = 0; side < 2; ++side) {
    const Tree& x = side == 0 ? c.left : c.right;
    const Tree& s = side == 0 ? c.right : c.left;
    if (!is(x, TreeKind::Var)) continue;
    Var target = x->var.dual();
    if (occurs(s, target)) {
      blocked = true;
      continue;
    }
    bool elsewhere = false;
    for (const auto& t : p.trees()) elsewhere = elsewhere || occurs(t, target);
    for (std::size_t k = 0; k < p.cuts().size(); ++k) {
      if (k == j) continue;
      elsewhere = elsewhere || occurs(p.cuts()[k].left, target) ||
                  occurs(p.cuts()[k].right, target);
    }
    if (!elsewhere) continue;
    if (out) {
      std::vector<Cut> rest;
      for (std::size_t k = 0; k < p.cuts().size(); ++k)
        if (k != j) rest.push_back(p.cuts()[k]);
      *out = tree_substitute(SimpleNet(p.trees(), std::move(rest)), s, x->var);
    }
    return AxState::Fires;
  }
  return blocked ? AxState::Blocked : AxState::None;
}

// ---- redex enumeration ----

void collect_simple(const SimpleNet& p, std::size_t target, Path& path, RedexOptions opts,
                    std::vector<Redex>& out);

void collect_tree(const Tree& t, std::size_t target, Path& path, RedexOptions opts,
                  std::vector<Redex>& out) {
  for (std::size_t k = 0; k < t->kids.size(); ++k) {
    path.push_back({PathStep::Kind::Child, k});
    collect_tree(t->kids[k], target, path, opts, out);
    path.pop_back();
  }
  if (!is(t, TreeKind::Box)) return;
  if (opts.inside_boxes) {
    std::size_t e = 0;
    for (const auto& [key, term] : t->content->entries()) {
      path.push_back({PathStep::Kind::Content, e++});
      collect_simple(term.rep, target, path, opts, out);
      path.pop_back();
    }
  }
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    if (auto r = commutative_rule(t->kids[i])) out.push_back({target, path, *r, i});
}

void collect_simple(const SimpleNet& p, std::size_t target, Path& path, RedexOptions opts,
                    std::vector<Redex>& out) {
  for (std::size_t i = 0; i < p.trees().size(); ++i) {
    path.push_back({PathStep::Kind::Tree, i});
    collect_tree(p.trees()[i], target, path, opts, out);
    path.pop_back();
  }
  for (std::size_t j = 0; j < p.cuts().size(); ++j) {
    path.push_back({PathStep::Kind::Cut, j});
    path.push_back({PathStep::Kind::Left, 0});
    collect_tree(p.cuts()[j].left, target, path, opts, out);
    path.back() = {PathStep::Kind::Right, 0};
    collect_tree(p.cuts()[j].right, target, path, opts, out);
    path.pop_back();
    if (auto r = classify_cut(p.cuts()[j])) {
      if (*r != RuleId::AxCut || ax_cut(p, j, nullptr) == AxState::Fires)
        out.push_back({target, path, *r, 0});
    }
    path.pop_back();
  }
}

// ---- firing ----

struct Ctx {
  const Redex& r;
  FreshNames& fresh;
  const Semiring& k;
};

Net apply_simple(const SimpleNet& p, std::size_t pos, Ctx& cx);

// Width-1 result: the replacement of t, with cuts for the enclosing net.
Net apply_tree(const Tree& t, std::size_t pos, Ctx& cx) {
  const Path& path = cx.r.path;
  if (pos == path.size()) {
    if (!is(t, TreeKind::Box) || cx.r.arg >= t->kids.size() ||
        commutative_rule(t->kids[cx.r.arg]) != cx.r.rule)
      throw NotARedex("no " + std::string(rule_id_name(cx.r.rule)) + " redex at " +
                      print_path(path));
    return commutative_step(t, cx.r.arg, cx.fresh, cx.k);
  }
  const PathStep& st = path[pos];
  if (st.kind == PathStep::Kind::Child) {
    if (st.index >= t->kids.size()) throw NotARedex("bad path " + print_path(path));
    Net sub = apply_tree(t->kids[st.index], pos + 1, cx);
    Net out(1);
    for (const auto& [key, term] : sub.entries()) {
      std::vector<Tree> kids = t->kids;
      kids[st.index] = term.rep.trees()[0];
      out.add(SimpleNet({tree::with_kids(t, std::move(kids))}, term.rep.cuts()), term.coef,
              cx.k);
    }
    return out;
  }
  if (st.kind == PathStep::Kind::Content && is(t, TreeKind::Box)) {
    const Net& content = *t->content;
    const Net::Term& hit = nth_term(content, st.index);
    Net replaced(content.width());
    std::size_t e = 0;
    for (const auto& [key, term] : content.entries()) {
      if (e++ == st.index) continue;
      replaced.add(term.rep, term.coef, cx.k);
    }
    replaced.add(apply_simple(hit.rep, pos + 1, cx).scaled(hit.coef, cx.k), cx.k);
    return Net::of(SimpleNet({tree::box(replaced, t->kids)}, {}));
  }
  throw NotARedex("bad path " + print_path(path));
}

Net apply_simple(const SimpleNet& p, std::size_t pos, Ctx& cx) {
  const Path& path = cx.r.path;
  if (pos >= path.size()) throw NotARedex("bad path " + print_path(path));
  const PathStep& st = path[pos];
  Net out(p.width());
  if (st.kind == PathStep::Kind::Tree) {
    if (st.index >= p.trees().size()) throw NotARedex("bad path " + print_path(path));
    Net sub = apply_tree(p.trees()[st.index], pos + 1, cx);
    for (const auto& [key, term] : sub.entries()) {
      std::vector<Tree> trees = p.trees();
      trees[st.index] = term.rep.trees()[0];
      std::vector<Cut> cuts = p.cuts();
      cuts.insert(cuts.end(), term.rep.cuts().begin(), term.rep.cuts().end());
      out.add(SimpleNet(std::move(trees), std::move(cuts)), term.coef, cx.k);
    }
    return out;
  }
  if (st.kind != PathStep::Kind::Cut || st.index >= p.cuts().size())
    throw NotARedex("bad path " + print_path(path));
  const std::size_t j = st.index;
  const Cut& c = p.cuts()[j];
  if (pos + 1 < path.size()) {
    const PathStep& side = path[pos + 1];
    if (side.kind != PathStep::Kind::Left && side.kind != PathStep::Kind::Right)
      throw NotARedex("bad path " + print_path(path));
    bool left = side.kind == PathStep::Kind::Left;
    Net sub = apply_tree(left ? c.left : c.right, pos + 2, cx);
    for (const auto& [key, term] : sub.entries()) {
      std::vector<Cut> cuts = p.cuts();
      (left ? cuts[j].left : cuts[j].right) = term.rep.trees()[0];
      cuts.insert(cuts.end(), term.rep.cuts().begin(), term.rep.cuts().end());
      out.add(SimpleNet(p.trees(), std::move(cuts)), term.coef, cx.k);
    }
    return out;
  }
  auto rule = classify_cut(c);
  if (!rule || *rule != cx.r.rule)
    throw NotARedex("no " + std::string(rule_id_name(cx.r.rule)) + " redex at " +
                    print_path(path));
  if (*rule == RuleId::AxCut) {
    std::optional<SimpleNet> res;
    AxState s = ax_cut(p, j, &res);
    if (s == AxState::Blocked)
      throw SideConditionBlocked("axiom cut " + print_cut(c) + " on a loop");
    if (s == AxState::None) throw NotARedex("axiom cut " + print_cut(c) + " on a free variable");
    out.add(*res, Scalar(1), cx.k);
    return out;
  }
  Net frag = is_promotion(*rule) ? promotion_cut_step(c, cx.fresh, cx.k)
                                 : basic_cut_step(c, cx.fresh);
  std::vector<Cut> rest;
  for (std::size_t i = 0; i < p.cuts().size(); ++i)
    if (i != j) rest.push_back(p.cuts()[i]);
  for (const auto& [key, term] : frag.entries()) {
    std::vector<Cut> cuts = rest;
    cuts.insert(cuts.end(), term.rep.cuts().begin(), term.rep.cuts().end());
    // basic fragments are summed over the rationals
    out.add(SimpleNet(p.trees(), std::move(cuts)), cx.k.coerce(term.coef), cx.k);
  }
  return out;
}

const Tree* locate(const SimpleNet& p, const Path& path, std::size_t pos,
                   const Cut** cut_out) {
  if (pos >= path.size()) return nullptr;
  const PathStep& st = path[pos];
  const Tree* t = nullptr;
  if (st.kind == PathStep::Kind::Tree) {
    if (st.index >= p.trees().size()) return nullptr;
    t = &p.trees()[st.index];
    ++pos;
  } else if (st.kind == PathStep::Kind::Cut) {
    if (st.index >= p.cuts().size()) return nullptr;
    const Cut& c = p.cuts()[st.index];
    if (pos + 1 == path.size()) {
      *cut_out = &c;
      return nullptr;
    }
    t = path[pos + 1].kind == PathStep::Kind::Left ? &c.left : &c.right;
    pos += 2;
  } else {
    return nullptr;
  }
  while (pos < path.size()) {
    const PathStep& s = path[pos];
    if (s.kind == PathStep::Kind::Child) {
      if (s.index >= (*t)->kids.size()) return nullptr;
      t = &(*t)->kids[s.index];
      ++pos;
    } else if (s.kind == PathStep::Kind::Content && is(*t, TreeKind::Box)) {
      if (s.index >= (*t)->content->size()) return nullptr;
      return locate(nth_term(*(*t)->content, s.index).rep, path, pos + 1, cut_out);
    } else {
      return nullptr;
    }
  }
  return t;
}

}  // namespace

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> v = [] {
    std::vector<RuleId> r;
    for (const auto& i : kRules) r.push_back(i.id);
    return r;
  }();
  return v;
}

const char* rule_id_name(RuleId r) {
  for (const auto& i : kRules)
    if (i.id == r) return i.name;
  return "?";
}

std::optional<RuleId> parse_rule_id(const std::string& s) {
  for (const auto& i : kRules)
    if (s == i.name) return i.id;
  return std::nullopt;
}

bool is_commutative(RuleId r) {
  return r == RuleId::ComBox || r == RuleId::ComCw || r == RuleId::ComCc || r == RuleId::ComCd;
}

std::string print_path(const Path& p) {
  std::string out;
  for (const auto& s : p) {
    if (!out.empty()) out += ".";
    switch (s.kind) {
      case PathStep::Kind::Tree: out += "t" + std::to_string(s.index); break;
      case PathStep::Kind::Cut: out += "c" + std::to_string(s.index); break;
      case PathStep::Kind::Left: out += "l"; break;
      case PathStep::Kind::Right: out += "r"; break;
      case PathStep::Kind::Child: out += std::to_string(s.index); break;
      case PathStep::Kind::Content: out += "b" + std::to_string(s.index); break;
    }
  }
  return out;
}

std::optional<RuleId> classify_cut(const Cut& c) {
  if (is(c.left, TreeKind::Var) || is(c.right, TreeKind::Var)) return RuleId::AxCut;
  if (auto o = oriented(c)) return o->first;
  return std::nullopt;
}

Net basic_cut_step(const Cut& cut, FreshNames& fresh) {
  auto o = oriented(cut);
  if (!o || is_promotion(o->first)) throw NotARedex(print_cut(cut) + " is not a basic redex");
  const Tree& a = o->second.left;
  const Tree& b = o->second.right;
  auto ak = [&](std::size_t i) { return a->kids[i]; };
  auto bk = [&](std::size_t i) { return b->kids[i]; };
  switch (o->first) {
    case RuleId::TensPar: return fragment({{ak(0), bk(0)}, {ak(1), bk(1)}});
    case RuleId::WCw: return fragment({});
    case RuleId::DCw:
    case RuleId::WCd: return Net(0);
    case RuleId::CCw: return fragment({{ak(0), b}, {ak(1), fresh_leaf(b)}});
    case RuleId::WCc: return fragment({{a, bk(0)}, {fresh_leaf(a), bk(1)}});
    case RuleId::DCd: return fragment({{ak(0), bk(0)}});
    case RuleId::CCd: {
      Net n = fragment({{ak(0), b}, {ak(1), tree::coweak()}});
      n.add(fragment({{ak(0), tree::coweak()}, {ak(1), b}}));
      return n;
    }
    case RuleId::DCc: {
      Net n = fragment({{a, bk(0)}, {tree::weak(), bk(1)}});
      n.add(fragment({{tree::weak(), bk(0)}, {a, bk(1)}}));
      return n;
    }
    case RuleId::CCc: {
      Var x11 = fresh.fresh(), x12 = fresh.fresh(), x21 = fresh.fresh(), x22 = fresh.fresh();
      auto v = [](const Var& x) { return tree::var(x); };
      auto dv = [](const Var& x) { return tree::var(x.dual()); };
      return fragment({{ak(0), tree::cocontr(v(x11), v(x12))},
                       {ak(1), tree::cocontr(v(x21), v(x22))},
                       {tree::contr(dv(x11), dv(x21)), bk(0)},
                       {tree::contr(dv(x12), dv(x22)), bk(1)}});
    }
    default: break;
  }
  throw NotARedex(print_cut(cut) + " is not a basic redex");
}

Net promotion_cut_step(const Cut& cut, FreshNames& fresh, const Semiring& k) {
  auto o = oriented(cut);
  if (!o || !is_promotion(o->first))
    throw NotARedex(print_cut(cut) + " is not a promotion redex");
  const Tree& box = o->second.left;
  const Tree& other = o->second.right;
  const std::size_t n = box->kids.size();
  switch (o->first) {
    case RuleId::BoxW: {
      std::vector<Cut> cuts;
      for (const auto& t : box->kids) cuts.push_back({t, tree::weak()});
      return fragment(std::move(cuts));
    }
    case RuleId::BoxD: {
      Net out(0);
      for (const auto& [key, term] : box->content->entries()) {
        SimpleNet q = splice_copy(term.rep, fresh);
        std::vector<Cut> cuts = q.cuts();
        for (std::size_t j = 0; j < n; ++j) cuts.push_back({q.trees()[j], box->kids[j]});
        cuts.push_back({q.trees()[n], other->kids[0]});
        out.add(SimpleNet({}, std::move(cuts)), term.coef, k);
      }
      return out;
    }
    case RuleId::BoxC: {
      std::vector<Tree> xs, ys;
      std::vector<Cut> cuts;
      for (std::size_t j = 0; j < n; ++j) {
        Var x = fresh.fresh(), y = fresh.fresh();
        xs.push_back(tree::var(x));
        ys.push_back(tree::var(y));
        cuts.push_back({box->kids[j], tree::contr(tree::var(x.dual()), tree::var(y.dual()))});
      }
      cuts.push_back({tree::box(*box->content, std::move(xs)), other->kids[0]});
      cuts.push_back({tree::box(*box->content, std::move(ys)), other->kids[1]});
      return fragment(std::move(cuts));
    }
    default: break;
  }
  throw NotARedex(print_cut(cut) + " is not a promotion redex");
}

Net commutative_step(const Tree& box, std::size_t i, FreshNames& fresh, const Semiring& k) {
  if (!is(box, TreeKind::Box) || i >= box->kids.size() || !commutative_rule(box->kids[i]))
    throw NotARedex("no commutative redex at argument " + std::to_string(i));
  const Tree& arg = box->kids[i];
  const std::vector<Tree>& t = box->kids;
  const Net& content = *box->content;
  const std::size_t n = t.size();

  if (is(arg, TreeKind::Coder)) {
    // Chain rule: a sum over the content.
    Net out(1);
    for (const auto& [key, term] : content.entries()) {
      SimpleNet q = splice_copy(term.rep, fresh);
      std::vector<Tree> args;
      std::vector<Cut> cuts = q.cuts();
      cuts.push_back({q.trees()[i], arg});
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) {
          args.push_back(tree::coweak());
          continue;
        }
        Var x = fresh.fresh();
        args.push_back(tree::var(x));
        cuts.push_back({tree::contr(tree::var(x.dual()), q.trees()[j]), t[j]});
      }
      Tree root = tree::cocontr(tree::box(content, std::move(args)), tree::coder(q.trees()[n]));
      out.add(SimpleNet({root}, std::move(cuts)), term.coef, k);
    }
    return out;
  }

  std::vector<Tree> new_args(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Var> xs;  // fresh ports replacing port i
  if (is(arg, TreeKind::Box)) {
    for (std::size_t j = 0; j < arg->kids.size(); ++j) xs.push_back(fresh.fresh());
    new_args.insert(new_args.end(), arg->kids.begin(), arg->kids.end());
  } else if (is(arg, TreeKind::Cocontr)) {
    xs = {fresh.fresh(), fresh.fresh()};
    new_args.insert(new_args.end(), arg->kids.begin(), arg->kids.end());
  }
  new_args.insert(new_args.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());

  Net r(new_args.size() + 1);
  for (const auto& [key, term] : content.entries()) {
    const SimpleNet& p = term.rep;
    std::vector<Tree> trees(p.trees().begin(), p.trees().begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& x : xs) trees.push_back(tree::var(x.dual()));
    trees.insert(trees.end(), p.trees().begin() + static_cast<std::ptrdiff_t>(i) + 1,
                 p.trees().end());
    std::vector<Tree> xv;
    for (const auto& x : xs) xv.push_back(tree::var(x));
    Tree inner;
    if (is(arg, TreeKind::Box)) inner = tree::box(*arg->content, std::move(xv));
    else if (is(arg, TreeKind::Cocontr)) inner = tree::cocontr(xv[0], xv[1]);
    else inner = fresh_leaf(arg);
    std::vector<Cut> cuts = p.cuts();
    cuts.push_back({p.trees()[i], inner});
    r.add(SimpleNet(std::move(trees), std::move(cuts)), term.coef, k);
  }
  return Net::of(SimpleNet({tree::box(r, std::move(new_args))}, {}));
}

std::vector<Redex> find_redexes(const Net& n, RedexOptions opts) {
  std::vector<Redex> out;
  std::size_t e = 0;
  for (const auto& [key, term] : n.entries()) {
    Path path;
    collect_simple(term.rep, e++, path, opts, out);
  }
  return out;
}

Net step(const Net& n, const Redex& r, FreshNames& fresh, const Semiring& k) {
  const Net::Term& hit = nth_term(n, r.target);
  fresh.avoid(n);
  Ctx cx{r, fresh, k};
  Net reduct = apply_simple(hit.rep, 0, cx);
  Net out(n.width());
  std::size_t e = 0;
  for (const auto& [key, term] : n.entries()) {
    if (e++ == r.target) continue;
    out.add(term.rep, term.coef, k);
  }
  // Rules may merge equal reducts with rational addition; read the merged
  // coefficients back in k.
  for (const auto& [key, term] : reduct.entries())
    out.add(term.rep, k.coerce(k.mul(hit.coef, term.coef)), k);
  return out;
}

std::string describe_redex(const Net& n, const Redex& r) {
  const SimpleNet& p = nth_term(n, r.target).rep;
  const Cut* cut = nullptr;
  const Tree* t = locate(p, r.path, 0, &cut);
  if (cut) return print_cut(*cut);
  if (t) return print_tree(*t);
  return "?";
}

NormalizeResult normalize(const Net& n, std::size_t fuel, const Strategy& s, const Semiring& k) {
  NormalizeResult res{n, 0, {}};
  FreshNames fresh;
  std::mt19937_64 rng(s.seed);
  RedexOptions opts{s.inside_boxes};
  while (true) {
    std::vector<Redex> rs = find_redexes(res.net, opts);
    if (s.kind == Strategy::Kind::Single) {
      std::erase_if(rs, [&](const Redex& r) { return !s.rules.count(r.rule); });
    }
    if (rs.empty()) return res;
    if (res.steps == fuel) throw FuelExhausted(res.net, res.steps, res.trace);
    std::size_t pick = 0;
    if (s.kind == Strategy::Kind::Random)
      pick = std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng);
    const Redex& r = rs[pick];
    std::string where = print_path(r.path);
    if (res.net.size() > 1) where = "s" + std::to_string(r.target) + (where.empty() ? "" : ".") + where;
    std::string line = "#" + std::to_string(res.steps + 1) + " " + rule_id_name(r.rule) + " @" +
                       where;
    if (is_commutative(r.rule)) line += "/" + std::to_string(r.arg);
    line += " : " + describe_redex(res.net, r);
    res.net = step(res.net, r, fresh, k);
    res.trace.push_back(std::move(line));
    ++res.steps;
  }
}

}  // namespace dill
