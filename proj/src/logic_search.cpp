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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dill/logic.hpp"

namespace dill {

const char* search_status_name(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::Found: return "Found";
    case SearchResult::Status::NotFound: return "NotFound";
    case SearchResult::Status::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

struct OutOfBudget {};

using Types = std::map<const TreeNode*, LType>;

// A subgoal: trees in conclusion order and a subset of the cuts of the
// scope being searched.
struct Goal {
  std::vector<Tree> trees;
  std::vector<const Cut*> cuts;
};

class Search {
public:
  Search(const SearchOptions& opts, std::size_t& explored) : opts_(opts), explored_(explored) {}

  Deriv net(const Net& p, const std::vector<LType>& gamma, const Context& phi) {
    if (p.is_simple()) return simple(p.only(), gamma, phi);
    std::vector<Scalar> cs;
    std::vector<Deriv> ds;
    std::vector<SimpleNet> reps;
    std::vector<Inference> infs;
    bool clash = false;
    Context all;
    for (const auto& [key, t] : p.entries()) {
      reps.push_back(t.rep);
      cs.push_back(t.coef);
      infs.push_back(infer(t.rep, gamma, phi));
      for (const auto& [v, a] : infs.back().phi) {
        auto [it, fresh] = all.emplace(v, a);
        if (!fresh && it->second != a) clash = true;
      }
    }
    if (clash) {
      // The sum rule shares one context: rename the elements apart.
      FreshNames f{"y"};
      f.avoid(p);
      for (auto& r : reps) r = rename_fresh(r, f);
    }
    for (const auto& r : reps) {
      Deriv d = simple(r, gamma, phi);
      if (!d) return nullptr;
      ds.push_back(d);
    }
    return deriv::sum(gamma, cs, ds);
  }

private:
  static Inference infer(const SimpleNet& p, const std::vector<LType>& gamma, const Context& phi) {
    std::vector<std::optional<LType>> g(gamma.begin(), gamma.end());
    return infer_simple(p, g, phi);
  }

  struct Scope {
    Types types;
    std::set<std::vector<const void*>> failed;
  };

  Deriv simple(const SimpleNet& p, const std::vector<LType>& gamma, const Context& phi) {
    Scope sc;
    sc.types = infer(p, gamma, phi).node_types;
    Goal g;
    g.trees = p.trees();
    for (const auto& c : p.cuts()) g.cuts.push_back(&c);
    return solve(sc, g);
  }

  static std::vector<const void*> key(const Goal& g) {
    std::vector<const void*> k;
    for (const auto& t : g.trees) k.push_back(t.get());
    std::sort(k.begin(), k.end());
    k.push_back(nullptr);
    std::vector<const void*> c(g.cuts.begin(), g.cuts.end());
    std::sort(c.begin(), c.end());
    k.insert(k.end(), c.begin(), c.end());
    return k;
  }

  // Items are trees (0..n-1) then cuts, plus extra trees appended by the
  // caller; connected components are taken over shared variable bases.
  static std::vector<int> components(const std::vector<std::vector<Var>>& vars) {
    std::vector<int> parent(vars.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::map<std::string, int> owner;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (const auto& v : vars[i]) {
        auto [it, fresh] = owner.emplace(v.base, static_cast<int>(i));
        if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
      }
    std::vector<int> comp(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) comp[i] = find(static_cast<int>(i));
    return comp;
  }

  static std::vector<Var> tree_vars(const Tree& t) {
    std::vector<Var> v;
    collect_vars(t, v);
    return v;
  }

  static std::vector<Var> cut_vars(const Cut* c) {
    std::vector<Var> v;
    collect_vars(c->left, v);
    collect_vars(c->right, v);
    return v;
  }

  // Reorders the conclusion of d (trees `have`) into the goal order.
  static Deriv arrange(Deriv d, const std::vector<Tree>& have, const std::vector<Tree>& want) {
    std::vector<std::size_t> sigma;
    bool identity = true;
    for (std::size_t i = 0; i < want.size(); ++i) {
      auto it = std::find(have.begin(), have.end(), want[i]);
      sigma.push_back(static_cast<std::size_t>(it - have.begin()));
      if (sigma.back() != i) identity = false;
    }
    return identity ? d : deriv::perm(std::move(sigma), std::move(d));
  }

  Deriv solve(Scope& sc, const Goal& g) {
    if (++explored_ > opts_.budget) throw OutOfBudget{};
    if (g.trees.empty() && g.cuts.empty()) return deriv::mix0();
    auto k = key(g);
    if (sc.failed.count(k)) return nullptr;
    Deriv d = attempt(sc, g);
    if (!d) sc.failed.insert(std::move(k));
    return d;
  }

  Deriv attempt(Scope& sc, const Goal& g) {
    const std::size_t n = g.trees.size();
    std::vector<std::vector<Var>> vars;
    for (const auto& t : g.trees) vars.push_back(tree_vars(t));
    for (const auto* c : g.cuts) vars.push_back(cut_vars(c));
    std::vector<int> comp = components(vars);

    // Disconnected: split off one component with mix.
    std::set<int> roots(comp.begin(), comp.end());
    if (roots.size() > 1) {
      int pick = opts_.reverse_binary ? comp.back() : comp.front();
      Goal a, b;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        Goal& into = comp[i] == pick ? a : b;
        if (i < n) into.trees.push_back(g.trees[i]);
        else into.cuts.push_back(g.cuts[i - n]);
      }
      Deriv l = solve(sc, a);
      if (!l) return nullptr;
      Deriv r = solve(sc, b);
      if (!r) return nullptr;
      std::vector<Tree> have = a.trees;
      have.insert(have.end(), b.trees.begin(), b.trees.end());
      return arrange(deriv::mix(l, r), have, g.trees);
    }

    // Unary rules are invertible: apply the first one found.
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t i = opts_.reverse_unary ? n - 1 - step : step;
      const Tree& t = g.trees[i];
      std::vector<Tree> rest;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) rest.push_back(g.trees[j]);
      Goal sub{rest, g.cuts};
      std::vector<Tree> have = rest;
      have.push_back(t);
      switch (t->kind) {
        case TreeKind::Par:
        case TreeKind::Contr: {
          sub.trees.push_back(t->kids[0]);
          sub.trees.push_back(t->kids[1]);
          Deriv p = solve(sc, sub);
          if (!p) return nullptr;
          Deriv d = t->kind == TreeKind::Par ? deriv::par(p) : deriv::contr(p);
          return arrange(d, have, g.trees);
        }
        case TreeKind::Der:
        case TreeKind::Coder: {
          sub.trees.push_back(t->kids[0]);
          Deriv p = solve(sc, sub);
          if (!p) return nullptr;
          Deriv d = t->kind == TreeKind::Der ? deriv::der(p) : deriv::coder(p);
          return arrange(d, have, g.trees);
        }
        case TreeKind::Weak: {
          Deriv p = solve(sc, sub);
          if (!p) return nullptr;
          return arrange(deriv::weak(sc.types.at(t.get()), p, t->annot.has_value()), have,
                         g.trees);
        }
        default:
          break;
      }
    }

    if (g.cuts.empty() && n == 2 && g.trees[0]->kind == TreeKind::Var &&
        g.trees[1]->kind == TreeKind::Var && g.trees[0]->var == g.trees[1]->var.dual()) {
      const Tree& plain = g.trees[0]->var.co ? g.trees[1] : g.trees[0];
      Deriv d = deriv::ax(plain->var, sc.types.at(plain.get()));
      return arrange(d, {plain, plain == g.trees[0] ? g.trees[1] : g.trees[0]}, g.trees);
    }
    if (g.cuts.empty() && n == 1 && g.trees[0]->kind == TreeKind::Coweak)
      return deriv::coweak(sc.types.at(g.trees[0].get()), g.trees[0]->annot.has_value());

    // Binary rules: the split of the context is forced by connectivity, the
    // choice of rule is not.
    struct Candidate {
      bool is_cut;
      std::size_t index;
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < n; ++i) {
      auto kd = g.trees[i]->kind;
      if (kd == TreeKind::Tens || kd == TreeKind::Cocontr || kd == TreeKind::Box)
        cands.push_back({false, i});
    }
    for (std::size_t j = 0; j < g.cuts.size(); ++j) cands.push_back({true, j});
    if (opts_.reverse_binary) std::reverse(cands.begin(), cands.end());
    for (const auto& c : cands) {
      Deriv d = c.is_cut ? try_cut(sc, g, c.index) : try_tree(sc, g, c.index);
      if (d) return d;
    }
    return nullptr;
  }

  // Splits the goal without item `skip_tree` / `skip_cut`, with the given
  // extra trees appended; returns one goal per extra tree (the extra tree
  // last), or nothing if two extras share a component.
  static std::optional<std::vector<Goal>> split(const Goal& g, std::size_t skip_tree,
                                                std::size_t skip_cut,
                                                const std::vector<Tree>& extras) {
    std::vector<std::vector<Var>> vars;
    std::vector<Tree> trees;
    std::vector<const Cut*> cuts;
    for (std::size_t i = 0; i < g.trees.size(); ++i)
      if (i != skip_tree) trees.push_back(g.trees[i]);
    for (std::size_t j = 0; j < g.cuts.size(); ++j)
      if (j != skip_cut) cuts.push_back(g.cuts[j]);
    for (const auto& t : trees) vars.push_back(tree_vars(t));
    for (const auto* c : cuts) vars.push_back(cut_vars(c));
    for (const auto& t : extras) vars.push_back(tree_vars(t));
    std::vector<int> comp = components(vars);
    std::size_t base = trees.size() + cuts.size();
    std::map<int, std::size_t> slot;
    for (std::size_t e = 0; e < extras.size(); ++e)
      if (!slot.emplace(comp[base + e], e).second) return std::nullopt;
    std::vector<Goal> out(extras.size());
    for (std::size_t i = 0; i < base; ++i) {
      auto it = slot.find(comp[i]);
      if (it == slot.end()) return std::nullopt;
      if (i < trees.size()) out[it->second].trees.push_back(trees[i]);
      else out[it->second].cuts.push_back(cuts[i - trees.size()]);
    }
    for (std::size_t e = 0; e < extras.size(); ++e) out[e].trees.push_back(extras[e]);
    return out;
  }

  Deriv try_cut(Scope& sc, const Goal& g, std::size_t j) {
    const Cut* c = g.cuts[j];
    auto parts = split(g, static_cast<std::size_t>(-1), j, {c->left, c->right});
    if (!parts) return nullptr;
    Deriv l = solve(sc, (*parts)[0]);
    if (!l) return nullptr;
    Deriv r = solve(sc, (*parts)[1]);
    if (!r) return nullptr;
    std::vector<Tree> have((*parts)[0].trees.begin(), (*parts)[0].trees.end() - 1);
    have.insert(have.end(), (*parts)[1].trees.begin(), (*parts)[1].trees.end() - 1);
    return arrange(deriv::cut(l, r), have, g.trees);
  }

  Deriv try_tree(Scope& sc, const Goal& g, std::size_t i) {
    const Tree& t = g.trees[i];
    auto parts = split(g, i, static_cast<std::size_t>(-1), t->kids);
    if (!parts) return nullptr;
    Deriv content;
    if (t->kind == TreeKind::Box) {
      content = box_content(sc, t);
      if (!content) return nullptr;
    }
    std::vector<Deriv> ps;
    std::vector<Tree> have;
    for (const auto& part : *parts) {
      Deriv d = solve(sc, part);
      if (!d) return nullptr;
      ps.push_back(d);
      have.insert(have.end(), part.trees.begin(), part.trees.end() - 1);
    }
    have.push_back(t);
    Deriv d;
    if (t->kind == TreeKind::Tens) d = deriv::tens(ps[0], ps[1]);
    else if (t->kind == TreeKind::Cocontr) d = deriv::cocontr(ps[0], ps[1]);
    else d = deriv::prom(content, ps);
    return arrange(d, have, g.trees);
  }

  Deriv box_content(Scope& sc, const Tree& t) {
    auto it = content_.find(t.get());
    if (it != content_.end()) return it->second;
    std::vector<LType> gamma;
    for (const auto& a : t->kids) gamma.push_back(LType::intn(dual(sc.types.at(a.get()).body())));
    gamma.push_back(sc.types.at(t.get()).body());
    Search inner(opts_, explored_);
    Deriv d = inner.net(*t->content, gamma, {});
    content_[t.get()] = d;
    return d;
  }

  const SearchOptions& opts_;
  std::size_t& explored_;
  std::map<const TreeNode*, Deriv> content_;
};

}  // namespace

SearchResult sequentialize(const Net& p, const std::vector<LType>& gamma, const Context& phi,
                           SearchOptions opts) {
  SearchResult r;
  try {
    Search s(opts, r.explored);
    r.derivation = s.net(p, gamma, phi);
    r.status = r.derivation ? SearchResult::Status::Found : SearchResult::Status::NotFound;
  } catch (const OutOfBudget&) {
    r.status = SearchResult::Status::BudgetExceeded;
    r.derivation = nullptr;
  }
  return r;
}

std::vector<Deriv> sequentializations(const Net& p, const std::vector<LType>& gamma,
                                      const Context& phi, std::size_t max_count,
                                      std::size_t budget) {
  std::vector<Deriv> out;
  std::set<std::string> seen;
  for (int v = 0; v < 4 && out.size() < max_count; ++v) {
    SearchOptions o;
    o.budget = budget;
    o.reverse_unary = v & 1;
    o.reverse_binary = v & 2;
    SearchResult r = sequentialize(p, gamma, phi, o);
    if (r.status != SearchResult::Status::Found) continue;
    if (seen.insert(print_derivation(r.derivation)).second) out.push_back(r.derivation);
  }
  return out;
}

}  // namespace dill
