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

#ifndef DILL_SYNTAX_HPP
#define DILL_SYNTAX_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dill/algebra.hpp"
#include "dill/types.hpp"

namespace dill {

struct Var {
  std::string base;
  bool co = false;

  Var dual() const { return {base, !co}; }
  std::string str() const { return co ? "~" + base : base; }
  auto operator<=>(const Var&) const = default;
};

enum class TreeKind { Var, Tens, Par, Weak, Coweak, Der, Coder, Contr, Cocontr, Box };

const char* tree_kind_name(TreeKind k);

class Net;
struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

struct TreeNode {
  TreeKind kind = TreeKind::Var;
  Var var;                              // Var only
  std::vector<Tree> kids;               // children, or box arguments
  std::optional<LType> annot;           // optional type of w / cw
  std::shared_ptr<const Net> content;   // Box only, width = kids.size() + 1
  std::size_t constructors = 0;         // non-variable nodes, boxes included
};

namespace tree {
Tree var(Var x);
Tree var(const std::string& base, bool co = false);
Tree tens(Tree a, Tree b);
Tree par(Tree a, Tree b);
Tree weak(std::optional<LType> annot = std::nullopt);
Tree coweak(std::optional<LType> annot = std::nullopt);
Tree der(Tree a);
Tree coder(Tree a);
Tree contr(Tree a, Tree b);
Tree cocontr(Tree a, Tree b);
Tree box(const Net& content, std::vector<Tree> args);
Tree with_kids(const Tree& t, std::vector<Tree> kids);
}  // namespace tree

// Total structural order; names matter, so compare canonical forms to test
// alpha-equivalence.
int compare(const Tree& a, const Tree& b);

// Variable occurrences of t in pre-order, not entering box contents.
void collect_vars(const Tree& t, std::vector<Var>& out);

struct Cut {
  Tree left;
  Tree right;
};

int compare(const Cut& a, const Cut& b);

// (trees ; cuts). Cuts form a multiset: they are stored oriented and sorted,
// so structural equality is equality up to cut permutation. Construction
// rejects any variable occurring twice.
class SimpleNet {
public:
  SimpleNet() = default;
  SimpleNet(std::vector<Tree> trees, std::vector<Cut> cuts);

  const std::vector<Tree>& trees() const { return trees_; }
  const std::vector<Cut>& cuts() const { return cuts_; }
  std::size_t width() const { return trees_.size(); }
  std::size_t constructors() const;

  bool operator==(const SimpleNet& o) const;
  bool operator<(const SimpleNet& o) const;

private:
  std::vector<Tree> trees_;
  std::vector<Cut> cuts_;
};

int compare(const SimpleNet& a, const SimpleNet& b);

struct VarSets {
  std::set<Var> free;
  std::set<Var> bound;
};

VarSets vars(const Tree& t);
VarSets vars(const SimpleNet& p);
std::vector<Var> occurrences(const SimpleNet& p);

// Renames bound pairs to v0, v1, ... in traversal order (trees, then cuts).
// The cut order used for the traversal is chosen to make the result a
// canonical representative of the alpha class.
SimpleNet alpha_canonicalize(const SimpleNet& p);

// A finite linear combination of simple nets of a common width. Support
// elements are identified up to alpha: each is keyed by its canonical form
// and keeps the names of the first representative added.
class Net {
public:
  struct Term {
    SimpleNet rep;
    Scalar coef;
  };
  using Map = std::map<SimpleNet, Term>;

  explicit Net(std::size_t width = 0) : width_(width) {}
  static Net of(const SimpleNet& p, const Scalar& c = Scalar(1));

  std::size_t width() const { return width_; }
  const Map& entries() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_simple() const;
  const SimpleNet& only() const;
  std::size_t constructors() const;
  Scalar coefficient(const SimpleNet& p) const;

  void add(const SimpleNet& p, const Scalar& c, const Semiring& k = Semiring::rat());
  void add(const Net& o, const Semiring& k = Semiring::rat());
  Net scaled(const Scalar& c, const Semiring& k = Semiring::rat()) const;
  // The same net with every representative replaced by its canonical form.
  Net canonical() const;

  bool operator==(const Net& o) const;
  bool operator<(const Net& o) const;

private:
  std::size_t width_;
  Map terms_;
};

int compare(const Net& a, const Net& b);

// Deterministic fresh-name source. Passed explicitly; never global.
struct FreshNames {
  std::string prefix = "z";
  std::uint64_t next = 0;

  Var fresh();
  // Moves the counter past every name of the form prefix<k> used in n.
  void avoid(const Net& n);
  void avoid(const SimpleNet& p);
};

// p[s/~x]: replaces the unique occurrence of the dual of x.
SimpleNet tree_substitute(const SimpleNet& p, const Tree& s, const Var& x);
Tree tree_substitute(const Tree& t, const Tree& s, const Var& target, int& hits);

// Renames every variable of the scope (trees and cuts, not box contents)
// to fresh names, keeping dual pairs dual.
SimpleNet rename_fresh(const SimpleNet& p, FreshNames& fresh);

std::string print_tree(const Tree& t);
std::string print_cut(const Cut& c);
std::string print_simple(const SimpleNet& p);
std::string print_net(const Net& n);

// Grammar: see README. A zero net "0" takes width_hint.
Net parse_net(const std::string& text, std::size_t width_hint = 0);
Tree parse_tree(const std::string& text);

}  // namespace dill

#endif
