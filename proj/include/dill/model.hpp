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

// Webs, objects and sparse morphisms shared by the relational and the
// weighted model. A morphism is a function from source points to sparse
// rows, evaluated on demand and memoized, so that composites never
// enumerate large intermediate webs.

#ifndef DILL_MODEL_HPP
#define DILL_MODEL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dill/algebra.hpp"
#include "dill/error.hpp"
#include "dill/types.hpp"

namespace dill {

using PointId = std::uint32_t;

// Interned points: atoms, tuples (pairs and the unit), multisets and the
// two tags of a disjoint union. Ids are only meaningful within one space.
class PointSpace {
public:
  enum class Kind { Atom, Tuple, Bag, Inl, Inr };

  PointId atom(const std::string& name);
  PointId tuple(std::vector<PointId> parts);
  PointId unit() { return tuple({}); }
  PointId pair(PointId a, PointId b) { return tuple({a, b}); }
  PointId bag(std::vector<PointId> elems);
  PointId empty_bag() { return bag({}); }
  PointId singleton(PointId a) { return bag({a}); }
  PointId tag(bool right, PointId a);
  PointId bag_union(PointId a, PointId b);
  // a - b; nullopt unless b is below a.
  std::optional<PointId> bag_minus(PointId a, PointId b);

  Kind kind(PointId p) const { return nodes_[p].kind; }
  const std::string& name(PointId p) const { return nodes_[p].name; }
  const std::vector<PointId>& parts(PointId p) const { return nodes_[p].parts; }
  std::size_t bag_size(PointId p) const { return nodes_[p].parts.size(); }
  // Largest multiset anywhere inside p (0 if none).
  std::size_t max_bag(PointId p) const { return nodes_[p].max_bag; }
  std::size_t count(PointId bag, PointId elem) const;

  int compare(PointId a, PointId b) const;
  std::string print(PointId p) const;
  std::size_t size() const { return nodes_.size(); }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<PointId> parts;
    std::size_t max_bag = 0;
  };
  using Key = std::tuple<Kind, std::string, std::vector<PointId>>;
  PointId intern(Kind k, std::string name, std::vector<PointId> parts);

  std::vector<Node> nodes_;
  std::map<Key, PointId> index_;
};

using Space = std::shared_ptr<PointSpace>;

// Interpretation of atoms. A dual atom has the web of the atom.
struct Valuation {
  std::map<std::string, std::vector<std::string>> atoms;

  // {"atoms": {"a": ["p", "q"]}}
  static Valuation parse_json(const std::string& text);
  std::string to_json() const;
};

// An object of the model, described structurally so that its web can be
// enumerated at any degree bound.
struct Obj {
  enum class Kind { Atom, Unit, Tensor, Excl, With, Top };
  Kind kind = Kind::Unit;
  std::string name;                 // Atom
  std::vector<std::string> points;  // Atom
  std::vector<Obj> kids;

  static Obj atom(std::string name, std::vector<std::string> points);
  static Obj unit() { return {}; }
  static Obj top() { return {Kind::Top, {}, {}, {}}; }
  static Obj tensor(Obj a, Obj b) { return {Kind::Tensor, {}, {}, {std::move(a), std::move(b)}}; }
  static Obj excl(Obj a) { return {Kind::Excl, {}, {}, {std::move(a)}}; }
  static Obj with(Obj a, Obj b) { return {Kind::With, {}, {}, {std::move(a), std::move(b)}}; }

  bool operator==(const Obj& o) const = default;
};

std::string print_obj(const Obj& o);

// Par is interpreted as tensor, ? as !, and duals by the same web.
Obj denote_type(const LType& a, const Valuation& v);

// All points of o with every multiset of size at most bound.
std::vector<PointId> enumerate_web(const Obj& o, std::size_t bound, PointSpace& s);

// All multisets over elems of size at most bound.
std::vector<PointId> enumerate_bags(const std::vector<PointId>& elems, std::size_t bound,
                                    PointSpace& s);

// The sub-multisets of a bag.
std::vector<PointId> sub_bags(PointId m, PointSpace& s);

// Weight arithmetic: bool for the relational model, Scalar for the weighted.
template <class K>
struct Weight;

template <>
struct Weight<bool> {
  static bool zero() { return false; }
  static bool one() { return true; }
  static bool add(bool a, bool b) { return a || b; }
  static bool mul(bool a, bool b) { return a && b; }
  static bool is_zero(bool a) { return !a; }
  static bool of_count(const Scalar& c) { return !c.is_zero(); }
  // Boolean coercion of a coefficient: positive to 1, zero dropped.
  static bool of_coefficient(const Scalar& c) {
    if (c.is_negative()) throw NegativeCoefficient("coefficient " + c.str() + " in the relational model");
    return !c.is_zero();
  }
  static std::string str(bool a) { return a ? "1" : "0"; }
};

template <>
struct Weight<Scalar> {
  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  static Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static bool is_zero(const Scalar& a) { return a.is_zero(); }
  static Scalar of_count(const Scalar& c) { return c; }
  static Scalar of_coefficient(const Scalar& c) { return c; }
  static std::string str(const Scalar& a) { return a.str(); }
};

// (l+r choose l) for bags, and prod_b p(b)! / prod_e r(e)! style counts.
Scalar bag_binomial(const PointSpace& s, PointId sum, PointId part);
Scalar bag_factorials(const PointSpace& s, PointId bag);

template <class K>
using Row = std::map<PointId, K>;

template <class K>
void accumulate(Row<K>& row, PointId p, const K& w) {
  if (Weight<K>::is_zero(w)) return;
  auto [it, fresh] = row.emplace(p, w);
  if (!fresh) {
    it->second = Weight<K>::add(it->second, w);
    if (Weight<K>::is_zero(it->second)) row.erase(it);
  }
}

struct Env {
  Space space;
  std::size_t bound = 0;
};

template <class K>
class Morphism {
public:
  using RowFn = std::function<Row<K>(PointId)>;

  Morphism() = default;
  Morphism(Obj src, Obj tgt, Env env, RowFn fn)
      : s_(std::make_shared<State>(State{std::move(src), std::move(tgt), std::move(env),
                                         std::move(fn), {}})) {}

  const Obj& src() const { return s_->src; }
  const Obj& tgt() const { return s_->tgt; }
  const Env& env() const { return s_->env; }
  PointSpace& space() const { return *s_->env.space; }

  const Row<K>& row(PointId a) const {
    auto it = s_->memo.find(a);
    if (it != s_->memo.end()) return it->second;
    Row<K> r = s_->fn(a);
    return s_->memo.emplace(a, std::move(r)).first->second;
  }

  K at(PointId a, PointId b) const {
    const Row<K>& r = row(a);
    auto it = r.find(b);
    return it == r.end() ? Weight<K>::zero() : it->second;
  }

private:
  struct State {
    Obj src, tgt;
    Env env;
    RowFn fn;
    std::unordered_map<PointId, Row<K>> memo;
  };
  std::shared_ptr<State> s_;
};

template <class K>
struct Entry {
  PointId row;
  PointId col;
  K value;
};

// Entries with row in the source web at bound d and every multiset of the
// column of size at most d, in structural order.
template <class K>
std::vector<Entry<K>> entries(const Morphism<K>& f, std::size_t d);

template <class K>
struct Mismatch {
  PointId row;
  PointId col;
  K left;
  K right;
};

// First entry (in structural order) at which f and g differ, comparing at d.
template <class K>
std::optional<Mismatch<K>> first_difference(const Morphism<K>& f, const Morphism<K>& g,
                                            std::size_t d);

template <class K>
std::string describe(const Mismatch<K>& m, const PointSpace& s) {
  return "entry (" + s.print(m.row) + ", " + s.print(m.col) + "): " + Weight<K>::str(m.left) +
         " vs " + Weight<K>::str(m.right);
}

// JSON list of {row, col, val} in structural order.
template <class K>
std::string dump_json(const Morphism<K>& f, std::size_t d);

// ---- combinators ----

template <class K> Morphism<K> identity(const Obj& x, const Env& e);
template <class K> Morphism<K> zero_morphism(const Obj& x, const Obj& y, const Env& e);
// g o f
template <class K> Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f);
template <class K> Morphism<K> tensor(const Morphism<K>& f, const Morphism<K>& g);
template <class K> Morphism<K> add(const Morphism<K>& f, const Morphism<K>& g);
template <class K> Morphism<K> scale(const K& c, const Morphism<K>& f);
// Transpose; materializes f over its source web at the bound of f.
template <class K> Morphism<K> transpose(const Morphism<K>& f);
// A morphism given by a point map with weight one.
template <class K>
Morphism<K> point_map(const Obj& x, const Obj& y, const Env& e, std::function<PointId(PointId)> fn);
// From a finite table of entries.
template <class K>
Morphism<K> from_entries(const Obj& x, const Obj& y, const Env& e,
                         const std::vector<Entry<K>>& es);

// (X (x) Y) (x) Z -> X (x) (Y (x) Z) and back.
template <class K> Morphism<K> assoc(const Obj& x, const Obj& y, const Obj& z, const Env& e);
template <class K> Morphism<K> assoc_inv(const Obj& x, const Obj& y, const Obj& z, const Env& e);
template <class K> Morphism<K> swap(const Obj& x, const Obj& y, const Env& e);
// (X (x) Y) (x) Z -> (X (x) Z) (x) Y
template <class K> Morphism<K> sigma23(const Obj& x, const Obj& y, const Obj& z, const Env& e);
// X -> 1 (x) X and X -> X (x) 1
template <class K> Morphism<K> lunit(const Obj& x, const Env& e);
template <class K> Morphism<K> runit(const Obj& x, const Env& e);

// ---- generators ----

template <class K> Morphism<K> der(const Obj& x, const Env& e);      // !X -> X
template <class K> Morphism<K> coder(const Obj& x, const Env& e);    // X -> !X
template <class K> Morphism<K> weak(const Obj& x, const Env& e);     // !X -> 1
template <class K> Morphism<K> coweak(const Obj& x, const Env& e);   // 1 -> !X
template <class K> Morphism<K> contr(const Obj& x, const Env& e);    // !X -> !X (x) !X
template <class K> Morphism<K> cocontr(const Obj& x, const Env& e);  // !X (x) !X -> !X
template <class K> Morphism<K> digg(const Obj& x, const Env& e);     // !X -> !!X
template <class K> Morphism<K> seely2(const Obj& x, const Obj& y, const Env& e);
template <class K> Morphism<K> seely2_inv(const Obj& x, const Obj& y, const Env& e);
template <class K> Morphism<K> seely0(const Env& e);                 // 1 -> !T
template <class K> Morphism<K> mix0(const Env& e);                   // 1 -> bottom
template <class K> Morphism<K> mix2(const Obj& x, const Obj& y, const Env& e);
template <class K> Morphism<K> mu0(const Env& e);                    // 1 -> !1
template <class K> Morphism<K> mu2(const Obj& x, const Obj& y, const Env& e);
// !M, with the multinomial weights.
template <class K> Morphism<K> excl(const Morphism<K>& m);
// Derivative and coderivative: !X -> !X (x) X and !X (x) X -> !X, built from
// contraction and dereliction.
template <class K> Morphism<K> derc(const Obj& x, const Env& e);
template <class K> Morphism<K> coderc(const Obj& x, const Env& e);

// Source of a promotion with n arguments: 1, !A1, or (..(!A1 (x) !A2)..) (x) !An.
Obj promotion_source(const std::vector<Obj>& args);

// Generalized promotion by composition of digging and the lax monoidal
// structure, f : promotion_source(args) -> B.
template <class K>
Morphism<K> promotion(const Morphism<K>& f, const std::vector<Obj>& args);

// One entry of a morphism out of a product of exponentials: a tuple of
// bags, a target point and a weight.
template <class K>
struct PromEntry {
  std::vector<PointId> bags;
  PointId target;
  K weight;
};

// Closed form of promotion: for every multiset r of entries with at most
// bound elements and all summed bags within bound, the entry
// ((sum of bags), [targets]) gets [targets r] times the product of weights.
template <class K>
std::map<std::pair<std::vector<PointId>, PointId>, K> promotion_closed_form(
    const std::vector<PromEntry<K>>& f, std::size_t n, std::size_t bound, PointSpace& s);

// Entries of f read as promotion entries (source flattened along
// promotion_source).
template <class K>
std::vector<PromEntry<K>> prom_entries(const Morphism<K>& f, std::size_t n, std::size_t d);

// Packs / unpacks the flat tuple of n bags into a promotion_source point.
PointId pack_args(const std::vector<PointId>& bags, PointSpace& s);
std::vector<PointId> unpack_args(PointId p, std::size_t n, const PointSpace& s);

template <class K>
Morphism<K> promotion_closed(const Morphism<K>& f, const std::vector<Obj>& args);

}  // namespace dill

#endif
