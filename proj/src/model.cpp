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

#include "dill/model.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace dill {

// ---- points ----

PointId PointSpace::intern(Kind k, std::string name, std::vector<PointId> parts) {
  Key key{k, name, parts};
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  Node n{k, std::move(name), std::move(parts), 0};
  if (k == Kind::Bag) n.max_bag = n.parts.size();
  for (PointId p : n.parts) n.max_bag = std::max(n.max_bag, nodes_[p].max_bag);
  PointId id = static_cast<PointId>(nodes_.size());
  nodes_.push_back(std::move(n));
  index_.emplace(std::move(key), id);
  return id;
}

PointId PointSpace::atom(const std::string& name) { return intern(Kind::Atom, name, {}); }

PointId PointSpace::tuple(std::vector<PointId> parts) {
  return intern(Kind::Tuple, "", std::move(parts));
}

PointId PointSpace::bag(std::vector<PointId> elems) {
  std::sort(elems.begin(), elems.end());
  return intern(Kind::Bag, "", std::move(elems));
}

PointId PointSpace::tag(bool right, PointId a) {
  return intern(right ? Kind::Inr : Kind::Inl, "", {a});
}

PointId PointSpace::bag_union(PointId a, PointId b) {
  std::vector<PointId> out;
  const auto& x = parts(a);
  const auto& y = parts(b);
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return intern(Kind::Bag, "", std::move(out));
}

std::optional<PointId> PointSpace::bag_minus(PointId a, PointId b) {
  const auto& x = parts(a);
  const auto& y = parts(b);
  if (!std::includes(x.begin(), x.end(), y.begin(), y.end())) return std::nullopt;
  std::vector<PointId> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return intern(Kind::Bag, "", std::move(out));
}

std::size_t PointSpace::count(PointId bag, PointId elem) const {
  const auto& x = parts(bag);
  auto r = std::equal_range(x.begin(), x.end(), elem);
  return static_cast<std::size_t>(r.second - r.first);
}

int PointSpace::compare(PointId a, PointId b) const {
  if (a == b) return 0;
  const Node& x = nodes_[a];
  const Node& y = nodes_[b];
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  if (x.kind == Kind::Atom) return x.name < y.name ? -1 : (x.name > y.name ? 1 : 0);
  std::vector<PointId> xs = x.parts, ys = y.parts;
  if (x.kind == Kind::Bag) {
    if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
    auto less = [this](PointId u, PointId v) { return compare(u, v) < 0; };
    std::sort(xs.begin(), xs.end(), less);
    std::sort(ys.begin(), ys.end(), less);
  }
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    int c = compare(xs[i], ys[i]);
    if (c) return c;
  }
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

std::string PointSpace::print(PointId p) const {
  const Node& n = nodes_[p];
  switch (n.kind) {
    case Kind::Atom: return n.name;
    case Kind::Inl: return "inl(" + print(n.parts[0]) + ")";
    case Kind::Inr: return "inr(" + print(n.parts[0]) + ")";
    case Kind::Tuple: {
      if (n.parts.empty()) return "*";
      std::string out = "(";
      for (std::size_t i = 0; i < n.parts.size(); ++i) out += (i ? ", " : "") + print(n.parts[i]);
      return out + ")";
    }
    case Kind::Bag: {
      std::vector<PointId> xs = n.parts;
      std::sort(xs.begin(), xs.end(), [this](PointId u, PointId v) { return compare(u, v) < 0; });
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + print(xs[i]);
      return out + "]";
    }
  }
  return "?";
}

// ---- valuations and objects ----

Valuation Valuation::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("valuation: ") + e.what());
  }
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_object())
    throw UsageError("valuation: expected {\"atoms\": {...}}");
  Valuation v;
  for (const auto& [name, pts] : j["atoms"].items()) {
    if (!pts.is_array()) throw UsageError("valuation: web of " + name + " is not a list");
    std::vector<std::string> web;
    for (const auto& p : pts) {
      if (!p.is_string()) throw UsageError("valuation: points of " + name + " must be strings");
      web.push_back(p.get<std::string>());
    }
    std::sort(web.begin(), web.end());
    web.erase(std::unique(web.begin(), web.end()), web.end());
    v.atoms[name] = std::move(web);
  }
  return v;
}

std::string Valuation::to_json() const {
  nlohmann::json j;
  j["atoms"] = nlohmann::json::object();
  for (const auto& [name, pts] : atoms) j["atoms"][name] = pts;
  return j.dump();
}

Obj Obj::atom(std::string name, std::vector<std::string> points) {
  Obj o;
  o.kind = Kind::Atom;
  o.name = std::move(name);
  o.points = std::move(points);
  return o;
}

std::string print_obj(const Obj& o) {
  switch (o.kind) {
    case Obj::Kind::Atom: return o.name;
    case Obj::Kind::Unit: return "1";
    case Obj::Kind::Top: return "T";
    case Obj::Kind::Tensor: return "(" + print_obj(o.kids[0]) + " x " + print_obj(o.kids[1]) + ")";
    case Obj::Kind::With: return "(" + print_obj(o.kids[0]) + " & " + print_obj(o.kids[1]) + ")";
    case Obj::Kind::Excl: return "!" + print_obj(o.kids[0]);
  }
  return "?";
}

Obj denote_type(const LType& a, const Valuation& v) {
  switch (a.kind) {
    case LType::Kind::Atom:
    case LType::Kind::CoAtom: {
      auto it = v.atoms.find(a.atom);
      if (it == v.atoms.end()) throw UnknownAtom("no web for atom " + a.atom);
      return Obj::atom(a.atom, it->second);
    }
    case LType::Kind::Tens:
    case LType::Kind::Par:
      return Obj::tensor(denote_type(a.left(), v), denote_type(a.right(), v));
    case LType::Kind::Excl:
    case LType::Kind::Int:
      return Obj::excl(denote_type(a.body(), v));
  }
  throw UnknownAtom("bad type");
}

std::vector<PointId> enumerate_bags(const std::vector<PointId>& elems, std::size_t bound,
                                    PointSpace& s) {
  std::vector<PointId> out;
  std::vector<PointId> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    out.push_back(s.bag(cur));
    if (cur.size() == bound) return;
    for (std::size_t i = from; i < elems.size(); ++i) {
      cur.push_back(elems[i]);
      go(i);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<PointId> enumerate_web(const Obj& o, std::size_t bound, PointSpace& s) {
  std::vector<PointId> out;
  switch (o.kind) {
    case Obj::Kind::Atom:
      for (const auto& p : o.points) out.push_back(s.atom(p));
      break;
    case Obj::Kind::Unit: out.push_back(s.unit()); break;
    case Obj::Kind::Top: break;
    case Obj::Kind::Tensor: {
      auto a = enumerate_web(o.kids[0], bound, s);
      auto b = enumerate_web(o.kids[1], bound, s);
      for (PointId x : a)
        for (PointId y : b) out.push_back(s.pair(x, y));
      break;
    }
    case Obj::Kind::With: {
      for (PointId x : enumerate_web(o.kids[0], bound, s)) out.push_back(s.tag(false, x));
      for (PointId y : enumerate_web(o.kids[1], bound, s)) out.push_back(s.tag(true, y));
      break;
    }
    case Obj::Kind::Excl: out = enumerate_bags(enumerate_web(o.kids[0], bound, s), bound, s); break;
  }
  return out;
}

std::vector<PointId> sub_bags(PointId m, PointSpace& s) {
  // Distinct elements with multiplicities.
  std::vector<std::pair<PointId, std::size_t>> groups;
  for (PointId p : s.parts(m)) {
    if (!groups.empty() && groups.back().first == p) ++groups.back().second;
    else groups.push_back({p, 1});
  }
  std::vector<PointId> out;
  std::vector<PointId> cur;
  std::function<void(std::size_t)> go = [&](std::size_t g) {
    if (g == groups.size()) {
      out.push_back(s.bag(cur));
      return;
    }
    std::size_t before = cur.size();
    for (std::size_t k = 0; k <= groups[g].second; ++k) {
      if (k) cur.push_back(groups[g].first);
      go(g + 1);
    }
    cur.resize(before);
  };
  go(0);
  return out;
}

Scalar bag_binomial(const PointSpace& s, PointId sum, PointId part) {
  mpz_class r = 1;
  const auto& xs = s.parts(sum);
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), j - i, s.count(part, xs[i]));
    r *= b;
    i = j;
  }
  return Scalar(mpq_class(r));
}

Scalar bag_factorials(const PointSpace& s, PointId bag) {
  mpz_class r = 1;
  const auto& xs = s.parts(bag);
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    r *= f;
    i = j;
  }
  return Scalar(mpq_class(r));
}

Obj promotion_source(const std::vector<Obj>& args) {
  if (args.empty()) return Obj::unit();
  Obj s = Obj::excl(args[0]);
  for (std::size_t i = 1; i < args.size(); ++i) s = Obj::tensor(s, Obj::excl(args[i]));
  return s;
}

PointId pack_args(const std::vector<PointId>& bags, PointSpace& s) {
  if (bags.empty()) return s.unit();
  PointId p = bags[0];
  for (std::size_t i = 1; i < bags.size(); ++i) p = s.pair(p, bags[i]);
  return p;
}

std::vector<PointId> unpack_args(PointId p, std::size_t n, const PointSpace& s) {
  std::vector<PointId> out(n);
  for (std::size_t i = n; i-- > 1;) {
    out[i] = s.parts(p)[1];
    p = s.parts(p)[0];
  }
  if (n) out[0] = p;
  return out;
}

// ---- morphisms ----

namespace {

bool fits(const PointSpace& s, PointId p, std::size_t d) { return s.max_bag(p) <= d; }

std::vector<PointId> sorted_web(const Obj& o, std::size_t d, PointSpace& s) {
  auto w = enumerate_web(o, d, s);
  std::sort(w.begin(), w.end(), [&](PointId a, PointId b) { return s.compare(a, b) < 0; });
  return w;
}

template <class K>
K power(const K& w, std::size_t c) {
  K r = Weight<K>::one();
  for (std::size_t i = 0; i < c; ++i) r = Weight<K>::mul(r, w);
  return r;
}

void require_same(const Obj& a, const Obj& b, const char* what) {
  if (!(a == b))
    throw WebMismatch(std::string(what) + ": " + print_obj(a) + " against " + print_obj(b));
}

// Multiset partitions of m into nonempty parts, parts as sorted id lists.
void partitions(PointSpace& s, PointId remaining, std::vector<PointId>& cur,
                std::set<std::vector<PointId>>& out) {
  if (s.bag_size(remaining) == 0) {
    std::vector<PointId> p = cur;
    std::sort(p.begin(), p.end());
    out.insert(std::move(p));
    return;
  }
  PointId first = s.parts(remaining)[0];
  PointId rest = *s.bag_minus(remaining, s.singleton(first));
  for (PointId sub : sub_bags(rest, s)) {
    PointId part = s.bag_union(sub, s.singleton(first));
    cur.push_back(part);
    partitions(s, *s.bag_minus(remaining, part), cur, out);
    cur.pop_back();
  }
}

}  // namespace

template <class K>
std::vector<Entry<K>> entries(const Morphism<K>& f, std::size_t d) {
  PointSpace& s = f.space();
  std::vector<Entry<K>> out;
  for (PointId a : sorted_web(f.src(), d, s)) {
    std::vector<Entry<K>> row;
    for (const auto& [b, w] : f.row(a))
      if (fits(s, b, d)) row.push_back({a, b, w});
    std::sort(row.begin(), row.end(),
              [&](const Entry<K>& x, const Entry<K>& y) { return s.compare(x.col, y.col) < 0; });
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

template <class K>
std::optional<Mismatch<K>> first_difference(const Morphism<K>& f, const Morphism<K>& g,
                                            std::size_t d) {
  require_same(f.src(), g.src(), "comparing sources");
  require_same(f.tgt(), g.tgt(), "comparing targets");
  PointSpace& s = f.space();
  for (PointId a : sorted_web(f.src(), d, s)) {
    std::vector<PointId> cols;
    for (const auto& [b, w] : f.row(a))
      if (fits(s, b, d)) cols.push_back(b);
    for (const auto& [b, w] : g.row(a))
      if (fits(s, b, d)) cols.push_back(b);
    std::sort(cols.begin(), cols.end(), [&](PointId x, PointId y) { return s.compare(x, y) < 0; });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (PointId b : cols) {
      K x = f.at(a, b), y = g.at(a, b);
      if (!(x == y)) return Mismatch<K>{a, b, x, y};
    }
  }
  return std::nullopt;
}

template <class K>
std::string dump_json(const Morphism<K>& f, std::size_t d) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries(f, d))
    j.push_back({{"row", f.space().print(e.row)},
                 {"col", f.space().print(e.col)},
                 {"val", Weight<K>::str(e.value)}});
  return j.dump();
}

template <class K>
Morphism<K> identity(const Obj& x, const Env& e) {
  return Morphism<K>(x, x, e, [](PointId a) { return Row<K>{{a, Weight<K>::one()}}; });
}

template <class K>
Morphism<K> zero_morphism(const Obj& x, const Obj& y, const Env& e) {
  return Morphism<K>(x, y, e, [](PointId) { return Row<K>{}; });
}

template <class K>
Morphism<K> compose(const Morphism<K>& g, const Morphism<K>& f) {
  require_same(f.tgt(), g.src(), "composition");
  return Morphism<K>(f.src(), g.tgt(), f.env(), [f, g](PointId a) {
    Row<K> out;
    for (const auto& [b, w] : f.row(a))
      for (const auto& [c, v] : g.row(b)) accumulate(out, c, Weight<K>::mul(w, v));
    return out;
  });
}

template <class K>
Morphism<K> tensor(const Morphism<K>& f, const Morphism<K>& g) {
  Env e = f.env();
  return Morphism<K>(Obj::tensor(f.src(), g.src()), Obj::tensor(f.tgt(), g.tgt()), e,
                     [f, g, e](PointId a) {
                       PointSpace& s = *e.space;
                       Row<K> out;
                       PointId l = s.parts(a)[0], r = s.parts(a)[1];
                       for (const auto& [b, w] : f.row(l))
                         for (const auto& [c, v] : g.row(r))
                           accumulate(out, s.pair(b, c), Weight<K>::mul(w, v));
                       return out;
                     });
}

template <class K>
Morphism<K> add(const Morphism<K>& f, const Morphism<K>& g) {
  require_same(f.src(), g.src(), "sum");
  require_same(f.tgt(), g.tgt(), "sum");
  return Morphism<K>(f.src(), f.tgt(), f.env(), [f, g](PointId a) {
    Row<K> out = f.row(a);
    for (const auto& [b, w] : g.row(a)) accumulate(out, b, w);
    return out;
  });
}

template <class K>
Morphism<K> scale(const K& c, const Morphism<K>& f) {
  return Morphism<K>(f.src(), f.tgt(), f.env(), [c, f](PointId a) {
    Row<K> out;
    for (const auto& [b, w] : f.row(a)) accumulate(out, b, Weight<K>::mul(c, w));
    return out;
  });
}

template <class K>
Morphism<K> transpose(const Morphism<K>& f) {
  auto table = std::make_shared<std::unordered_map<PointId, Row<K>>>();
  for (PointId a : enumerate_web(f.src(), f.env().bound, f.space()))
    for (const auto& [b, w] : f.row(a)) (*table)[b][a] = w;
  return Morphism<K>(f.tgt(), f.src(), f.env(), [table](PointId b) {
    auto it = table->find(b);
    return it == table->end() ? Row<K>{} : it->second;
  });
}

template <class K>
Morphism<K> point_map(const Obj& x, const Obj& y, const Env& e,
                      std::function<PointId(PointId)> fn) {
  return Morphism<K>(x, y, e, [fn](PointId a) { return Row<K>{{fn(a), Weight<K>::one()}}; });
}

template <class K>
Morphism<K> from_entries(const Obj& x, const Obj& y, const Env& e,
                         const std::vector<Entry<K>>& es) {
  auto table = std::make_shared<std::unordered_map<PointId, Row<K>>>();
  for (const auto& en : es) accumulate((*table)[en.row], en.col, en.value);
  return Morphism<K>(x, y, e, [table](PointId a) {
    auto it = table->find(a);
    return it == table->end() ? Row<K>{} : it->second;
  });
}

template <class K>
Morphism<K> assoc(const Obj& x, const Obj& y, const Obj& z, const Env& e) {
  Space sp = e.space;
  return point_map<K>(Obj::tensor(Obj::tensor(x, y), z), Obj::tensor(x, Obj::tensor(y, z)), e,
                      [sp](PointId p) {
                        PointId xy = sp->parts(p)[0], c = sp->parts(p)[1];
                        return sp->pair(sp->parts(xy)[0], sp->pair(sp->parts(xy)[1], c));
                      });
}

template <class K>
Morphism<K> assoc_inv(const Obj& x, const Obj& y, const Obj& z, const Env& e) {
  Space sp = e.space;
  return point_map<K>(Obj::tensor(x, Obj::tensor(y, z)), Obj::tensor(Obj::tensor(x, y), z), e,
                      [sp](PointId p) {
                        PointId a = sp->parts(p)[0], yz = sp->parts(p)[1];
                        return sp->pair(sp->pair(a, sp->parts(yz)[0]), sp->parts(yz)[1]);
                      });
}

template <class K>
Morphism<K> swap(const Obj& x, const Obj& y, const Env& e) {
  Space sp = e.space;
  return point_map<K>(Obj::tensor(x, y), Obj::tensor(y, x), e,
                      [sp](PointId p) { return sp->pair(sp->parts(p)[1], sp->parts(p)[0]); });
}

template <class K>
Morphism<K> sigma23(const Obj& x, const Obj& y, const Obj& z, const Env& e) {
  Space sp = e.space;
  return point_map<K>(Obj::tensor(Obj::tensor(x, y), z), Obj::tensor(Obj::tensor(x, z), y), e,
                      [sp](PointId p) {
                        PointId xy = sp->parts(p)[0], c = sp->parts(p)[1];
                        return sp->pair(sp->pair(sp->parts(xy)[0], c), sp->parts(xy)[1]);
                      });
}

template <class K>
Morphism<K> lunit(const Obj& x, const Env& e) {
  Space sp = e.space;
  return point_map<K>(x, Obj::tensor(Obj::unit(), x), e,
                      [sp](PointId p) { return sp->pair(sp->unit(), p); });
}

template <class K>
Morphism<K> runit(const Obj& x, const Env& e) {
  Space sp = e.space;
  return point_map<K>(x, Obj::tensor(x, Obj::unit()), e,
                      [sp](PointId p) { return sp->pair(p, sp->unit()); });
}

template <class K>
Morphism<K> der(const Obj& x, const Env& e) {
  Space sp = e.space;
  return Morphism<K>(Obj::excl(x), x, e, [sp](PointId m) {
    if (sp->bag_size(m) != 1) return Row<K>{};
    return Row<K>{{sp->parts(m)[0], Weight<K>::one()}};
  });
}

template <class K>
Morphism<K> coder(const Obj& x, const Env& e) {
  Env env = e;
  return Morphism<K>(x, Obj::excl(x), e, [env](PointId a) {
    if (env.bound < 1) return Row<K>{};
    return Row<K>{{env.space->singleton(a), Weight<K>::one()}};
  });
}

template <class K>
Morphism<K> weak(const Obj& x, const Env& e) {
  Space sp = e.space;
  return Morphism<K>(Obj::excl(x), Obj::unit(), e, [sp](PointId m) {
    if (sp->bag_size(m) != 0) return Row<K>{};
    return Row<K>{{sp->unit(), Weight<K>::one()}};
  });
}

template <class K>
Morphism<K> coweak(const Obj& x, const Env& e) {
  Space sp = e.space;
  return Morphism<K>(Obj::unit(), Obj::excl(x), e,
                     [sp](PointId) { return Row<K>{{sp->empty_bag(), Weight<K>::one()}}; });
}

template <class K>
Morphism<K> contr(const Obj& x, const Env& e) {
  Space sp = e.space;
  return Morphism<K>(Obj::excl(x), Obj::tensor(Obj::excl(x), Obj::excl(x)), e, [sp](PointId m) {
    Row<K> out;
    for (PointId l : sub_bags(m, *sp)) out[sp->pair(l, *sp->bag_minus(m, l))] = Weight<K>::one();
    return out;
  });
}

template <class K>
Morphism<K> cocontr(const Obj& x, const Env& e) {
  Env env = e;
  return Morphism<K>(Obj::tensor(Obj::excl(x), Obj::excl(x)), Obj::excl(x), e, [env](PointId p) {
    PointSpace& s = *env.space;
    PointId l = s.parts(p)[0], r = s.parts(p)[1];
    if (s.bag_size(l) + s.bag_size(r) > env.bound) return Row<K>{};
    PointId m = s.bag_union(l, r);
    return Row<K>{{m, Weight<K>::of_count(bag_binomial(s, m, l))}};
  });
}

template <class K>
Morphism<K> digg(const Obj& x, const Env& e) {
  Env env = e;
  return Morphism<K>(Obj::excl(x), Obj::excl(Obj::excl(x)), e, [env](PointId m) {
    PointSpace& s = *env.space;
    std::set<std::vector<PointId>> parts;
    std::vector<PointId> cur;
    partitions(s, m, cur, parts);
    Row<K> out;
    for (const auto& p : parts) {
      std::vector<PointId> elems = p;
      while (elems.size() <= env.bound) {
        out[s.bag(elems)] = Weight<K>::one();
        elems.push_back(s.empty_bag());
      }
    }
    return out;
  });
}

template <class K>
Morphism<K> seely2(const Obj& x, const Obj& y, const Env& e) {
  Env env = e;
  return Morphism<K>(Obj::tensor(Obj::excl(x), Obj::excl(y)), Obj::excl(Obj::with(x, y)), e,
                     [env](PointId p) {
                       PointSpace& s = *env.space;
                       PointId l = s.parts(p)[0], r = s.parts(p)[1];
                       if (s.bag_size(l) + s.bag_size(r) > env.bound) return Row<K>{};
                       std::vector<PointId> elems;
                       for (PointId a : s.parts(l)) elems.push_back(s.tag(false, a));
                       for (PointId b : s.parts(r)) elems.push_back(s.tag(true, b));
                       return Row<K>{{s.bag(elems), Weight<K>::one()}};
                     });
}

template <class K>
Morphism<K> seely2_inv(const Obj& x, const Obj& y, const Env& e) {
  Space sp = e.space;
  return Morphism<K>(Obj::excl(Obj::with(x, y)), Obj::tensor(Obj::excl(x), Obj::excl(y)), e,
                     [sp](PointId m) {
                       std::vector<PointId> l, r;
                       for (PointId t : sp->parts(m)) {
                         (sp->kind(t) == PointSpace::Kind::Inl ? l : r).push_back(sp->parts(t)[0]);
                       }
                       return Row<K>{{sp->pair(sp->bag(l), sp->bag(r)), Weight<K>::one()}};
                     });
}

template <class K>
Morphism<K> seely0(const Env& e) {
  Space sp = e.space;
  return Morphism<K>(Obj::unit(), Obj::excl(Obj::top()), e,
                     [sp](PointId) { return Row<K>{{sp->empty_bag(), Weight<K>::one()}}; });
}

template <class K>
Morphism<K> mix0(const Env& e) {
  return identity<K>(Obj::unit(), e);
}

template <class K>
Morphism<K> mix2(const Obj& x, const Obj& y, const Env& e) {
  return identity<K>(Obj::tensor(x, y), e);
}

template <class K>
Morphism<K> mu0(const Env& e) {
  Env env = e;
  return Morphism<K>(Obj::unit(), Obj::excl(Obj::unit()), e, [env](PointId) {
    PointSpace& s = *env.space;
    Row<K> out;
    std::vector<PointId> elems;
    while (elems.size() <= env.bound) {
      out[s.bag(elems)] = Weight<K>::one();
      elems.push_back(s.unit());
    }
    return out;
  });
}

template <class K>
Morphism<K> mu2(const Obj& x, const Obj& y, const Env& e) {
  Space sp = e.space;
  return Morphism<K>(Obj::tensor(Obj::excl(x), Obj::excl(y)), Obj::excl(Obj::tensor(x, y)), e,
                     [sp](PointId p) {
                       PointSpace& s = *sp;
                       std::vector<PointId> l = s.parts(s.parts(p)[0]);
                       std::vector<PointId> r = s.parts(s.parts(p)[1]);
                       Row<K> out;
                       if (l.size() != r.size()) return out;
                       std::set<std::vector<PointId>> seen;
                       std::vector<PointId> cur;
                       std::vector<bool> used(r.size(), false);
                       std::function<void(std::size_t)> go = [&](std::size_t i) {
                         if (i == l.size()) {
                           std::vector<PointId> b = cur;
                           std::sort(b.begin(), b.end());
                           if (seen.insert(b).second) out[s.bag(b)] = Weight<K>::one();
                           return;
                         }
                         for (std::size_t j = 0; j < r.size(); ++j) {
                           if (used[j] || (j > 0 && r[j] == r[j - 1] && !used[j - 1])) continue;
                           used[j] = true;
                           cur.push_back(s.pair(l[i], r[j]));
                           go(i + 1);
                           cur.pop_back();
                           used[j] = false;
                         }
                       };
                       go(0);
                       return out;
                     });
}

template <class K>
Morphism<K> excl(const Morphism<K>& m) {
  Env env = m.env();
  return Morphism<K>(Obj::excl(m.src()), Obj::excl(m.tgt()), env, [m, env](PointId bag) {
    PointSpace& s = *env.space;
    std::vector<std::pair<PointId, std::size_t>> groups;
    for (PointId p : s.parts(bag)) {
      if (!groups.empty() && groups.back().first == p) ++groups.back().second;
      else groups.push_back({p, 1});
    }
    std::vector<std::vector<std::pair<PointId, K>>> cands;
    for (const auto& g : groups) cands.emplace_back(m.row(g.first).begin(), m.row(g.first).end());
    Row<K> out;
    std::vector<PointId> targets;
    // Choose, for every distinct source element, a multiset of its images.
    std::function<void(std::size_t, std::size_t, std::size_t, K, Scalar)> go =
        [&](std::size_t g, std::size_t c, std::size_t left, K w, Scalar inv) {
          if (g == groups.size()) {
            PointId p = s.bag(targets);
            Scalar coef = bag_factorials(s, p) * inv;
            accumulate(out, p, Weight<K>::mul(Weight<K>::of_count(coef), w));
            return;
          }
          if (left == 0) {
            go(g + 1, 0, g + 1 < groups.size() ? groups[g + 1].second : 0, w, inv);
            return;
          }
          if (c == cands[g].size()) return;
          std::size_t before = targets.size();
          for (std::size_t k = 0; k <= left; ++k) {
            if (k) targets.push_back(cands[g][c].first);
            go(g, c + 1, left - k, Weight<K>::mul(w, power(cands[g][c].second, k)),
               inv / Scalar::factorial(static_cast<unsigned>(k)));
          }
          targets.resize(before);
        };
    go(0, 0, groups.empty() ? 0 : groups[0].second, Weight<K>::one(), Scalar(1));
    return out;
  });
}

template <class K>
Morphism<K> derc(const Obj& x, const Env& e) {
  return compose(tensor(identity<K>(Obj::excl(x), e), der<K>(x, e)), contr<K>(x, e));
}

template <class K>
Morphism<K> coderc(const Obj& x, const Env& e) {
  return compose(cocontr<K>(x, e), tensor(identity<K>(Obj::excl(x), e), coder<K>(x, e)));
}

template <class K>
Morphism<K> promotion(const Morphism<K>& f, const std::vector<Obj>& args) {
  const Env& e = f.env();
  require_same(f.src(), promotion_source(args), "promotion");
  Morphism<K> p;
  if (args.empty()) {
    p = mu0<K>(e);
  } else {
    p = digg<K>(args[0], e);
    Obj src = Obj::excl(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) {
      p = compose(mu2<K>(src, Obj::excl(args[i]), e), tensor(p, digg<K>(args[i], e)));
      src = Obj::tensor(src, Obj::excl(args[i]));
    }
  }
  return compose(excl(f), p);
}

template <class K>
std::map<std::pair<std::vector<PointId>, PointId>, K> promotion_closed_form(
    const std::vector<PromEntry<K>>& f, std::size_t n, std::size_t bound, PointSpace& s) {
  std::map<std::pair<std::vector<PointId>, PointId>, K> out;
  std::vector<std::size_t> sizes(n, 0), mult(f.size(), 0);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t j, std::size_t total) {
    if (j == f.size()) {
      std::vector<PointId> bags(n, s.empty_bag());
      std::vector<PointId> targets;
      K w = Weight<K>::one();
      Scalar inv(1);
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (!mult[i]) continue;
        for (std::size_t c = 0; c < mult[i]; ++c) {
          targets.push_back(f[i].target);
          for (std::size_t k = 0; k < n; ++k) bags[k] = s.bag_union(bags[k], f[i].bags[k]);
        }
        w = Weight<K>::mul(w, power(f[i].weight, mult[i]));
        inv = inv / Scalar::factorial(static_cast<unsigned>(mult[i]));
      }
      PointId beta = s.bag(targets);
      K full = Weight<K>::mul(Weight<K>::of_count(bag_factorials(s, beta) * inv), w);
      auto key = std::make_pair(std::move(bags), beta);
      auto it = out.find(key);
      if (it == out.end()) {
        if (!Weight<K>::is_zero(full)) out.emplace(std::move(key), full);
      } else {
        it->second = Weight<K>::add(it->second, full);
      }
      return;
    }
    for (std::size_t c = 0;; ++c) {
      bool ok = total + c <= bound;
      for (std::size_t k = 0; ok && k < n; ++k) ok = sizes[k] + c * s.bag_size(f[j].bags[k]) <= bound;
      if (!ok) break;
      mult[j] = c;
      for (std::size_t k = 0; k < n; ++k) sizes[k] += c * s.bag_size(f[j].bags[k]);
      go(j + 1, total + c);
      for (std::size_t k = 0; k < n; ++k) sizes[k] -= c * s.bag_size(f[j].bags[k]);
    }
    mult[j] = 0;
  };
  go(0, 0);
  for (auto it = out.begin(); it != out.end();) {
    if (Weight<K>::is_zero(it->second)) it = out.erase(it);
    else ++it;
  }
  return out;
}

template <class K>
std::vector<PromEntry<K>> prom_entries(const Morphism<K>& f, std::size_t n, std::size_t d) {
  std::vector<PromEntry<K>> out;
  PointSpace& s = f.space();
  for (PointId a : enumerate_web(f.src(), d, s)) {
    std::vector<PointId> bags = unpack_args(a, n, s);
    for (const auto& [b, w] : f.row(a)) out.push_back({bags, b, w});
  }
  return out;
}

template <class K>
Morphism<K> promotion_closed(const Morphism<K>& f, const std::vector<Obj>& args) {
  require_same(f.src(), promotion_source(args), "promotion");
  const Env& e = f.env();
  std::size_t n = args.size();
  auto cf = promotion_closed_form(prom_entries(f, n, e.bound), n, e.bound, *e.space);
  std::vector<Entry<K>> es;
  for (const auto& [key, w] : cf) es.push_back({pack_args(key.first, *e.space), key.second, w});
  return from_entries(f.src(), Obj::excl(f.tgt()), e, es);
}

#define DILL_INSTANTIATE(K)                                                                     \
  template std::vector<Entry<K>> entries(const Morphism<K>&, std::size_t);                      \
  template std::optional<Mismatch<K>> first_difference(const Morphism<K>&, const Morphism<K>&,  \
                                                       std::size_t);                            \
  template std::string dump_json(const Morphism<K>&, std::size_t);                              \
  template Morphism<K> identity(const Obj&, const Env&);                                        \
  template Morphism<K> zero_morphism(const Obj&, const Obj&, const Env&);                       \
  template Morphism<K> compose(const Morphism<K>&, const Morphism<K>&);                         \
  template Morphism<K> tensor(const Morphism<K>&, const Morphism<K>&);                          \
  template Morphism<K> add(const Morphism<K>&, const Morphism<K>&);                             \
  template Morphism<K> scale(const K&, const Morphism<K>&);                                     \
  template Morphism<K> transpose(const Morphism<K>&);                                           \
  template Morphism<K> point_map(const Obj&, const Obj&, const Env&,                            \
                                 std::function<PointId(PointId)>);                              \
  template Morphism<K> from_entries(const Obj&, const Obj&, const Env&,                         \
                                    const std::vector<Entry<K>>&);                              \
  template Morphism<K> assoc(const Obj&, const Obj&, const Obj&, const Env&);                   \
  template Morphism<K> assoc_inv(const Obj&, const Obj&, const Obj&, const Env&);               \
  template Morphism<K> swap(const Obj&, const Obj&, const Env&);                                \
  template Morphism<K> sigma23(const Obj&, const Obj&, const Obj&, const Env&);                 \
  template Morphism<K> lunit(const Obj&, const Env&);                                           \
  template Morphism<K> runit(const Obj&, const Env&);                                           \
  template Morphism<K> der(const Obj&, const Env&);                                             \
  template Morphism<K> coder(const Obj&, const Env&);                                           \
  template Morphism<K> weak(const Obj&, const Env&);                                            \
  template Morphism<K> coweak(const Obj&, const Env&);                                          \
  template Morphism<K> contr(const Obj&, const Env&);                                           \
  template Morphism<K> cocontr(const Obj&, const Env&);                                         \
  template Morphism<K> digg(const Obj&, const Env&);                                            \
  template Morphism<K> seely2(const Obj&, const Obj&, const Env&);                              \
  template Morphism<K> seely2_inv(const Obj&, const Obj&, const Env&);                          \
  template Morphism<K> seely0(const Env&);                                                      \
  template Morphism<K> mix0(const Env&);                                                        \
  template Morphism<K> mix2(const Obj&, const Obj&, const Env&);                                \
  template Morphism<K> mu0(const Env&);                                                         \
  template Morphism<K> mu2(const Obj&, const Obj&, const Env&);                                 \
  template Morphism<K> excl(const Morphism<K>&);                                                \
  template Morphism<K> derc(const Obj&, const Env&);                                            \
  template Morphism<K> coderc(const Obj&, const Env&);                                          \
  template Morphism<K> promotion(const Morphism<K>&, const std::vector<Obj>&);                  \
  template std::map<std::pair<std::vector<PointId>, PointId>, K> promotion_closed_form(         \
      const std::vector<PromEntry<K>>&, std::size_t, std::size_t, PointSpace&);                 \
  template std::vector<PromEntry<K>> prom_entries(const Morphism<K>&, std::size_t, std::size_t); \
  template Morphism<K> promotion_closed(const Morphism<K>&, const std::vector<Obj>&);

DILL_INSTANTIATE(bool)
DILL_INSTANTIATE(Scalar)

#undef DILL_INSTANTIATE

}  // namespace dill
