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

#include "dill/rel.hpp"

#include <algorithm>
#include <unordered_map>

namespace dill {

RelMorphism rel_generator(const std::string& kind, const std::vector<Obj>& objs, const Env& e) {
  auto need = [&](std::size_t n) {
    if (objs.size() != n)
      throw UsageError("generator " + kind + " takes " + std::to_string(n) + " objects");
  };
  if (kind == "seely0" || kind == "mix0") {
    need(0);
    return kind == "seely0" ? seely0<bool>(e) : mix0<bool>(e);
  }
  if (kind == "seely2" || kind == "mix2") {
    need(2);
    return kind == "seely2" ? seely2<bool>(objs[0], objs[1], e) : mix2<bool>(objs[0], objs[1], e);
  }
  need(1);
  const Obj& x = objs[0];
  if (kind == "der") return der<bool>(x, e);
  if (kind == "coder") return coder<bool>(x, e);
  if (kind == "weak") return weak<bool>(x, e);
  if (kind == "coweak") return coweak<bool>(x, e);
  if (kind == "contr") return contr<bool>(x, e);
  if (kind == "cocontr") return cocontr<bool>(x, e);
  if (kind == "digg") return digg<bool>(x, e);
  throw UsageError("unknown generator " + kind);
}

RelMorphism rel_excl(const RelMorphism& r) { return excl(r); }

RelMorphism rel_promotion(const RelMorphism& f, const std::vector<Obj>& args) {
  return promotion_closed(f, args);
}

std::set<std::pair<PointId, PointId>> graph(const RelMorphism& r, std::size_t d) {
  std::set<std::pair<PointId, PointId>> out;
  for (const auto& e : entries(r, d)) out.insert({e.row, e.col});
  return out;
}

std::optional<RelWitness> rel_symmetry_witness(const RelMorphism& f, const Obj& x) {
  if (!(f.src() == Obj::tensor(Obj::excl(x), x)))
    throw WebMismatch("antiderivative: source is " + print_obj(f.src()));
  PointSpace& s = f.space();
  std::size_t d = f.env().bound;
  if (d == 0) return std::nullopt;
  auto web = enumerate_web(x, d, s);
  std::sort(web.begin(), web.end(), [&](PointId a, PointId b) { return s.compare(a, b) < 0; });
  auto bags = enumerate_web(Obj::excl(x), d - 1, s);
  std::sort(bags.begin(), bags.end(), [&](PointId a, PointId b) { return s.compare(a, b) < 0; });
  for (PointId m : bags)
    for (PointId a : web)
      for (PointId a2 : web) {
        PointId p = s.pair(s.bag_union(m, s.singleton(a)), a2);
        PointId q = s.pair(s.bag_union(m, s.singleton(a2)), a);
        for (const auto& [b, w] : f.row(p))
          if (!f.at(q, b)) return RelWitness{m, a, a2, b};
        for (const auto& [b, w] : f.row(q))
          if (!f.at(p, b)) return RelWitness{m, a2, a, b};
      }
  return std::nullopt;
}

RelMorphism antiderivative_rel(const RelMorphism& f, const Obj& x) {
  if (auto w = rel_symmetry_witness(f, x)) {
    PointSpace& s = f.space();
    throw SymmetryViolation("m=" + s.print(w->m) + " a=" + s.print(w->a) + " a'=" +
                            s.print(w->a2) + " b=" + s.print(w->b));
  }
  PointSpace& s = f.space();
  std::vector<Entry<bool>> es;
  for (PointId p : enumerate_web(f.src(), f.env().bound, s)) {
    PointId m = s.parts(p)[0], a = s.parts(p)[1];
    if (s.bag_size(m) + 1 > f.env().bound) continue;
    for (const auto& [b, w] : f.row(p)) es.push_back({s.bag_union(m, s.singleton(a)), b, true});
  }
  return from_entries(Obj::excl(x), f.tgt(), f.env(), es);
}

}  // namespace dill
