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

#include "dill/laws.hpp"

#include <random>

#include "dill/rel.hpp"
#include "dill/wrel.hpp"

namespace dill {

namespace {

// Intermediate multisets of most laws below are sums of at most two indices.
std::size_t law_bound(std::size_t d) { return 2 * d; }
// Digging: every intermediate multiset is an element of the compared column.
std::size_t tight_bound(std::size_t d) { return d; }

LawResult fail(const std::string& name, const std::string& why) { return {name, false, why}; }

// (A (x) B) (x) (C (x) D) -> (A (x) C) (x) (B (x) D)
template <class K>
Morphism<K> middle_swap(const Obj& a, const Obj& b, const Obj& c, const Obj& d, const Env& e) {
  Space sp = e.space;
  return point_map<K>(Obj::tensor(Obj::tensor(a, b), Obj::tensor(c, d)),
                      Obj::tensor(Obj::tensor(a, c), Obj::tensor(b, d)), e, [sp](PointId p) {
                        PointId l = sp->parts(p)[0], r = sp->parts(p)[1];
                        return sp->pair(sp->pair(sp->parts(l)[0], sp->parts(r)[0]),
                                        sp->pair(sp->parts(l)[1], sp->parts(r)[1]));
                      });
}

// 1 (x) 1 -> 1 and back.
template <class K>
Morphism<K> unit_merge(const Env& e) {
  Space sp = e.space;
  return point_map<K>(Obj::tensor(Obj::unit(), Obj::unit()), Obj::unit(), e,
                      [sp](PointId) { return sp->unit(); });
}

template <class K>
Morphism<K> unit_split(const Env& e) {
  Space sp = e.space;
  return point_map<K>(Obj::unit(), Obj::tensor(Obj::unit(), Obj::unit()), e,
                      [sp](PointId) { return sp->pair(sp->unit(), sp->unit()); });
}

// Keeps the points satisfying keep.
template <class K>
Morphism<K> projection(const Obj& x, const Env& e, std::function<bool(PointId)> keep) {
  return Morphism<K>(x, x, e, [keep](PointId p) {
    return keep(p) ? Row<K>{{p, Weight<K>::one()}} : Row<K>{};
  });
}

template <class K>
Morphism<K> id(const Obj& x, const Env& e) {
  return identity<K>(x, e);
}

template <class K>
std::vector<LawResult> run_all(const std::vector<std::pair<std::string, LawSides<K>>>& laws,
                               std::size_t d, std::size_t (*bound)(std::size_t) = law_bound) {
  Space s = std::make_shared<PointSpace>();
  std::vector<LawResult> out;
  for (const auto& [name, sides] : laws) out.push_back(check_law<K>(name, sides, d, s, bound));
  return out;
}

using Rng = std::mt19937_64;

Scalar small_scalar(Rng& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  return Scalar(dist(rng));
}

// A random sparse matrix; about one entry in `density` is nonzero.
WMorphism random_matrix(const Obj& x, const Obj& y, const Env& e, Rng& rng,
                        const std::function<bool(PointId)>& row_ok, std::size_t bound,
                        int density = 2) {
  std::vector<Entry<Scalar>> es;
  std::uniform_int_distribution<int> pick(0, density - 1);
  for (PointId a : enumerate_web(x, bound, *e.space)) {
    if (!row_ok(a)) continue;
    for (PointId b : enumerate_web(y, bound, *e.space)) {
      if (pick(rng)) continue;
      Scalar w = small_scalar(rng);
      if (!w.is_zero()) es.push_back({a, b, w});
    }
  }
  return from_entries(x, y, e, es);
}

std::vector<LawResult> zero_case(const std::string& name, const std::optional<Mismatch<Scalar>>& m,
                                 const PointSpace& s) {
  if (m) return {fail(name, describe(*m, s))};
  return {{name, true, ""}};
}

}  // namespace

template <class K>
LawResult check_law(const std::string& name, const LawSides<K>& sides, std::size_t d,
                    const Space& s, std::size_t (*bound)(std::size_t)) {
  Env low{s, bound(d)}, high{s, bound(d + 2)};
  try {
    auto [l1, r1] = sides(low);
    if (auto m = first_difference(l1, r1, d)) return fail(name, describe(*m, *s));
    auto [l2, r2] = sides(high);
    if (auto m = first_difference(l2, l1, d)) return fail(name, "left side unstable: " + describe(*m, *s));
    if (auto m = first_difference(r2, r1, d)) return fail(name, "right side unstable: " + describe(*m, *s));
  } catch (const Error& e) {
    return fail(name, e.what());
  }
  return {name, true, ""};
}

Obj web_object(const std::string& name, std::size_t n) {
  static const char* names[] = {"a", "b", "c", "e", "f", "g"};
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n && i < 6; ++i) pts.push_back(names[i]);
  for (std::size_t i = 6; i < n; ++i) pts.push_back("a" + std::to_string(i));
  return Obj::atom(name, pts);
}

template <class K>
std::vector<LawResult> bialgebra_laws(const Obj& x, std::size_t d) {
  Obj bx = Obj::excl(x);
  std::vector<std::pair<std::string, LawSides<K>>> laws = {
      {"comonoid-left-unit",
       [x, bx](const Env& e) {
         return std::make_pair(compose(tensor(weak<K>(x, e), id<K>(bx, e)), contr<K>(x, e)),
                               lunit<K>(bx, e));
       }},
      {"comonoid-right-unit",
       [x, bx](const Env& e) {
         return std::make_pair(compose(tensor(id<K>(bx, e), weak<K>(x, e)), contr<K>(x, e)),
                               runit<K>(bx, e));
       }},
      {"comonoid-assoc",
       [x, bx](const Env& e) {
         auto l = compose(tensor(contr<K>(x, e), id<K>(bx, e)), contr<K>(x, e));
         auto r = compose(assoc_inv<K>(bx, bx, bx, e),
                          compose(tensor(id<K>(bx, e), contr<K>(x, e)), contr<K>(x, e)));
         return std::make_pair(l, r);
       }},
      {"comonoid-comm",
       [x, bx](const Env& e) {
         return std::make_pair(compose(swap<K>(bx, bx, e), contr<K>(x, e)), contr<K>(x, e));
       }},
      {"monoid-left-unit",
       [x, bx](const Env& e) {
         return std::make_pair(
             compose(cocontr<K>(x, e), compose(tensor(coweak<K>(x, e), id<K>(bx, e)), lunit<K>(bx, e))),
             id<K>(bx, e));
       }},
      {"monoid-right-unit",
       [x, bx](const Env& e) {
         return std::make_pair(
             compose(cocontr<K>(x, e), compose(tensor(id<K>(bx, e), coweak<K>(x, e)), runit<K>(bx, e))),
             id<K>(bx, e));
       }},
      {"monoid-assoc",
       [x, bx](const Env& e) {
         auto l = compose(cocontr<K>(x, e), tensor(cocontr<K>(x, e), id<K>(bx, e)));
         auto r = compose(cocontr<K>(x, e),
                          compose(tensor(id<K>(bx, e), cocontr<K>(x, e)), assoc<K>(bx, bx, bx, e)));
         return std::make_pair(l, r);
       }},
      {"monoid-comm",
       [x, bx](const Env& e) {
         return std::make_pair(compose(cocontr<K>(x, e), swap<K>(bx, bx, e)), cocontr<K>(x, e));
       }},
      {"bialgebra-square",
       [x, bx](const Env& e) {
         auto l = compose(contr<K>(x, e), cocontr<K>(x, e));
         auto r = compose(tensor(cocontr<K>(x, e), cocontr<K>(x, e)),
                          compose(middle_swap<K>(bx, bx, bx, bx, e),
                                  tensor(contr<K>(x, e), contr<K>(x, e))));
         return std::make_pair(l, r);
       }},
      {"weak-cocontr",
       [x](const Env& e) {
         return std::make_pair(compose(weak<K>(x, e), cocontr<K>(x, e)),
                               compose(unit_merge<K>(e), tensor(weak<K>(x, e), weak<K>(x, e))));
       }},
      {"contr-coweak",
       [x](const Env& e) {
         return std::make_pair(compose(contr<K>(x, e), coweak<K>(x, e)),
                               compose(tensor(coweak<K>(x, e), coweak<K>(x, e)), unit_split<K>(e)));
       }},
      {"weak-coweak",
       [x](const Env& e) {
         return std::make_pair(compose(weak<K>(x, e), coweak<K>(x, e)), id<K>(Obj::unit(), e));
       }},
  };
  return run_all<K>(laws, d);
}

template <class K>
std::vector<LawResult> comonad_laws(const Obj& x, std::size_t d) {
  Obj bx = Obj::excl(x);
  std::vector<std::pair<std::string, LawSides<K>>> laws = {
      {"der-digg",
       [x, bx](const Env& e) {
         return std::make_pair(compose(der<K>(bx, e), digg<K>(x, e)), id<K>(bx, e));
       }},
      {"excl-der-digg",
       [x, bx](const Env& e) {
         return std::make_pair(compose(excl(der<K>(x, e)), digg<K>(x, e)), id<K>(bx, e));
       }},
      // The right side goes through the sum of the elements of the column,
      // so only columns where that sum is within d are compared.
      {"digg-coassoc",
       [x, bx, d](const Env& e) {
         Space sp = e.space;
         auto keep = projection<K>(Obj::excl(Obj::excl(bx)), e, [sp, d](PointId q) {
           std::size_t total = 0;
           for (PointId m : sp->parts(q)) total += sp->bag_size(m);
           return total <= d;
         });
         return std::make_pair(compose(keep, compose(excl(digg<K>(x, e)), digg<K>(x, e))),
                               compose(keep, compose(digg<K>(bx, e), digg<K>(x, e))));
       }},
      {"excl-identity",
       [x, bx](const Env& e) { return std::make_pair(excl(id<K>(x, e)), id<K>(bx, e)); }},
  };
  return run_all<K>(laws, d, tight_bound);
}

template <class K>
std::vector<LawResult> seely_laws(const Obj& x, const Obj& y, std::size_t d) {
  Obj bx = Obj::excl(x), by = Obj::excl(y), xy = Obj::with(x, y), bxy = Obj::excl(xy);
  std::vector<std::pair<std::string, LawSides<K>>> laws = {
      {"seely-inverse-left",
       [=](const Env& e) {
         return std::make_pair(compose(seely2_inv<K>(x, y, e), seely2<K>(x, y, e)),
                               id<K>(Obj::tensor(bx, by), e));
       }},
      {"seely-inverse-right",
       [=](const Env& e) {
         return std::make_pair(compose(seely2<K>(x, y, e), seely2_inv<K>(x, y, e)), id<K>(bxy, e));
       }},
      {"seely-contr",
       [=](const Env& e) {
         auto l = compose(contr<K>(xy, e), seely2<K>(x, y, e));
         auto r = compose(tensor(seely2<K>(x, y, e), seely2<K>(x, y, e)),
                          compose(middle_swap<K>(bx, bx, by, by, e),
                                  tensor(contr<K>(x, e), contr<K>(y, e))));
         return std::make_pair(l, r);
       }},
      {"seely-weak",
       [=](const Env& e) {
         return std::make_pair(compose(weak<K>(xy, e), seely2<K>(x, y, e)),
                               compose(unit_merge<K>(e), tensor(weak<K>(x, e), weak<K>(y, e))));
       }},
      {"seely-digg",
       [=](const Env& e) {
         auto l = compose(digg<K>(xy, e), seely2<K>(x, y, e));
         auto r = compose(excl(seely2<K>(x, y, e)),
                          compose(mu2<K>(bx, by, e), tensor(digg<K>(x, e), digg<K>(y, e))));
         return std::make_pair(l, r);
       }},
  };
  return run_all<K>(laws, d);
}

template <class K>
std::vector<LawResult> leibniz_laws(const Obj& x, std::size_t d) {
  Obj bx = Obj::excl(x);
  std::vector<std::pair<std::string, LawSides<K>>> laws = {
      {"leibniz",
       [=](const Env& e) {
         auto l = compose(contr<K>(x, e), coderc<K>(x, e));
         auto split = tensor(contr<K>(x, e), id<K>(x, e));
         auto right = compose(tensor(id<K>(bx, e), coderc<K>(x, e)),
                              compose(assoc<K>(bx, bx, x, e), split));
         auto left = compose(tensor(coderc<K>(x, e), id<K>(bx, e)),
                             compose(sigma23<K>(bx, bx, x, e), split));
         return std::make_pair(l, add(right, left));
       }},
      {"leibniz-weak",
       [=](const Env& e) {
         return std::make_pair(compose(weak<K>(x, e), coderc<K>(x, e)),
                               zero_morphism<K>(Obj::tensor(bx, x), Obj::unit(), e));
       }},
  };
  return run_all<K>(laws, d);
}

template <class K>
std::vector<LawResult> schwarz_laws(const Obj& x, std::size_t d) {
  Obj bx = Obj::excl(x);
  std::vector<std::pair<std::string, LawSides<K>>> laws = {
      {"schwarz",
       [=](const Env& e) {
         auto dd = compose(coderc<K>(x, e), tensor(coderc<K>(x, e), id<K>(x, e)));
         return std::make_pair(compose(dd, sigma23<K>(bx, x, x, e)), dd);
       }},
      {"schwarz-derivative",
       [=](const Env& e) {
         auto dd = compose(tensor(derc<K>(x, e), id<K>(x, e)), derc<K>(x, e));
         return std::make_pair(compose(sigma23<K>(bx, x, x, e), dd), dd);
       }},
  };
  return run_all<K>(laws, d);
}

std::vector<LawResult> taylor_laws(const Obj& x, std::size_t d, std::uint64_t seed,
                                   std::size_t samples) {
  using K = Scalar;
  Obj bx = Obj::excl(x);
  std::vector<std::pair<std::string, LawSides<K>>> laws;
  for (std::size_t n = 1; n <= 3; ++n)
    laws.push_back({"taylor-lemma-" + std::to_string(n), [=](const Env& e) {
                      auto l = compose(taylor_T(x, n, e), coderc<K>(x, e));
                      auto r = compose(coderc<K>(x, e),
                                       tensor(taylor_T(x, n - 1, e), id<K>(x, e)));
                      return std::make_pair(l, r);
                    }});
  for (std::size_t n = 0; n <= 3; ++n)
    laws.push_back({"taylor-projection-" + std::to_string(n), [=](const Env& e) {
                      Space sp = e.space;
                      auto proj = Morphism<K>(bx, bx, e, [sp, n](PointId m) {
                        if (sp->bag_size(m) > n) return Row<K>{};
                        return Row<K>{{m, Scalar(1)}};
                      });
                      return std::make_pair(taylor_T(x, n, e), proj);
                    }});
  std::vector<LawResult> out = run_all<K>(laws, d);
  // f o T^n = f for f of degree at most 2 and n >= 2.
  Rng rng(seed);
  Space s = std::make_shared<PointSpace>();
  Obj y = web_object("y", 2);
  for (std::size_t i = 0; i < samples; ++i) {
    Env e{s, law_bound(d)};
    WMorphism f = random_matrix(bx, y, e, rng, [&](PointId m) { return s->bag_size(m) <= 2; },
                                std::min<std::size_t>(2, d));
    std::string name = "taylor-property-" + std::to_string(i);
    std::size_t deg = 0;
    try {
      deg = poly_degree(f, x, std::min<std::size_t>(2, e.bound));
    } catch (const Error& err) {
      out.push_back(fail(name, err.what()));
      continue;
    }
    auto r = first_difference(compose(f, taylor_T(x, deg, e)), f, d);
    out.push_back(r ? fail(name, describe(*r, *s)) : LawResult{name, true, ""});
  }
  return out;
}

std::vector<LawResult> antiderivative_laws(const Obj& x, std::size_t d) {
  using K = Scalar;
  Obj bx = Obj::excl(x);
  std::vector<std::pair<std::string, LawSides<K>>> laws = {
      {"J-diagonal",
       [=](const Env& e) {
         Space sp = e.space;
         auto diag = Morphism<K>(bx, bx, e, [sp](PointId m) {
           return Row<K>{{m, Scalar(static_cast<long>(sp->bag_size(m) + 1))}};
         });
         return std::make_pair(J(x, e), diag);
       }},
      {"J-I", [=](const Env& e) { return std::make_pair(compose(J(x, e), I(x, e)), id<K>(bx, e)); }},
      {"I-J", [=](const Env& e) { return std::make_pair(compose(I(x, e), J(x, e)), id<K>(bx, e)); }},
      {"I-psi",
       [=](const Env& e) {
         auto ii = tensor(I(x, e), id<K>(x, e));
         return std::make_pair(compose(ii, psi(x, e)), compose(psi(x, e), ii));
       }},
  };
  return run_all<K>(laws, d);
}

std::vector<LawResult> poincare_laws(const Obj& x, std::size_t d, std::uint64_t seed,
                                     std::size_t samples) {
  Rng rng(seed);
  Space s = std::make_shared<PointSpace>();
  Env e{s, law_bound(d)};
  Obj bx = Obj::excl(x);
  Obj y = web_object("y", 2);
  std::vector<LawResult> out;
  for (std::size_t i = 0; i < samples; ++i) {
    // f = h o coderc has a symmetric derivative.
    WMorphism h = random_matrix(bx, y, e, rng, [&](PointId m) { return s->bag_size(m) >= 1; }, d, 3);
    std::vector<Entry<Scalar>> fe = entries(compose(h, coderc<Scalar>(x, e)), d);
    WMorphism f = from_entries(Obj::tensor(bx, x), y, e, fe);
    std::string name = "poincare-" + std::to_string(i);
    try {
      WMorphism g = poincare_antiderivative(f, x);
      auto m = first_difference(compose(g, coderc<Scalar>(x, e)), f, d);
      out.push_back(m ? fail(name, describe(*m, *s)) : LawResult{name, true, ""});
    } catch (const Error& err) {
      out.push_back(fail(name, err.what()));
    }
  }
  return out;
}

std::vector<LawResult> ftc_laws(const Obj& x, std::size_t d) {
  Space s = std::make_shared<PointSpace>();
  auto m = fundamental_theorem_check(x, Env{s, law_bound(d) + 1}, d);
  auto r = zero_case("fundamental-theorem", m, *s);
  auto m2 = fundamental_theorem_check(x, Env{s, law_bound(d + 2) + 1}, d);
  auto r2 = zero_case("fundamental-theorem-stable", m2, *s);
  r.insert(r.end(), r2.begin(), r2.end());
  return r;
}

std::vector<LawResult> quasifunctor_laws(const Obj& x, const Obj& y, const Obj& z,
                                         std::size_t d, std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  Space s = std::make_shared<PointSpace>();
  Env e{s, law_bound(d)};
  std::vector<LawResult> out;
  auto any = [](PointId) { return true; };
  for (std::size_t i = 0; i < samples; ++i) {
    WMorphism f = random_matrix(x, y, e, rng, any, 0);
    WMorphism g = random_matrix(y, z, e, rng, any, 0);
    WMorphism gf = compose(g, f);
    for (std::size_t n = 0; n <= 3 && n <= d; ++n)
      for (std::size_t p = 0; p <= 3 && p <= d; ++p) {
        std::string name = "quasifunctor-" + std::to_string(i) + "-" + std::to_string(n) + "-" +
                           std::to_string(p);
        WMorphism l = compose(quasifunctor_pow(g, p), quasifunctor_pow(f, n));
        WMorphism r = n == p
                          ? scale(Scalar::factorial(static_cast<unsigned>(n)), quasifunctor_pow(gf, n))
                          : zero_morphism<Scalar>(Obj::excl(x), Obj::excl(z), e);
        auto m = first_difference(l, r, d);
        out.push_back(m ? fail(name, describe(*m, *s)) : LawResult{name, true, ""});
      }
  }
  return out;
}

std::vector<LawResult> functor_laws(const Obj& x, const Obj& y, std::size_t d,
                                    std::uint64_t seed, std::size_t samples) {
  Rng rng(seed);
  Space s = std::make_shared<PointSpace>();
  Env e{s, d};
  std::vector<LawResult> out;
  auto any = [](PointId) { return true; };
  for (std::size_t i = 0; i < samples; ++i) {
    WMorphism m = random_matrix(x, y, e, rng, any, 0);
    WVector v;
    for (PointId a : enumerate_web(x, 0, *s)) accumulate(v, a, small_scalar(rng));
    WVector l = w_apply(w_excl(m), w_prom_vector(v, e));
    WVector r = w_prom_vector(w_apply(m, v), e);
    std::string name = "fun-excl-" + std::to_string(i);
    if (l == r) {
      out.push_back({name, true, ""});
    } else {
      std::string why;
      for (const auto& [b, w] : r)
        if (!l.count(b) || !(l.at(b) == w)) {
          why = "at " + s->print(b) + ": expected " + w.str();
          break;
        }
      if (why.empty()) why = "extra entries on the left side";
      out.push_back(fail(name, why));
    }
  }
  return out;
}

std::vector<LawResult> rel_antiderivative_laws(const Obj& x, std::size_t d, std::uint64_t seed,
                                               std::size_t samples) {
  using K = bool;
  Obj bx = Obj::excl(x);
  std::vector<std::pair<std::string, LawSides<K>>> laws = {
      {"rel-dbar-d",
       [=](const Env& e) {
         Space sp = e.space;
         auto diag = Morphism<K>(bx, bx, e, [sp](PointId m) {
           if (sp->bag_size(m) == 0) return Row<K>{};
           return Row<K>{{m, true}};
         });
         return std::make_pair(compose(coderc<K>(x, e), derc<K>(x, e)), diag);
       }},
      {"rel-J-identity",
       [=](const Env& e) {
         return std::make_pair(add(id<K>(bx, e), compose(coderc<K>(x, e), derc<K>(x, e))),
                               id<K>(bx, e));
       }},
  };
  std::vector<LawResult> out = run_all<K>(laws, d);
  Rng rng(seed);
  Space s = std::make_shared<PointSpace>();
  Env e{s, law_bound(d)};
  Obj y = web_object("y", 2);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Entry<K>> ge;
    for (PointId m : enumerate_web(bx, d, *s)) {
      if (s->bag_size(m) == 0) continue;
      for (PointId b : enumerate_web(y, 0, *s))
        if (coin(rng)) ge.push_back({m, b, true});
    }
    RelMorphism h = from_entries(bx, y, e, ge);
    // f = h o coderc is symmetric by construction.
    RelMorphism f = from_entries(Obj::tensor(bx, x), y, e, entries(compose(h, coderc<K>(x, e)), d));
    std::string name = "rel-antiderivative-" + std::to_string(i);
    try {
      RelMorphism g = antiderivative_rel(f, x);
      auto m = first_difference(compose(g, coderc<K>(x, e)), f, d);
      out.push_back(m ? fail(name, describe(*m, *s)) : LawResult{name, true, ""});
    } catch (const Error& err) {
      out.push_back(fail(name, err.what()));
    }
  }
  return out;
}

const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names = {
      "bialgebra", "comonad", "seely", "leibniz", "schwarz", "taylor",
      "antiderivative", "poincare", "ftc", "quasifunctor", "functor", "rel-antiderivative"};
  return names;
}

namespace {

template <class K>
std::optional<std::vector<LawResult>> generic_suite(const LawConfig& c) {
  Obj x = web_object("x", c.web);
  if (c.suite == "bialgebra") return bialgebra_laws<K>(x, c.degree);
  if (c.suite == "comonad") return comonad_laws<K>(x, c.degree);
  if (c.suite == "seely") return seely_laws<K>(x, web_object("y", c.web), c.degree);
  if (c.suite == "leibniz") return leibniz_laws<K>(x, c.degree);
  if (c.suite == "schwarz") return schwarz_laws<K>(x, c.degree);
  return std::nullopt;
}

std::optional<std::vector<LawResult>> wrel_suite(const LawConfig& c) {
  if (auto r = generic_suite<Scalar>(c)) return r;
  Obj x = web_object("x", c.web);
  if (c.suite == "taylor") return taylor_laws(x, c.degree, c.seed, c.samples);
  if (c.suite == "antiderivative") return antiderivative_laws(x, c.degree);
  if (c.suite == "poincare") return poincare_laws(x, c.degree, c.seed, c.samples);
  if (c.suite == "ftc") return ftc_laws(x, c.degree);
  if (c.suite == "quasifunctor")
    return quasifunctor_laws(x, web_object("y", c.web), web_object("z", c.web), c.degree, c.seed,
                             c.samples);
  if (c.suite == "functor")
    return functor_laws(x, web_object("y", c.web), c.degree, c.seed, c.samples);
  return std::nullopt;
}

std::optional<std::vector<LawResult>> rel_suite(const LawConfig& c) {
  if (auto r = generic_suite<bool>(c)) return r;
  if (c.suite == "rel-antiderivative")
    return rel_antiderivative_laws(web_object("x", c.web), c.degree, c.seed, c.samples);
  return std::nullopt;
}

void prefix(std::vector<LawResult>& rs, const std::string& p, std::vector<LawResult>& out) {
  for (auto& r : rs) {
    r.name = p + "/" + r.name;
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<LawResult> run_law_suite(const LawConfig& c) {
  if (c.model != "rel" && c.model != "wrel" && c.model != "both")
    throw UsageError("unknown model " + c.model);
  bool known = false;
  for (const auto& n : law_suite_names()) known = known || n == c.suite;
  if (!known) throw UsageError("unknown law suite " + c.suite);
  std::vector<LawResult> out;
  if (c.model != "wrel")
    if (auto r = rel_suite(c)) prefix(*r, "rel", out);
  if (c.model != "rel")
    if (auto r = wrel_suite(c)) prefix(*r, "wrel", out);
  if (out.empty()) throw UsageError("suite " + c.suite + " is not available in model " + c.model);
  return out;
}

#define DILL_INSTANTIATE(K)                                                                     \
  template LawResult check_law(const std::string&, const LawSides<K>&, std::size_t,             \
                               const Space&, std::size_t (*)(std::size_t));                     \
  template std::vector<LawResult> bialgebra_laws<K>(const Obj&, std::size_t);                   \
  template std::vector<LawResult> comonad_laws<K>(const Obj&, std::size_t);                     \
  template std::vector<LawResult> seely_laws<K>(const Obj&, const Obj&, std::size_t);           \
  template std::vector<LawResult> leibniz_laws<K>(const Obj&, std::size_t);                     \
  template std::vector<LawResult> schwarz_laws<K>(const Obj&, std::size_t);

DILL_INSTANTIATE(bool)
DILL_INSTANTIATE(Scalar)

#undef DILL_INSTANTIATE

}  // namespace dill
