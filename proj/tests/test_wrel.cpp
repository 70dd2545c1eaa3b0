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


#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dill/laws.hpp"
#include "dill/rel.hpp"
#include "dill/wrel.hpp"
#include "model_util.hpp"

using namespace dill;
using namespace dill::testing;

namespace {

Obj web(std::vector<std::string> pts, const std::string& name = "x") {
  return Obj::atom(name, std::move(pts));
}

Scalar power(const Scalar& t, std::size_t k) {
  Scalar r(1);
  for (std::size_t i = 0; i < k; ++i) r = r * t;
  return r;
}

// (!M)_{m,p} as a permanent: the sum over all orderings of p of the
// products of M along the pairing, divided by the automorphisms of m.
Scalar excl_by_permanent(const WMorphism& m, PointId bm, PointId bp, PointSpace& s) {
  std::vector<PointId> xs = s.parts(bm), ys = s.parts(bp);
  if (xs.size() != ys.size()) return Scalar(0);
  std::sort(ys.begin(), ys.end());
  Scalar sum;
  do {
    Scalar prod(1);
    for (std::size_t i = 0; i < xs.size(); ++i) prod = prod * m.at(xs[i], ys[i]);
    sum += prod;
  } while (std::next_permutation(ys.begin(), ys.end()));
  // next_permutation over a multiset visits each distinct arrangement once;
  // rescale to all |p|! orderings.
  Scalar ordered = sum;
  for (PointId y : std::set<PointId>(ys.begin(), ys.end()))
    ordered = ordered * Scalar::factorial(static_cast<unsigned>(s.count(bp, y)));
  for (PointId x : std::set<PointId>(xs.begin(), xs.end()))
    ordered = ordered / Scalar::factorial(static_cast<unsigned>(s.count(bm, x)));
  return ordered;
}

WMorphism random_matrix(const Obj& x, const Obj& y, const Env& e, std::mt19937_64& rng,
                        std::size_t bound) {
  std::vector<Entry<Scalar>> es;
  std::uniform_int_distribution<int> w(-2, 3);
  for (PointId a : enumerate_web(x, bound, *e.space))
    for (PointId b : enumerate_web(y, bound, *e.space))
      if (int v = w(rng); v != 0 && rng() % 2) es.push_back({a, b, Scalar(v)});
  return from_entries(x, y, e, es);
}

}  // namespace

TEST_CASE("weighted generators") {
  Obj x = web({"a"});
  Env e = env(4);
  CHECK(entry(w_generator("cocontr", {x}, e), "([a], [a])", "[a, a]", 3) == Scalar(2));
  CHECK(entry(w_generator("cocontr", {x}, e), "([a], [a, a])", "[a, a, a]", 3) == Scalar(3));
  auto der = printed_entries(w_generator("der", {x}, e), 3);
  CHECK(der == std::map<std::pair<std::string, std::string>, Scalar>{{{"[a]", "a"}, Scalar(1)}});
  Obj xy = web({"a", "b"});
  for (const char* k : {"contr", "weak", "coweak", "coder", "digg"}) {
    WMorphism w = w_generator(k, {xy}, e);
    RelMorphism r = rel_generator(k, {xy}, Env{e.space, e.bound});
    CHECK(printed(w, 3) == printed(r, 3));
    for (const auto& [key, v] : printed_entries(w, 3)) CHECK(v == Scalar(1));
  }
}

TEST_CASE("cocontraction weights are binomials") {
  Obj x = web({"a", "b"});
  Env e = env(6);
  PointSpace& s = *e.space;
  WMorphism cc = w_generator("cocontr", {x}, e);
  for (PointId l : enumerate_web(Obj::excl(x), 3, s))
    for (PointId r : enumerate_web(Obj::excl(x), 3, s)) {
      PointId m = s.bag_union(l, r);
      Multiset<std::string> mm, ll;
      for (PointId p : s.parts(m)) mm.add(s.print(p));
      for (PointId p : s.parts(l)) ll.add(s.print(p));
      CHECK(cc.at(s.pair(l, r), m) == multiset_binomial(mm, ll));
    }
}

TEST_CASE("exponential of a matrix") {
  Obj x = web({"a"});
  Obj y = web({"b", "c"}, "y");
  Env e = env(3);
  PointSpace& s = *e.space;
  CHECK(same(w_excl(identity<Scalar>(x, e)), identity<Scalar>(Obj::excl(x), e), 3));
  WMorphism two = from_entries<Scalar>(x, y, e, {{s.atom("a"), s.atom("b"), Scalar(2)}});
  CHECK(entry(w_excl(two), "[a, a]", "[b, b]", 3) == Scalar(4));
  WMorphism fork = from_entries<Scalar>(x, y, e, {{s.atom("a"), s.atom("b"), Scalar(1)},
                                          {s.atom("a"), s.atom("c"), Scalar(1)}});
  CHECK(entry(w_excl(fork), "[a, a]", "[b, c]", 3) == Scalar(1));
  CHECK(entry(w_excl(fork), "[a, a]", "[b, b]", 3) == Scalar(1));
}

TEST_CASE("exponential agrees with the permanent") {
  std::mt19937_64 rng(2);
  Obj x = web({"a", "b"});
  Obj y = web({"c", "d", "f"}, "y");
  for (int i = 0; i < 10; ++i) {
    Env e = env(3);
    PointSpace& s = *e.space;
    WMorphism m = random_matrix(x, y, e, rng, 0);
    WMorphism em = w_excl(m);
    for (PointId bm : enumerate_web(Obj::excl(x), 3, s))
      for (PointId bp : enumerate_web(Obj::excl(y), 3, s))
        CHECK(em.at(bm, bp) == excl_by_permanent(m, bm, bp, s));
  }
}

TEST_CASE("exponential is functorial") {
  std::mt19937_64 rng(4);
  Obj x = web({"a", "b"});
  for (int i = 0; i < 6; ++i) {
    Env e = env(3);
    WMorphism f = random_matrix(x, x, e, rng, 0);
    WMorphism g = random_matrix(x, x, e, rng, 0);
    CHECK(same(w_excl(compose(g, f)), compose(w_excl(g), w_excl(f)), 3));
  }
}

TEST_CASE("promotion vectors") {
  Obj x = web({"a"});
  Env e = env(4);
  PointSpace& s = *e.space;
  WVector zero;
  WVector z = w_prom_vector(zero, e);
  CHECK(z == WVector{{s.empty_bag(), Scalar(1)}});
  for (Scalar t : {Scalar(2), Scalar(-1, 3), Scalar(5, 2)}) {
    WVector v = w_prom_vector(WVector{{s.atom("a"), t}}, e);
    PointId m = s.empty_bag();
    for (std::size_t k = 0; k <= 4; ++k) {
      CHECK(v.at(m) == power(t, k));
      m = s.bag_union(m, s.singleton(s.atom("a")));
    }
    std::vector<Entry<Scalar>> es;
    PointId b = s.empty_bag();
    Obj one = web({"*"}, "y");
    for (std::size_t k = 0; k <= 2; ++k) {
      es.push_back({b, s.atom("*"), Scalar(1)});
      b = s.bag_union(b, s.singleton(s.atom("a")));
    }
    WMorphism poly = from_entries(Obj::excl(x), one, e, es);
    CHECK(w_fun(poly, WVector{{s.atom("a"), t}}).at(s.atom("*")) == Scalar(1) + t + t * t);
  }
}

TEST_CASE("exponential acts on promotion vectors") {
  std::mt19937_64 rng(8);
  Obj x = web({"a", "b"});
  Obj y = web({"c", "d"}, "y");
  for (int i = 0; i < 10; ++i) {
    Env e = env(3);
    PointSpace& s = *e.space;
    WMorphism m = random_matrix(x, y, e, rng, 0);
    WVector v{{s.atom("a"), Scalar(static_cast<long>(rng() % 5) - 2)},
              {s.atom("b"), Scalar(1, 2)}};
    CHECK(w_apply(w_excl(m), w_prom_vector(v, e)) == w_prom_vector(w_apply(m, v), e));
  }
}

TEST_CASE("weighted promotion") {
  Obj x = web({"a", "b"});
  Obj y = web({"u"}, "y");
  Env e = env(3);
  PointSpace& s = *e.space;
  WMorphism pd = w_promotion(w_generator("der", {x}, e), {x});
  WVector v{{s.atom("a"), Scalar(3)}, {s.atom("b"), Scalar(-1, 2)}};
  WVector xv = w_prom_vector(v, e);
  CHECK(w_apply(pd, xv) == xv);
  CHECK(same(pd, identity<Scalar>(Obj::excl(x), e), 3));
  WMorphism constant = from_entries<Scalar>(Obj::unit(), y, e, {{s.unit(), s.atom("u"), Scalar(2)}});
  WMorphism pc = w_promotion(constant, {});
  PointId b = s.empty_bag();
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(pc.at(s.unit(), b) == power(Scalar(2), k));
    b = s.bag_union(b, s.singleton(s.atom("u")));
  }
}

TEST_CASE("closed form of weighted promotion") {
  std::mt19937_64 rng(13);
  Obj a = web({"a", "b"});
  Obj c = web({"p"}, "z");
  Obj y = web({"u", "v"}, "y");
  for (int i = 0; i < 6; ++i) {
    Env e = env(3);
    std::vector<Obj> args = i % 2 ? std::vector<Obj>{a} : std::vector<Obj>{a, c};
    Obj src = promotion_source(args);
    WMorphism f = random_matrix(src, y, e, rng, 2);
    CHECK(same(w_promotion(f, args), w_promotion_closed(f, args), 2));
  }
}

TEST_CASE("J, I and the Taylor projections") {
  Obj x = web({"a"});
  Env e = env(6);
  CHECK(entry(J(x, e), "[a, a]", "[a, a]", 3) == Scalar(3));
  CHECK(entry(J(x, e), "[a, a]", "[a]", 3) == Scalar(0));
  CHECK(entry(I(x, e), "[a]", "[a]", 3) == Scalar(1, 2));
  auto t2 = printed_entries(taylor_T(x, 2, e), 3);
  CHECK(t2 == std::map<std::pair<std::string, std::string>, Scalar>{
                  {{"[]", "[]"}, Scalar(1)}, {{"[a]", "[a]"}, Scalar(1)}, {{"[a, a]", "[a, a]"}, Scalar(1)}});
  CHECK_THROWS_AS(taylor_T(x, 2, e, Semiring::nat()), ModeViolation);
  CHECK_THROWS_AS(I(x, e, Semiring::boolean()), ModeViolation);
}

TEST_CASE("polynomial degree") {
  Obj x = web({"a"});
  Obj y = web({"u"}, "y");
  Env e = env(4);
  PointSpace& s = *e.space;
  CHECK(poly_degree(w_generator("der", {x}, e), x, 3) == 1);
  WMorphism k = from_entries<Scalar>(Obj::excl(x), y, e, {{s.empty_bag(), s.atom("u"), Scalar(5)}});
  CHECK(poly_degree(k, x, 3) == 0);
  WMorphism q = from_entries<Scalar>(Obj::excl(x), y, e,
                             {{s.bag({s.atom("a"), s.atom("a")}), s.atom("u"), Scalar(1)}});
  CHECK(poly_degree(q, x, 3) == 2);
  CHECK_THROWS_AS(poly_degree(q, x, 1), DegreeExceedsBound);
}

TEST_CASE("dereliction is a unit for polynomial composition") {
  std::mt19937_64 rng(6);
  Obj x = web({"a"});
  Obj y = web({"u", "v"}, "y");
  for (int i = 0; i < 5; ++i) {
    Env e = env(6);
    PointSpace& s = *e.space;
    std::vector<Entry<Scalar>> es;
    for (PointId m : enumerate_web(Obj::excl(x), 2, s))
      for (PointId b : enumerate_web(y, 2, s))
        if (rng() % 2) es.push_back({m, b, Scalar(static_cast<long>(rng() % 4) + 1)});
    WMorphism f = from_entries(Obj::excl(x), y, e, es);
    CHECK(same(poly_compose(w_generator("der", {y}, e), f, x, y), f, 3));
    CHECK(same(poly_compose(f, w_generator("der", {x}, e), x, x), f, 3));
  }
}

TEST_CASE("quasifunctor examples") {
  Obj x = web({"a"});
  Env e = env(6);
  WMorphism id = identity<Scalar>(x, e);
  CHECK(printed_entries(quasifunctor_pow(id, 0), 3) ==
        std::map<std::pair<std::string, std::string>, Scalar>{{{"[]", "[]"}, Scalar(1)}});
  CHECK(printed_entries(quasifunctor_pow(id, 1), 3) ==
        std::map<std::pair<std::string, std::string>, Scalar>{{{"[a]", "[a]"}, Scalar(1)}});
  WMorphism id2 = quasifunctor_pow(id, 2);
  CHECK(same(compose(id2, id2), scale(Scalar(2), id2), 3));
  CHECK(same(compose(quasifunctor_pow(id, 1), id2), zero_morphism<Scalar>(Obj::excl(x), Obj::excl(x), e), 3));
}

TEST_CASE("Poincare antiderivative examples") {
  Obj x = web({"a", "a2"});
  Obj y = web({"b"}, "y");
  Env e = env(6);
  PointSpace& s = *e.space;
  PointId a = s.atom("a"), a2 = s.atom("a2"), b = s.atom("b");
  Obj src = Obj::tensor(Obj::excl(x), x);
  WMorphism f1 = from_entries<Scalar>(src, y, e, {{s.pair(s.empty_bag(), a), b, Scalar(1)}});
  WMorphism g1 = poincare_antiderivative(f1, x);
  CHECK(printed_entries(g1, 3) ==
        std::map<std::pair<std::string, std::string>, Scalar>{{{"[a]", "b"}, Scalar(1)}});
  CHECK(same(compose(g1, coderc<Scalar>(x, e)), f1, 3));
  CHECK(printed_entries(poincare_antiderivative(zero_morphism<Scalar>(src, y, e), x), 3).empty());
  WMorphism f3 = from_entries<Scalar>(src, y, e, {{s.pair(s.singleton(a2), a), b, Scalar(1)},
                                          {s.pair(s.singleton(a), a2), b, Scalar(1)}});
  WMorphism g3 = poincare_antiderivative(f3, x);
  CHECK(printed_entries(g3, 3) ==
        std::map<std::pair<std::string, std::string>, Scalar>{{{"[a, a2]", "b"}, Scalar(1)}});
  CHECK(same(compose(g3, coderc<Scalar>(x, e)), f3, 3));
  WMorphism bad = from_entries<Scalar>(src, y, e, {{s.pair(s.singleton(a2), a), b, Scalar(1)}});
  CHECK_THROWS_AS(poincare_antiderivative(bad, x), SymmetryViolation);
}

TEST_CASE("fundamental theorem") {
  CHECK_FALSE(fundamental_theorem_check(web({"a"}), env(7), 3));
  CHECK_FALSE(fundamental_theorem_check(web({"a", "b"}), env(5), 2));
  Obj x = web({"a"});
  Env e = env(4);
  WMorphism lhs = compose(w_generator("coweak", {x}, e), w_generator("weak", {x}, e));
  CHECK(entry(lhs, "[]", "[]", 2) == Scalar(1));
  CHECK(entry(compose(derc<Scalar>(x, e), identity<Scalar>(Obj::excl(x), e)), "[]", "([], a)", 2) ==
        Scalar(0));
}

TEST_CASE("weighted law suites") {
  for (const char* suite : {"bialgebra", "comonad", "seely", "leibniz", "schwarz", "taylor",
                            "antiderivative", "poincare", "ftc", "quasifunctor", "functor"}) {
    LawConfig c;
    c.suite = suite;
    c.model = "wrel";
    c.web = 2;
    c.degree = 3;
    c.samples = 5;
    for (const auto& r : run_law_suite(c)) {
      INFO(r.name << " " << r.detail);
      CHECK(r.ok);
    }
  }
}
