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

#include <random>
#include <set>
#include <string>
#include <vector>

#include "dill/laws.hpp"
#include "dill/rel.hpp"
#include "model_util.hpp"

using namespace dill;
using namespace dill::testing;

namespace {

Obj web(std::vector<std::string> pts) { return Obj::atom("x", std::move(pts)); }

RelMorphism table(const Obj& x, const Obj& y, const Env& e,
                  const std::vector<std::pair<PointId, PointId>>& g) {
  std::vector<Entry<bool>> es;
  for (auto [a, b] : g) es.push_back({a, b, true});
  return from_entries(x, y, e, es);
}

}  // namespace

TEST_CASE("webs of types") {
  Valuation v;
  v.atoms["a"] = {"p", "q"};
  v.atoms["b"] = {"r"};
  PointSpace s;
  auto names = [&](const std::vector<PointId>& ps) {
    std::set<std::string> out;
    for (PointId p : ps) out.insert(s.print(p));
    return out;
  };
  CHECK(names(enumerate_web(denote_type(parse_type("a"), v), 2, s)) ==
        std::set<std::string>{"p", "q"});
  Valuation one;
  one.atoms["a"] = {"p"};
  one.atoms["b"] = {"r"};
  CHECK(names(enumerate_web(denote_type(parse_type("!a"), one), 2, s)) ==
        std::set<std::string>{"[]", "[p]", "[p, p]"});
  CHECK(names(enumerate_web(denote_type(parse_type("a tens b"), one), 2, s)) ==
        std::set<std::string>{"(p, r)"});
  CHECK(denote_type(parse_type("~a par b"), v) == denote_type(parse_type("a tens b"), v));
  CHECK_THROWS_AS(denote_type(parse_type("c"), v), UnknownAtom);
  CHECK(Valuation::parse_json(v.to_json()).atoms == v.atoms);
  CHECK(enumerate_web(Obj::excl(Obj::excl(web({"a"}))), 2, s).size() == 10);
}

TEST_CASE("generator graphs") {
  Obj x = web({"a"});
  Env e = env(4);
  CHECK(printed(rel_generator("der", {x}, e), 2) == PGraph{{"[a]", "a"}});
  CHECK(printed(rel_generator("coder", {x}, e), 2) == PGraph{{"a", "[a]"}});
  CHECK(printed(rel_generator("weak", {x}, e), 2) == PGraph{{"[]", "*"}});
  CHECK(printed(rel_generator("coweak", {x}, e), 2) == PGraph{{"*", "[]"}});
  PGraph digg = printed(rel_generator("digg", {x}, e), 2);
  CHECK(digg.count({"[a, a]", "[[a], [a]]"}));
  CHECK(digg.count({"[a, a]", "[[a, a]]"}));
  CHECK_FALSE(digg.count({"[a]", "[[a], [a]]"}));
  PGraph cc = printed(rel_generator("cocontr", {x}, e), 2);
  CHECK(cc.count({"([a], [a])", "[a, a]"}));
  PGraph c = printed(rel_generator("contr", {x}, e), 2);
  CHECK(c == PGraph{{"[]", "([], [])"},
                    {"[a]", "([], [a])"},
                    {"[a]", "([a], [])"},
                    {"[a, a]", "([], [a, a])"},
                    {"[a, a]", "([a], [a])"},
                    {"[a, a]", "([a, a], [])"}});
  CHECK(printed(rel_generator("mix0", {}, e), 2) == PGraph{{"*", "*"}});
  CHECK_THROWS_AS(rel_generator("der", {}, e), UsageError);
  CHECK_THROWS_AS(rel_generator("swap", {x}, e), UsageError);
}

TEST_CASE("contraction splits every bag") {
  Obj x = web({"a", "b"});
  Env e = env(6);
  RelMorphism c = rel_generator("contr", {x}, e);
  RelMorphism cc = rel_generator("cocontr", {x}, e);
  PointSpace& s = *e.space;
  for (PointId m : enumerate_web(Obj::excl(x), 3, s)) {
    std::set<std::pair<PointId, PointId>> want;
    for (PointId l : sub_bags(m, s)) want.insert({l, *s.bag_minus(m, l)});
    std::set<std::pair<PointId, PointId>> got;
    for (const auto& [p, w] : c.row(m)) got.insert({s.parts(p)[0], s.parts(p)[1]});
    CHECK(got == want);
    for (auto [l, r] : want) CHECK(cc.at(s.pair(l, r), m));
  }
}

TEST_CASE("digging decomposes bags") {
  Obj x = web({"a", "b"});
  std::size_t d = 3;
  Env e = env(d);
  PointSpace& s = *e.space;
  RelMorphism g = rel_generator("digg", {x}, e);
  // Every bag of bags within d whose union is within d.
  auto inner = enumerate_web(Obj::excl(x), d, s);
  std::set<std::pair<PointId, PointId>> want;
  for (PointId big : enumerate_bags(inner, d, s)) {
    PointId u = s.empty_bag();
    for (PointId m : s.parts(big)) u = s.bag_union(u, m);
    if (s.bag_size(u) <= d) want.insert({u, big});
  }
  CHECK(graph(g, d) == want);
}

TEST_CASE("exponential of a relation") {
  Obj x = web({"a"});
  Obj y = Obj::atom("y", {"b", "c"});
  Env e = env(3);
  PointSpace& s = *e.space;
  CHECK(same(rel_excl(identity<bool>(x, e)), identity<bool>(Obj::excl(x), e), 3));
  RelMorphism r = table(x, y, e, {{s.atom("a"), s.atom("b")}});
  PGraph g = printed(rel_excl(r), 3);
  CHECK(g.count({"[a, a]", "[b, b]"}));
  CHECK_FALSE(g.count({"[a, a]", "[b, c]"}));
  CHECK(printed(rel_excl(table(x, y, e, {})), 3) == PGraph{{"[]", "[]"}});
  RelMorphism r2 = table(x, y, e, {{s.atom("a"), s.atom("b")}, {s.atom("a"), s.atom("c")}});
  CHECK(printed(rel_excl(r2), 2).count({"[a, a]", "[b, c]"}));
}

TEST_CASE("exponential is functorial") {
  Obj x = web({"a", "b"});
  Env e = env(3);
  PointSpace& s = *e.space;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::vector<std::pair<PointId, PointId>> f, g;
    for (const char* a : {"a", "b"})
      for (const char* b : {"a", "b"}) {
        if (rng() % 2) f.push_back({s.atom(a), s.atom(b)});
        if (rng() % 2) g.push_back({s.atom(a), s.atom(b)});
      }
    RelMorphism rf = table(x, x, e, f), rg = table(x, x, e, g);
    CHECK(same(rel_excl(compose(rg, rf)), compose(rel_excl(rg), rel_excl(rf)), 3));
  }
}

TEST_CASE("promotion examples") {
  Obj a = web({"a"});
  Obj b = Obj::atom("y", {"b"});
  Env e = env(3);
  PointSpace& s = *e.space;
  RelMorphism empty = table(Obj::excl(a), b, e, {});
  CHECK(printed(rel_promotion(empty, {a}), 3) == PGraph{{"[]", "[]"}});
  RelMorphism constant = from_entries<bool>(Obj::unit(), b, e, {{s.unit(), s.atom("b"), true}});
  CHECK(printed(rel_promotion(constant, {}), 3) ==
        PGraph{{"*", "[]"}, {"*", "[b]"}, {"*", "[b, b]"}, {"*", "[b, b, b]"}});
  PGraph pd = printed(rel_promotion(rel_generator("der", {a}, e), {a}), 2);
  CHECK(pd == PGraph{{"[]", "[]"}, {"[a]", "[a]"}, {"[a, a]", "[a, a]"}});
}

TEST_CASE("closed form promotion agrees with the compositional one") {
  std::mt19937_64 rng(11);
  Obj a = web({"a", "b"});
  Obj c = Obj::atom("z", {"p"});
  Obj y = Obj::atom("y", {"u", "v"});
  for (int i = 0; i < 8; ++i) {
    Env e = env(3);
    PointSpace& s = *e.space;
    std::vector<Obj> args = i % 2 ? std::vector<Obj>{a} : std::vector<Obj>{a, c};
    Obj src = promotion_source(args);
    std::vector<Entry<bool>> es;
    for (PointId p : enumerate_web(src, 2, s))
      for (PointId q : enumerate_web(y, 2, s))
        if (rng() % 3 == 0) es.push_back({p, q, true});
    RelMorphism f = from_entries(src, y, e, es);
    CHECK(same(rel_promotion(f, args), promotion(f, args), 2));
  }
}

TEST_CASE("relational combinators") {
  Obj x = web({"a", "b"});
  Env e = env(2);
  PointSpace& s = *e.space;
  RelMorphism r = table(x, x, e, {{s.atom("a"), s.atom("b")}});
  CHECK(same(compose(identity<bool>(x, e), r), r, 2));
  CHECK(same(compose(r, identity<bool>(x, e)), r, 2));
  CHECK(same(transpose(transpose(r)), r, 2));
  CHECK(printed(transpose(r), 2) == PGraph{{"b", "a"}});
  CHECK(printed(tensor(r, r), 2) == PGraph{{"(a, a)", "(b, b)"}});
  CHECK(printed(compose(r, r), 2).empty());
  CHECK(same(add(r, r), r, 2));
}

TEST_CASE("antiderivative examples") {
  Obj x = Obj::atom("x", {"a", "a2"});
  Obj y = Obj::atom("y", {"b"});
  Env e = env(3);
  PointSpace& s = *e.space;
  PointId a = s.atom("a"), a2 = s.atom("a2"), b = s.atom("b");
  Obj src = Obj::tensor(Obj::excl(x), x);
  RelMorphism f1 = table(src, y, e, {{s.pair(s.empty_bag(), a), b}});
  CHECK(printed(antiderivative_rel(f1, x), 3) == PGraph{{"[a]", "b"}});
  CHECK(printed(antiderivative_rel(table(src, y, e, {}), x), 3).empty());
  RelMorphism f3 = table(src, y, e,
                         {{s.pair(s.singleton(a2), a), b}, {s.pair(s.singleton(a), a2), b}});
  CHECK(printed(antiderivative_rel(f3, x), 3) == PGraph{{"[a, a2]", "b"}});
  RelMorphism bad = table(src, y, e, {{s.pair(s.singleton(a2), a), b}});
  CHECK_THROWS_AS(antiderivative_rel(bad, x), SymmetryViolation);
  auto w = rel_symmetry_witness(bad, x);
  REQUIRE(w);
  CHECK(s.print(w->b) == "b");
  CHECK_THROWS_AS(antiderivative_rel(table(x, y, e, {}), x), WebMismatch);
}

TEST_CASE("antiderivative inverts the coderivative") {
  Obj x = Obj::atom("x", {"a", "b"});
  Obj y = Obj::atom("y", {"u"});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    std::size_t d = 3;
    Env e = env(2 * d);
    PointSpace& s = *e.space;
    std::vector<Entry<bool>> he;
    for (PointId m : enumerate_web(Obj::excl(x), d, s))
      if (s.bag_size(m) > 0 && rng() % 3 == 0) he.push_back({m, s.atom("u"), true});
    RelMorphism h = from_entries(Obj::excl(x), y, e, he);
    RelMorphism f = from_entries(Obj::tensor(Obj::excl(x), x), y, e,
                                 entries(compose(h, coderc<bool>(x, e)), d));
    RelMorphism g = antiderivative_rel(f, x);
    CHECK(same(compose(g, coderc<bool>(x, e)), f, d));
    CHECK(same(g, h, d - 1));
  }
}

TEST_CASE("J is the identity") {
  for (std::size_t n = 1; n <= 3; ++n) {
    Obj x = web_object("x", n);
    std::size_t d = 3;
    Env e = env(2 * d);
    PointSpace& s = *e.space;
    RelMorphism dd = compose(coderc<bool>(x, e), derc<bool>(x, e));
    std::set<std::pair<PointId, PointId>> diag;
    for (PointId m : enumerate_web(Obj::excl(x), d, s))
      if (s.bag_size(m) > 0) diag.insert({m, m});
    CHECK(graph(dd, d) == diag);
    RelMorphism j = add(identity<bool>(Obj::excl(x), e), dd);
    CHECK(same(j, identity<bool>(Obj::excl(x), e), d));
  }
}

TEST_CASE("relational law suites") {
  for (const char* suite : {"bialgebra", "comonad", "seely", "leibniz", "schwarz",
                            "rel-antiderivative"}) {
    LawConfig c;
    c.suite = suite;
    c.model = "rel";
    c.web = 2;
    c.degree = 3;
    for (const auto& r : run_law_suite(c)) {
      INFO(r.name << " " << r.detail);
      CHECK(r.ok);
    }
  }
  LawConfig bad;
  bad.suite = "taylor";
  bad.model = "rel";
  CHECK_THROWS_AS(run_law_suite(bad), UsageError);
}
