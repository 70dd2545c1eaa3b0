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

#include <string>
#include <vector>

#include "dill/corpus.hpp"
#include "dill/syntax.hpp"

using namespace dill;

namespace {

const std::vector<CorpusNet>& corpus() {
  static const std::vector<CorpusNet> c = generate_net_corpus({});
  return c;
}

const SimpleNet& simple(const std::string& text) {
  static std::vector<Net> keep;
  keep.push_back(parse_net(text));
  return keep.back().only();
}

}  // namespace

TEST_CASE("free and bound variables") {
  VarSets t = vars(tree::tens(tree::var("x"), tree::var("y")));
  CHECK(t.free == std::set<Var>{{"x", false}, {"y", false}});
  CHECK(t.bound.empty());
  VarSets ax = vars(simple("([x, ~x] ;)"));
  CHECK(ax.bound == std::set<Var>{{"x", false}, {"x", true}});
  CHECK(ax.free.empty());
  VarSets loop = vars(simple("(; <x | ~x>)"));
  CHECK(loop.bound.size() == 2);
  CHECK(loop.free.empty());
}

TEST_CASE("variables are used at most once") {
  // The parser reports the structural error with its position.
  CHECK_THROWS_WITH(parse_net("([x, x] ;)"), Catch::Matchers::ContainsSubstring("occurs twice"));
  CHECK_THROWS_AS(parse_net("([x, x] ;)"), ParseError);
  CHECK_THROWS_AS(SimpleNet({tree::var("x")}, {{tree::var("x"), tree::var("y")}}),
                  MalformedNet);
  CHECK(Var{"x", false}.dual().dual() == Var{"x", false});
  CHECK_FALSE(Var{"x", false}.dual() == Var{"x", false});
}

TEST_CASE("alpha canonical forms") {
  SimpleNet a = alpha_canonicalize(simple("([x, ~x] ;)"));
  SimpleNet b = alpha_canonicalize(simple("([y, ~y] ;)"));
  CHECK(a == b);
  CHECK(print_simple(a) == "([v0, ~v0] ;)");
  SimpleNet c = alpha_canonicalize(simple("([z tens x, ~x] ;)"));
  CHECK(print_simple(c) == "([z tens v0, ~v0] ;)");
  CHECK_FALSE(alpha_canonicalize(simple("([z, ~q] ;)")) ==
              alpha_canonicalize(simple("([y, ~q] ;)")));
}

TEST_CASE("cuts form a multiset") {
  CHECK(parse_net("(; <w | cw>, <x | ~x>)") == parse_net("(; <~x | x>, <cw | w>)"));
}

TEST_CASE("canonicalization is idempotent and ignores bound names") {
  for (const auto& c : corpus()) {
    for (const auto& [key, term] : c.net.entries()) {
      SimpleNet k = alpha_canonicalize(term.rep);
      CHECK(alpha_canonicalize(k) == k);
      FreshNames fresh{"q", 0};
      SimpleNet renamed = rename_fresh(term.rep, fresh);
      CHECK(alpha_canonicalize(renamed) == k);
    }
  }
}

TEST_CASE("canonicalization is a congruence") {
  SimpleNet p = simple("([x par y, ~x, ~y] ;)");
  SimpleNet q = simple("([u par v, ~u, ~v] ;)");
  auto wrap = [](const SimpleNet& s) {
    std::vector<Tree> ts = s.trees();
    ts[0] = tree::der(ts[0]);
    return SimpleNet(ts, s.cuts());
  };
  CHECK(alpha_canonicalize(wrap(p)) == alpha_canonicalize(wrap(q)));
  Tree bp = tree::box(Net::of(simple("([d(a), ~a] ;)")), {tree::var("z")});
  Tree bq = tree::box(Net::of(simple("([d(b), ~b] ;)")), {tree::var("z")});
  CHECK(alpha_canonicalize(SimpleNet({bp}, {})) == alpha_canonicalize(SimpleNet({bq}, {})));
}

TEST_CASE("tree substitution") {
  CHECK(print_simple(tree_substitute(simple("([~x] ;)"), tree::var("w", true), {"x", false})) ==
        "([~w] ;)");
  CHECK(print_simple(tree_substitute(simple("([d(~x)] ;)"), tree::coder(tree::var("y")),
                                     {"x", false})) == "([d(cd(y))] ;)");
  CHECK_THROWS_AS(tree_substitute(simple("([y] ;)"), tree::var("z"), {"x", false}), NotLinear);
}

TEST_CASE("parsing and printing") {
  Net ax = parse_net("([x, ~x] ;)");
  CHECK(ax.width() == 2);
  CHECK(ax.is_simple());
  Net sum = parse_net("2/3 * ([w] ;) + 1/3 * ([cw] ;)");
  CHECK(sum.width() == 1);
  CHECK(sum.size() == 2);
  CHECK(sum.coefficient(simple("([w] ;)")) == Scalar(2, 3));
  CHECK(print_net(sum) == "2/3 * ([w] ;) + 1/3 * ([cw] ;)");
  CHECK(parse_net("0", 3).width() == 3);
  CHECK(parse_net("0", 3).is_zero());
  CHECK(parse_net("([w:?a] ;)").only().trees()[0]->annot == parse_type("?a"));
  CHECK_THROWS_AS(parse_net("([x tens y"), ParseError);
  try {
    parse_net("([x tens y");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_net("([x] ;) + ([y, z] ;)"), ParseError);
  Net one = Net::of(SimpleNet({tree::var("x")}, {}));
  CHECK_THROWS_AS(one.add(Net::of(SimpleNet({tree::var("y"), tree::var("z")}, {}))), MalformedNet);
  CHECK(parse_net("# a comment\n([x, ~x] ;)") == ax);
}

TEST_CASE("every constructor survives a round trip") {
  const char* text =
      "([c(a, w), cc(b, cw), d(~a) tens cd(~b), y par ~y, "
      "box{([~v, u par ~u] ;)}(v)] ; <x | ~x tens z>, <~z | w>)";
  Net n = parse_net(text);
  CHECK(print_net(n) == "([c(a, w), cc(b, cw), d(~a) tens cd(~b), y par ~y, "
                        "box{([~v, u par ~u] ;)}(v)] ; <x | ~x tens z>, <~z | w>)");
  CHECK(parse_net(print_net(n)) == n);
}

TEST_CASE("corpus round trip") {
  for (const auto& c : corpus()) {
    Net back = parse_net(print_net(c.net), c.net.width());
    CHECK(back.canonical() == c.net.canonical());
  }
  std::vector<Net> again = parse_net_corpus(print_net_corpus(corpus()));
  REQUIRE(again.size() == corpus().size());
  for (std::size_t i = 0; i < again.size(); ++i)
    CHECK(again[i].canonical() == corpus()[i].net.canonical());
}

TEST_CASE("net arithmetic") {
  Net p = parse_net("([w] ;)");
  Net q = parse_net("([cw] ;)");
  Net s = p.scaled(2);
  s.add(q);
  s.add(p.scaled(-2));
  CHECK(s == q);
  CHECK(p.scaled(0).is_zero());
  Net b(1);
  b.add(p.only(), 1, Semiring::boolean());
  b.add(p.only(), 1, Semiring::boolean());
  CHECK(b.coefficient(p.only()) == Scalar(1));
}

TEST_CASE("fresh names skip used ones") {
  FreshNames f{"z", 0};
  f.avoid(parse_net("([z0, z3 tens ~z0, ~z3] ;)"));
  Var v = f.fresh();
  CHECK(v.base != "z0");
  CHECK(v.base != "z3");
}
