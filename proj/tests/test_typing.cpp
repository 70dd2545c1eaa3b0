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
#include <string>
#include <vector>

#include "dill/corpus.hpp"
#include "dill/syntax.hpp"
#include "dill/typing.hpp"

using namespace dill;

namespace {

LType t(const std::string& s) { return parse_type(s); }

Context ctx(std::initializer_list<std::pair<std::string, std::string>> xs) {
  Context c;
  for (const auto& [v, a] : xs) {
    bool co = v[0] == '~';
    c[Var{co ? v.substr(1) : v, co}] = t(a);
  }
  return c;
}

LType random_type(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> k(0, depth > 0 ? 5 : 1);
  switch (k(rng)) {
    case 0: return LType::atom_of(rng() % 2 ? "a" : "b");
    case 1: return LType::coatom(rng() % 2 ? "a" : "b");
    case 2: return LType::tens(random_type(rng, depth - 1), random_type(rng, depth - 1));
    case 3: return LType::par(random_type(rng, depth - 1), random_type(rng, depth - 1));
    case 4: return LType::excl(random_type(rng, depth - 1));
    default: return LType::intn(random_type(rng, depth - 1));
  }
}

TypeError::Code code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const TypeError& e) {
    return e.code();
  }
  FAIL("no type error");
  return TypeError::Code::TypeMismatch;
}

}  // namespace

TEST_CASE("linear negation") {
  CHECK(dual(t("a tens b")) == t("~a par ~b"));
  CHECK(dual(dual(t("!a"))) == t("!a"));
  CHECK(dual(t("!a")) == t("?~a"));
  CHECK(print_type(dual(t("!(a tens ?~b)"))) == "?(~a par !b)");
}

TEST_CASE("negation is an involution") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    LType a = random_type(rng, 4);
    CHECK(dual(dual(a)) == a);
    CHECK(parse_type(print_type(a)) == a);
    CHECK_FALSE(dual(a) == a);
  }
}

TEST_CASE("tree typing") {
  CHECK(typecheck_tree(ctx({{"x", "a"}, {"y", "b"}}), parse_tree("x tens y")) == t("a tens b"));
  CHECK(typecheck_tree(ctx({{"x", "?a"}, {"y", "?a"}}), parse_tree("c(x, y)")) == t("?a"));
  CHECK(code_of([] { typecheck_tree(ctx({{"x", "?a"}, {"y", "?b"}}), parse_tree("c(x, y)")); }) ==
        TypeError::Code::TypeMismatch);
  CHECK(typecheck_tree(ctx({{"x", "a"}}), parse_tree("cc(cd(x), cw)")) == t("!a"));
  CHECK(typecheck_tree({}, parse_tree("w:?a")) == t("?a"));
  CHECK(code_of([] { typecheck_tree({}, parse_tree("w")); }) == TypeError::Code::AmbiguousType);
  CHECK(code_of([] { typecheck_tree({}, parse_tree("x")); }) == TypeError::Code::UnboundVar);
  CHECK(code_of([] { typecheck_tree({}, parse_tree("w:!a")); }) == TypeError::Code::TypeMismatch);
}

TEST_CASE("box typing") {
  Context phi = ctx({{"z", "!a"}});
  CHECK(typecheck_tree(phi, parse_tree("box{([d(u), ~u] ;)}(z)")) == t("!a"));
  CHECK(code_of([] {
          typecheck_tree(ctx({{"z", "a"}}), parse_tree("box{([d(u), ~u] ;)}(z)"));
        }) == TypeError::Code::TypeMismatch);
}

TEST_CASE("net typing") {
  CHECK_NOTHROW(typecheck_net(ctx({{"x", "a"}, {"~x", "~a"}}), parse_net("([x, ~x] ;)"),
                              {t("a"), t("~a")}));
  CHECK_NOTHROW(typecheck_net({}, parse_net("([w] ;)"), {t("?a")}));
  CHECK(code_of([] {
          typecheck_net(ctx({{"x", "a"}, {"~x", "~a"}}), parse_net("([x, ~x] ;)"),
                        {t("a"), t("a")});
        }) == TypeError::Code::TypeMismatch);
  CHECK(code_of([] { typecheck_net({}, parse_net("([w] ;)"), {t("?a"), t("a")}); }) ==
        TypeError::Code::WidthMismatch);
  CHECK(code_of([] {
          typecheck_net(ctx({{"x", "a"}, {"y", "b"}}), parse_net("(; <x | y>)"), {});
        }) == TypeError::Code::CutTypeClash);
  CHECK_NOTHROW(typecheck_net({}, parse_net("(; <w | cw>)"), {}, {true}));
  CHECK(code_of([] { typecheck_net({}, parse_net("(; <w | cw>)"), {}); }) ==
        TypeError::Code::AmbiguousType);
  CHECK_NOTHROW(typecheck_net({}, parse_net("(; <w:?a | cw>)"), {}));
}

TEST_CASE("contexts must be dual closed") {
  CHECK(code_of([] { complete_duals(ctx({{"x", "a"}, {"~x", "a"}})); }) ==
        TypeError::Code::TypeMismatch);
  Context c = complete_duals(ctx({{"x", "!a"}}));
  CHECK(c.at(Var{"x", true}) == t("?~a"));
}

TEST_CASE("inference fills in unknowns") {
  NetInference inf = infer_net(parse_net("([x, ~x tens y, ~y] ;)"), {std::nullopt, std::nullopt, std::nullopt}, {});
  REQUIRE(inf.gamma.size() == 3);
  CHECK(inf.gamma[1] == LType::tens(dual(inf.gamma[0]), dual(inf.gamma[2])));
  NetInference g = infer_net(parse_net("([x, ~x] ;)"), {t("!b"), std::nullopt}, {});
  CHECK(g.gamma[1] == t("?~b"));
  CHECK(infer_net(parse_net("([x, ~x] ;)"), {std::nullopt, std::nullopt}, {}).gamma[0] == t("o"));
}

TEST_CASE("typing is stable under renaming and cut order") {
  auto corpus = generate_net_corpus({});
  for (const auto& c : corpus) {
    for (const auto& [key, term] : c.net.entries()) {
      FreshNames f{"r", 0};
      SimpleNet q = rename_fresh(term.rep, f);
      std::vector<Cut> cuts(q.cuts().rbegin(), q.cuts().rend());
      SimpleNet flipped(q.trees(), cuts);
      std::vector<std::optional<LType>> gamma(c.gamma.begin(), c.gamma.end());
      CHECK_NOTHROW(infer_net(Net::of(flipped), gamma, {}));
      CHECK_NOTHROW(infer_net(Net::of(term.rep), gamma, {}));
    }
  }
}
