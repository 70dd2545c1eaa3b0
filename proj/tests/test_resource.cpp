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
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dill/corpus.hpp"
#include "dill/dterm.hpp"
#include "dill/resource.hpp"
#include "dill/rterm.hpp"
#include "term_oracles.hpp"

using namespace dill;
using namespace dill::testing;

namespace {

RComb r(const std::string& s) { return parse_rterm(s); }
DComb dt(const std::string& s) { return parse_dterm(s); }
const RTerm& only(const RComb& c) {
  REQUIRE(c.size() == 1);
  return c.begin()->first;
}
const DTerm& donly(const DComb& c) {
  REQUIRE(c.size() == 1);
  return c.begin()->first;
}

const std::vector<RComb>& rcorpus() {
  static const std::vector<RComb> c = generate_rterm_corpus(1, 100);
  return c;
}

const std::vector<DComb>& dcorpus() {
  static const std::vector<DComb> c = generate_dterm_corpus(1, 100);
  return c;
}

}  // namespace

TEST_CASE("substitution") {
  CHECK(subst(dt("x"), dt("f a"), "x") == dt("f a"));
  CHECK(subst(dt("\\y. x"), dt("f a"), "x") == dt("\\y. f a"));
  CHECK(subst(dt("2 * (f x)"), dt("a"), "x") == dt("2 * (f a)"));
  CHECK(subst(dt("\\y. (x) y"), dt("y"), "x") == dt("\\z. (y) z"));
  CHECK(subst(dt("(f) x"), dt("a + b"), "x") == dt("(f) (a + b)"));
  CHECK(subst(dt("D f . x"), dt("a + b"), "x") == dt("D f . a + D f . b"));
}

TEST_CASE("differential substitution examples") {
  CHECK(dsubst(dt("y"), dt("n"), "x").is_zero());
  CHECK(dsubst(dt("x"), dt("n"), "x") == dt("n"));
  CHECK(dsubst(dt("(x) x"), dt("n"), "x") == dt("(n) x + (D x . n) x"));
  CHECK(dsubst(dt("\\y. (y) x"), dt("n"), "x") == dt("\\y. (D y . n) x"));
  CHECK(dsubst(dt("D x . x"), dt("n"), "x") == dt("D n . x + D x . n"));
}

TEST_CASE("derivatives commute") {
  CHECK(dt("D (D f . a) . b") == dt("D (D f . b) . a"));
  CHECK(donly(dt("D (D f . a) . b")).dargs().size() == 2);
}

TEST_CASE("differential substitution is bilinear") {
  const auto& c = dcorpus();
  for (std::size_t i = 0; i + 2 < 60; ++i) {
    DComb m = c[i], m2 = c[i + 1], n = c[i + 2];
    DComb sum = m.scaled(Scalar(2, 3));
    sum.add(m2.scaled(-3));
    DComb lhs = dsubst(sum, n, "a");
    DComb rhs = dsubst(m, n, "a").scaled(Scalar(2, 3));
    rhs.add(dsubst(m2, n, "a").scaled(-3));
    CHECK(lhs == rhs);
    DComb nn = n.scaled(5);
    nn.add(m2);
    DComb l2 = dsubst(m, nn, "f");
    DComb r2 = dsubst(m, n, "f").scaled(5);
    r2.add(dsubst(m, m2, "f"));
    CHECK(l2 == r2);
  }
}

TEST_CASE("differential substitution follows its equations") {
  std::mt19937_64 rng(17);
  const auto& c = dcorpus();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& [t, coef] : c[i]) {
      std::vector<DTerm> subs;
      subterms(t, subs);
      for (const DTerm& s : subs) {
        const char* xs[] = {"a", "b", "f", "g"};
        std::string x = xs[rng() % 4];
        const DComb& n = c[rng() % c.size()];
        CHECK(dsubst(to_comb(s), n, x) == ref_dsubst(to_comb(s), n, x));
        ++checked;
      }
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("differential reduction examples") {
  CHECK(normalize_dterm(dt("(\\x. x) y"), 10).term == dt("y"));
  CHECK(normalize_dterm(dt("D (\\x. x) . u"), 10).term == dt("\\x. u"));
  CHECK(normalize_dterm(dt("D (\\x. y) . u"), 10).term.is_zero());
  CHECK(normalize_dterm(dt("(D (\\x. (x) z) . (\\w. w)) v"), 10).term == dt("z"));
  CHECK_THROWS_AS(normalize_dterm(dt("(\\x. (x) x) (\\x. (x) x)"), 50), TermFuelExhausted);
  auto rs = find_redexes(dt("(\\x. x) ((\\y. y) z)"));
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].path.empty());
  CHECK(step(dt("(\\x. x) ((\\y. y) z)"), rs[1]) == dt("(\\x. x) z"));
}

TEST_CASE("differential terms print and parse") {
  for (const DComb& t : dcorpus()) CHECK(parse_dterm(print_dcomb(t)) == t);
  CHECK_THROWS_AS(parse_dterm("\\x."), ParseError);
}

TEST_CASE("differential reduction is confluent on the corpus") {
  std::size_t i = 0;
  for (const DComb& t : dcorpus()) {
    DComb lo = normalize_dterm(t, 1000).term;
    DComb li = normalize_dterm(t, 1000, {TermStrategy::Kind::LeftmostInnermost, 0}).term;
    DComb rnd = normalize_dterm(t, 1000, {TermStrategy::Kind::Random, ++i}).term;
    CHECK(lo == li);
    CHECK(lo == rnd);
    for (const DRedex& r : find_redexes(t)) CHECK(normalize_dterm(step(t, r), 1000).term == lo);
  }
}

TEST_CASE("resource degree") {
  CHECK(deg(only(r("<x>[x, y]")), "x") == 2);
  CHECK(deg(only(r("\\x. x")), "x") == 0);
  CHECK(deg(only(r("y")), "x") == 0);
}

TEST_CASE("bunch reduction examples") {
  CHECK(bunch_reduce(only(r("<\\x. <x>[x]>[u, v]"))) == r("<u>[v] + <v>[u]"));
  CHECK(bunch_reduce(only(r("<\\x. y>[u]"))).is_zero());
  CHECK(bunch_reduce(only(r("<\\x. x>[u]"))) == r("u"));
  CHECK(bunch_reduce(only(r("<\\x. <x>[x]>[u, u]"))) == r("2 * <u>[u]"));
  CHECK_THROWS_AS(bunch_reduce(only(r("<y>[u]"))), NotARedex);
}

TEST_CASE("bunch reduction agrees with the assignment oracle") {
  std::size_t checked = 0;
  for (const RComb& t : rcorpus())
    for (const auto& [s, c] : t) {
      std::vector<RTerm> rs;
      collect_redexes(s, rs);
      for (const RTerm& x : rs) {
        if (x.bunch().size() > 4) continue;
        CHECK(bunch_reduce(x) == bunch_oracle(x));
        ++checked;
      }
    }
  CHECK(checked >= 100);
}

TEST_CASE("resource normalization") {
  CHECK(normalize_resource(r("<\\x. <x>[x]>[\\y. y, z]"), 100).term == r("z + <z>[\\y. y]"));
  RComb nf = r("<z>[\\y. y, u]");
  CHECK(normalize_resource(nf, 100).term == nf);
  CHECK(normalize_resource(nf, 100).steps == 0);
  CHECK(normalize_resource(r("<\\x. x>[t] + t"), 100).term == r("2 * t"));
}

TEST_CASE("resource reduction terminates and is confluent on the corpus") {
  for (const RComb& t : rcorpus()) {
    RComb nf;
    REQUIRE_NOTHROW(nf = normalize_resource(t, 10000).term);
    CHECK(find_redexes(nf).empty());
    for (const RRedex& x : find_redexes(t))
      CHECK(normalize_resource(step(t, x), 10000).term == nf);
  }
}

TEST_CASE("bunches expand multilinearly") {
  CHECK(r("<x>[y + z, y + z]") == r("<x>[y, y] + 2 * <x>[y, z] + <x>[z, z]"));
  CHECK(rterm::bapp(r("f + g"), {r("y")}) == r("<f>[y] + <g>[y]"));
  CHECK(rterm::bapp(r("x"), {r("y"), RComb()}).is_zero());
}

TEST_CASE("resource substitutions") {
  CHECK(subst(r("<x>[x, y]"), r("u + v"), "x") == r("<u>[u, y] + <u>[v, y] + <v>[u, y] + <v>[v, y]"));
  CHECK(dsubst(r("<x>[x, y]"), r("u"), "x") == r("<u>[x, y] + <x>[u, y]"));
  CHECK(subst_occurrences(only(r("<x>[x]")), "x", {only(r("a")), only(r("b"))}) ==
        only(r("<a>[b]")));
  CHECK_THROWS_AS(subst_occurrences(only(r("<x>[x]")), "x", {only(r("a"))}), UsageError);
}

TEST_CASE("Euler identity") {
  for (const RComb& t : rcorpus())
    for (const auto& [s, c] : t)
      for (const std::string& x : free_vars(s)) {
        RComb e = dsubst(RComb(s), RComb(RTerm::var(x)), x);
        CHECK(e == RComb(s, Scalar(static_cast<long>(deg(s, x)))));
      }
}

TEST_CASE("Taylor expansion") {
  CHECK(taylor_expand(dt("x"), 3) == r("x"));
  CHECK(taylor_expand(dt("(M) R"), 2) == r("<M>[] + <M>[R] + 1/2 * <M>[R, R]"));
  CHECK(taylor_expand(dt("\\x. (f) x"), 1) == rterm::lam("x", r("<f>[] + <f>[x]")));
  CHECK(taylor_expand(dt("(D f . a) r"), 1) == r("<f>[a] + <f>[a, r]"));
  CHECK(taylor_expand(dt("(f) (a + b)"), 1) == r("<f>[] + <f>[a] + <f>[b]"));
  CHECK(taylor_expand(dt("2 * x"), 0) == r("2 * x"));
  CHECK(taylor_expand(dt("(f) a"), 0) == r("<f>[]"));
}

TEST_CASE("resource antiderivative examples") {
  AntiderivativeCheck c = antiderivative_check(r("<x>[h] + <h>[x]"), "x", "h");
  CHECK(c.ok);
  CHECK(c.v == r("<x>[x]"));
  CHECK(c.derivative == r("<x>[h] + <h>[x]"));
  CHECK(integrate(r("<y>[h]"), "x") == r("<y>[h]"));
  CHECK(integrate(r("<x>[x, h]"), "x") == r("1/3 * <x>[x, h]"));
  CHECK_THROWS_AS(antiderive_resource(r("<x>[h]"), "x", "h"), SymmetryViolation);
  CHECK_THROWS_AS(antiderive_resource(r("<x>[h, h]"), "x", "h"), NotLinearInH);
  CHECK_THROWS_AS(antiderive_resource(r("<x>[y]"), "x", "h"), NotLinearInH);
}

TEST_CASE("symmetrized terms round trip") {
  std::mt19937_64 rng(23);
  std::size_t done = 0;
  while (done < 50) {
    std::vector<std::string> binders;
    RTerm s = random_rterm(rng, 3, binders);
    std::size_t d = count_occurrences(s, "x");
    if (d == 0 || d > 4) continue;
    RComb u = symmetrize(s, "x", "h");
    if (u.is_zero()) continue;
    AntiderivativeCheck c = antiderivative_check(u, "x", "h");
    CHECK(c.ok);
    CHECK(c.v == RComb(s));
    ++done;
  }
}
