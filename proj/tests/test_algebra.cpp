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
#include <set>
#include <string>
#include <vector>

#include "dill/algebra.hpp"

using namespace dill;

using MS = Multiset<std::string>;
using Pair = std::pair<std::string, std::string>;

namespace {

// Number of index subsets of m's element sequence whose multiset is p.
long count_subsets(const MS& m, const MS& p) {
  std::vector<std::string> xs = m.elements();
  long n = 0;
  for (unsigned mask = 0; mask < (1u << xs.size()); ++mask) {
    MS sub;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask >> i & 1) sub.add(xs[i]);
    if (sub == p) ++n;
  }
  return n;
}

// Pairings of the element sequence of m with every permutation of p's.
std::vector<Multiset<Pair>> all_pairings(const MS& m, const MS& p) {
  std::vector<Multiset<Pair>> out;
  std::vector<std::string> xs = m.elements(), ys = p.elements();
  if (xs.size() != ys.size()) return out;
  std::vector<std::size_t> perm(ys.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    Multiset<Pair> r;
    for (std::size_t i = 0; i < xs.size(); ++i) r.add({xs[i], ys[perm[i]]});
    out.push_back(r);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<MS> small_multisets(const std::vector<std::string>& alphabet, std::size_t max) {
  std::vector<MS> out{MS{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max) continue;
    for (const auto& a : alphabet) {
      MS n = out[i];
      n.add(a);
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("scalars are exact and canonical") {
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK(Scalar(3, -6) == Scalar(-1, 2));
  CHECK(Scalar::parse("-4/6").str() == "-2/3");
  CHECK(Scalar::parse("7").is_integer());
  CHECK((Scalar(1, 3) + Scalar(1, 6)) == Scalar(1, 2));
  CHECK(Scalar::factorial(5) == Scalar(120));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ModeViolation);
  CHECK_THROWS_AS(Scalar::parse("x"), ModeViolation);
}

TEST_CASE("multisets compare by canonical form") {
  MS a{"b", "a", "b"};
  MS b{"b", "b", "a"};
  CHECK(a == b);
  CHECK(a.size() == 3);
  CHECK(a.count("b") == 2);
  CHECK(MS{"a"}.leq(a));
  CHECK_FALSE(MS{"a", "a"}.leq(a));
  CHECK(a.minus(MS{"b"}) == MS{"a", "b"});
  CHECK_THROWS_AS(a.minus(MS{"c"}), SubsetViolation);
}

TEST_CASE("binomial examples") {
  CHECK(multiset_binomial(MS{"a", "a"}, MS{"a"}) == Scalar(2));
  CHECK(multiset_binomial(MS{"a", "a", "b"}, MS{"a", "b"}) == Scalar(2));
  CHECK(multiset_binomial(MS{"a", "b", "b"}, MS{"a", "b", "b"}) == Scalar(1));
  CHECK_THROWS_AS(multiset_binomial(MS{"a"}, MS{"b"}), SubsetViolation);
}

TEST_CASE("binomial counts sub-selections") {
  for (const MS& m : small_multisets({"a", "b", "c"}, 4)) {
    CHECK(multiset_binomial(m, MS{}) == Scalar(1));
    CHECK(multiset_binomial(m, m) == Scalar(1));
    for (const MS& p : small_multisets({"a", "b", "c"}, 4))
      if (p.leq(m)) CHECK(multiset_binomial(m, p) == Scalar(count_subsets(m, p)));
  }
}

TEST_CASE("binomials over one letter sum to a power of two") {
  for (std::size_t n = 0; n <= 8; ++n) {
    MS m;
    m.add("a", n);
    Scalar sum;
    for (std::size_t k = 0; k <= n; ++k) {
      MS p;
      p.add("a", k);
      sum += multiset_binomial(m, p);
    }
    CHECK(sum == Scalar(1L << n));
  }
}

TEST_CASE("L(m, p) examples") {
  auto one = enumerate_L(MS{"a"}, MS{"b"});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Multiset<Pair>{{"a", "b"}});
  auto two = enumerate_L(MS{"a", "a"}, MS{"b", "c"});
  REQUIRE(two.size() == 1);
  CHECK(two[0] == (Multiset<Pair>{{"a", "b"}, {"a", "c"}}));
  CHECK(enumerate_L(MS{"a"}, MS{"b", "c"}).empty());
  CHECK(enumerate_L(MS{}, MS{}).size() == 1);
}

TEST_CASE("L(m, p) agrees with exhaustive pairing") {
  auto ms = small_multisets({"a", "b", "c"}, 4);
  auto ps = small_multisets({"x", "y"}, 4);
  for (const MS& m : ms)
    for (const MS& p : ps) {
      auto got = enumerate_L(m, p);
      std::set<Multiset<Pair>> got_set(got.begin(), got.end());
      CHECK(got_set.size() == got.size());
      auto want = all_pairings(m, p);
      std::set<Multiset<Pair>> want_set(want.begin(), want.end());
      CHECK(got_set == want_set);
    }
}

TEST_CASE("multinomial examples") {
  CHECK(multiset_multinomial(MS{"b", "b"}, Multiset<Pair>{{"a", "b"}, {"a", "b"}}) == Scalar(1));
  CHECK(multiset_multinomial(MS{"b", "c"}, Multiset<Pair>{{"a", "b"}, {"a", "c"}}) == Scalar(1));
  CHECK(multiset_multinomial(MS{"b", "b"}, Multiset<Pair>{{"a", "b"}, {"a2", "b"}}) == Scalar(2));
  CHECK_THROWS_AS(multiset_multinomial(MS{"b"}, Multiset<Pair>{{"a", "c"}}), MarginalMismatch);
}

TEST_CASE("multinomial counts the pairings that produce r") {
  auto ms = small_multisets({"a", "b"}, 4);
  auto ps = small_multisets({"x", "y", "z"}, 4);
  for (const MS& m : ms)
    for (const MS& p : ps) {
      auto pairings = all_pairings(m, p);
      long mfact = 1;
      for (const auto& e : m.entries()) mfact *= Scalar::factorial(e.second).value().get_num().get_si();
      for (const auto& r : enumerate_L(m, p)) {
        long hits = std::count(pairings.begin(), pairings.end(), r);
        CHECK(multiset_multinomial(p, r) * Scalar(mfact) == Scalar(hits));
      }
    }
}

TEST_CASE("linear combinations form a module") {
  using LC = LinComb<std::string>;
  LC t("t");
  LC a = t.scaled(2) + t.scaled(3);
  CHECK(a.coefficient("t") == Scalar(5));
  CHECK(t.scaled(0).is_zero());
  LC u = t + LC("u", Scalar(-1, 2));
  CHECK((u + u.scaled(-1)).is_zero());
  CHECK(u.scaled(Scalar(2) + Scalar(3)) == u.scaled(2) + u.scaled(3));
  CHECK((u + LC("v")) == (LC("v") + u));
}

TEST_CASE("semiring modes") {
  Semiring b = Semiring::boolean();
  LinComb<std::string> x;
  x.add("t", 1, b);
  x.add("t", 1, b);
  CHECK(x.coefficient("t") == Scalar(1));
  CHECK(b.coerce(Scalar(5, 3)) == Scalar(1));
  CHECK(b.coerce(Scalar(0)) == Scalar(0));
  CHECK_THROWS_AS(b.coerce(Scalar(-1)), NegativeCoefficient);
  Semiring n = Semiring::nat();
  CHECK_THROWS_AS(n.check(Scalar(-1)), ModeViolation);
  CHECK_THROWS_AS(n.check(Scalar(1, 2)), ModeViolation);
  CHECK_THROWS_AS(LinComb<std::string>("t").scaled(-2, n), ModeViolation);
  CHECK_THROWS_AS(n.require_division(), ModeViolation);
  CHECK_NOTHROW(Semiring::rat().require_division());
  CHECK(parse_mode("nat") == SemiringMode::Nat);
  CHECK_THROWS_AS(parse_mode("int"), UsageError);
}
