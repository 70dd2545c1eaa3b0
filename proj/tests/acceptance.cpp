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


// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dill/corpus.hpp"
#include "dill/dterm.hpp"
#include "dill/interpret.hpp"
#include "dill/laws.hpp"
#include "dill/logic.hpp"
#include "dill/resource.hpp"
#include "dill/rewrite.hpp"
#include "dill/rterm.hpp"
#include "dill/typing.hpp"
#include "term_oracles.hpp"

using namespace dill;
using namespace dill::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure only.
struct Checker {
  Outcome o;
  std::size_t count = 0;
  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && o.ok) {
      o.ok = false;
      o.detail = what;
    }
  }
};

const std::vector<CorpusNet>& corpus() {
  static const std::vector<CorpusNet> c = generate_net_corpus({});
  return c;
}

Valuation one_point() { return Valuation::parse_json(R"({"atoms": {"o": ["p"]}})"); }

SequentializedNet single(const Net& n, const std::vector<LType>& gamma, const Deriv& d) {
  return SequentializedNet{n, gamma, {Scalar(1)}, {d}};
}

Outcome subject_reduction() {
  Checker c;
  std::size_t steps = 0;
  for (const auto& cn : corpus()) {
    Judgment j = check_derivation(cn.derivation);
    std::vector<std::optional<LType>> gamma(cn.gamma.begin(), cn.gamma.end());
    for (const Redex& r : find_redexes(cn.net)) {
      FreshNames f;
      f.avoid(cn.net);
      Net after = step(cn.net, r, f);
      ++steps;
      if (after.is_zero()) continue;
      NetInference inf = infer_net(after, gamma, j.phi);
      bool extends = inf.gamma == cn.gamma;
      for (const Inference& e : inf.elements)
        for (const auto& [v, a] : j.phi)
          if (e.phi.count(v) && !(e.phi.at(v) == a)) extends = false;
      c.expect(extends, "context not extended after " + describe_redex(cn.net, r));
    }
  }
  c.expect(corpus().size() >= 200, "corpus too small");
  if (c.o.ok) c.o.detail = std::to_string(corpus().size()) + " nets, " + std::to_string(steps) + " steps";
  return c.o;
}

template <class K>
Outcome invariance(std::size_t d, bool count_rules) {
  Checker c;
  Valuation v = one_point();
  std::size_t chain = 0, boxbox = 0, steps = 0;
  for (const auto& cn : corpus()) {
    std::vector<std::optional<LType>> g(cn.gamma.begin(), cn.gamma.end());
    PointSpace sp;
    NetValue<K> src = interpret_net<K>(single(cn.net, cn.gamma, cn.derivation), v, d, sp);
    c.expect(src.info.stable, "unstable source " + print_net(cn.net));
    bool has_chain = false, has_box = false;
    for (const Redex& r : find_redexes(cn.net)) {
      has_chain |= r.rule == RuleId::ComCd;
      has_box |= r.rule == RuleId::ComBox;
      FreshNames f;
      Net after = step(cn.net, r, f);
      NetValue<K> tgt = interpret_net<K>(sequentialize_net(after, g), v, d, sp);
      c.expect(tgt.info.stable, "unstable reduct " + print_net(after));
      c.expect(!value_difference(src.value, tgt.value, sp),
               "value changes after " + describe_redex(cn.net, r) + " in " + print_net(cn.net));
      ++steps;
    }
    chain += has_chain;
    boxbox += has_box;
  }
  if (count_rules) {
    c.expect(chain >= 10, "only " + std::to_string(chain) + " chain-rule nets");
    c.expect(boxbox >= 10, "only " + std::to_string(boxbox) + " box/box nets");
  }
  if (c.o.ok) {
    c.o.detail = std::to_string(steps) + " steps";
    if (count_rules)
      c.o.detail += ", " + std::to_string(chain) + " chain-rule nets, " + std::to_string(boxbox) +
                    " box/box nets";
  }
  return c.o;
}

Outcome derivation_independence() {
  Checker c;
  Valuation v = one_point();
  std::size_t nets = 0;
  for (const auto& cn : corpus()) {
    Judgment j = check_derivation(cn.derivation);
    std::vector<Deriv> ds = sequentializations(cn.net, cn.gamma, j.phi, 4);
    ds.push_back(cn.derivation);
    std::set<std::string> distinct;
    std::vector<Deriv> uniq;
    for (const Deriv& d : ds)
      if (distinct.insert(print_derivation(d)).second) uniq.push_back(d);
    if (uniq.size() < 2) continue;
    ++nets;
    PointSpace sp;
    auto r0 = interpret_net<bool>(single(cn.net, cn.gamma, uniq[0]), v, 3, sp);
    auto w0 = interpret_net<Scalar>(single(cn.net, cn.gamma, uniq[0]), v, 3, sp);
    for (std::size_t k = 1; k < uniq.size(); ++k) {
      auto r = interpret_net<bool>(single(cn.net, cn.gamma, uniq[k]), v, 3, sp);
      auto w = interpret_net<Scalar>(single(cn.net, cn.gamma, uniq[k]), v, 3, sp);
      c.expect(!value_difference(r0.value, r.value, sp), "rel differs on " + print_net(cn.net));
      c.expect(!value_difference(w0.value, w.value, sp), "wrel differs on " + print_net(cn.net));
    }
  }
  c.expect(nets >= 50, "only " + std::to_string(nets) + " nets with two derivations");
  if (c.o.ok) c.o.detail = std::to_string(nets) + " nets";
  return c.o;
}

void suite(Checker& c, LawConfig cfg) {
  for (const LawResult& r : run_law_suite(cfg))
    c.expect(r.ok, r.name + " (web " + std::to_string(cfg.web) + ", degree " +
                       std::to_string(cfg.degree) + "): " + r.detail);
}

LawConfig cfg(const std::string& name, const std::string& model, std::size_t web, std::size_t d,
              std::size_t samples = 20) {
  LawConfig c;
  c.suite = name;
  c.model = model;
  c.web = web;
  c.degree = d;
  c.samples = samples;
  return c;
}

Outcome rel_antiderivative() {
  Checker c;
  for (std::size_t w = 1; w <= 3; ++w)
    suite(c, cfg("rel-antiderivative", "rel", w, 5, w == 3 ? 100 : 0));
  if (c.o.ok) c.o.detail = std::to_string(c.count) + " checks";
  return c.o;
}

Outcome wrel_antiderivative() {
  Checker c;
  for (std::size_t w = 1; w <= 3; ++w) suite(c, cfg("antiderivative", "wrel", w, 4));
  suite(c, cfg("poincare", "wrel", 2, 4, 100));
  for (std::size_t w = 1; w <= 2; ++w)
    for (std::size_t d = 0; d <= 4; ++d) suite(c, cfg("ftc", "wrel", w, d));
  if (c.o.ok) c.o.detail = std::to_string(c.count) + " checks";
  return c.o;
}

Outcome taylor_structure() {
  Checker c;
  for (std::size_t w = 1; w <= 2; ++w) {
    suite(c, cfg("taylor", "wrel", w, 4));
    suite(c, cfg("quasifunctor", "wrel", w, 3));
  }
  if (c.o.ok) c.o.detail = std::to_string(c.count) + " checks";
  return c.o;
}

Outcome law_suites() {
  Checker c;
  for (const char* name : {"bialgebra", "comonad", "seely", "leibniz", "schwarz"})
    suite(c, cfg(name, "both", 2, 4));
  if (c.o.ok) c.o.detail = std::to_string(c.count) + " checks";
  return c.o;
}

const std::vector<RComb>& rcorpus() {
  static const std::vector<RComb> c = generate_rterm_corpus(1, 100);
  return c;
}

Outcome resource_calculus() {
  Checker c;
  std::size_t bunches = 0;
  for (const RComb& t : rcorpus()) {
    for (const auto& [s, coef] : t) {
      std::vector<RTerm> rs;
      collect_redexes(s, rs);
      for (const RTerm& x : rs) {
        if (x.bunch().size() > 4) continue;
        c.expect(bunch_reduce(x) == bunch_oracle(x), "bunch oracle differs on " + print_rterm(x));
        ++bunches;
      }
    }
    try {
      RComb nf = normalize_resource(t, 10000).term;
      c.expect(find_redexes(nf).empty(), "redex left in " + print_rcomb(nf));
    } catch (const Error& e) {
      c.expect(false, print_rcomb(t) + ": " + e.what());
    }
  }
  c.expect(rcorpus().size() >= 100, "corpus too small");
  c.expect(parse_rterm("<x>[y + z, y + z]") ==
               parse_rterm("<x>[y, y] + 2 * <x>[y, z] + <x>[z, z]"),
           "multilinear expansion");
  if (c.o.ok) c.o.detail = std::to_string(bunches) + " bunches";
  return c.o;
}

Outcome resource_antiderivative() {
  Checker c;
  std::mt19937_64 rng(23);
  std::size_t done = 0;
  while (done < 100) {
    std::vector<std::string> binders;
    RTerm s = random_rterm(rng, 3, binders);
    std::size_t d = count_occurrences(s, "x");
    if (d == 0 || d > 3) continue;
    RComb u = symmetrize(s, "x", "h");
    if (u.is_zero()) continue;
    AntiderivativeCheck a = antiderivative_check(u, "x", "h");
    c.expect(a.ok && a.derivative == u, "derivative differs for " + print_rcomb(u));
    c.expect(a.v == RComb(s), "antiderivative differs for " + print_rcomb(u));
    ++done;
  }
  if (c.o.ok) c.o.detail = std::to_string(done) + " terms";
  return c.o;
}

Outcome differential_calculus() {
  Checker c;
  const std::vector<DComb> terms = generate_dterm_corpus(1, 100);
  std::mt19937_64 rng(17);
  std::size_t eqs = 0;
  for (const DComb& t : terms)
    for (const auto& [m, coef] : t) {
      std::vector<DTerm> subs;
      subterms(m, subs);
      for (const DTerm& s : subs) {
        const char* xs[] = {"a", "b", "f", "g"};
        std::string x = xs[rng() % 4];
        const DComb& n = terms[rng() % terms.size()];
        c.expect(dsubst(to_comb(s), n, x) == ref_dsubst(to_comb(s), n, x),
                 "dsubst differs on " + print_dterm(s));
        ++eqs;
      }
    }
  std::uint64_t seed = 0;
  for (const DComb& t : terms) {
    DComb lo = normalize_dterm(t, 1000).term;
    c.expect(normalize_dterm(t, 1000, {TermStrategy::Kind::LeftmostInnermost, 0}).term == lo,
             "innermost differs on " + print_dcomb(t));
    for (int k = 0; k < 3; ++k)
      c.expect(normalize_dterm(t, 1000, {TermStrategy::Kind::Random, ++seed}).term == lo,
               "random differs on " + print_dcomb(t));
    for (const DRedex& r : find_redexes(t))
      c.expect(normalize_dterm(step(t, r), 1000).term == lo, "step differs on " + print_dcomb(t));
  }
  if (c.o.ok) c.o.detail = std::to_string(eqs) + " dsubst instances, " +
                           std::to_string(terms.size()) + " terms";
  return c.o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"subject reduction", subject_reduction},
      {"relational invariance at degree 4", [] { return invariance<bool>(4, false); }},
      {"weighted invariance at degree 3", [] { return invariance<Scalar>(3, true); }},
      {"derivation independence", derivation_independence},
      {"relational antiderivative", rel_antiderivative},
      {"weighted antiderivatives", wrel_antiderivative},
      {"Taylor structure", taylor_structure},
      {"law suites at degree 4", law_suites},
      {"resource calculus", resource_calculus},
      {"resource antiderivative", resource_antiderivative},
      {"differential lambda-calculus", differential_calculus},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].name << " ("
              << t << ")" << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
