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


// Independent reference implementations for the term calculi, shared by
// the unit tests and the acceptance run.

#ifndef DILL_TESTS_TERM_ORACLES_HPP
#define DILL_TESTS_TERM_ORACLES_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dill/dterm.hpp"
#include "dill/rterm.hpp"

namespace dill::testing {

// ---- resource terms ----

// Replaces occurrences of x, numbered left to right from next, by ts.
inline RTerm replace_occurrences(const RTerm& s, const std::string& x, const std::vector<RTerm>& ts,
                                 std::size_t& next) {
  switch (s.kind()) {
    case RTerm::Kind::Var:
      return s.name() == x ? ts.at(next++) : s;
    case RTerm::Kind::Bound:
      return s;
    case RTerm::Kind::Abs:
      return RTerm::abs(s.name(), replace_occurrences(s.body(), x, ts, next));
    case RTerm::Kind::BApp: {
      RTerm h = replace_occurrences(s.head(), x, ts, next);
      Multiset<RTerm> b;
      for (const RTerm& e : s.bunch().elements()) b.add(replace_occurrences(e, x, ts, next));
      return RTerm::bapp(h, b);
    }
  }
  return s;
}

inline std::size_t count_occurrences(const RTerm& s, const std::string& x) {
  switch (s.kind()) {
    case RTerm::Kind::Var: return s.name() == x ? 1 : 0;
    case RTerm::Kind::Bound: return 0;
    case RTerm::Kind::Abs: return count_occurrences(s.body(), x);
    case RTerm::Kind::BApp: {
      std::size_t n = count_occurrences(s.head(), x);
      for (const RTerm& e : s.bunch().elements()) n += count_occurrences(e, x);
      return n;
    }
  }
  return 0;
}

// <\x. s>[t1..tn] by summing over all n! assignments of bunch elements to
// occurrences.
inline RComb bunch_oracle(const RTerm& redex) {
  const RTerm& lam = redex.head();
  std::string v = "_oracle";
  RTerm body = open_term(lam.body(), v);
  std::vector<RTerm> elems = redex.bunch().elements();
  RComb out;
  if (count_occurrences(body, v) != elems.size()) return out;
  std::vector<std::size_t> idx(elems.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  do {
    std::vector<RTerm> ts;
    for (std::size_t i : idx) ts.push_back(elems[i]);
    std::size_t next = 0;
    out.add(replace_occurrences(body, v, ts, next), 1);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

inline void collect_redexes(const RTerm& t, std::vector<RTerm>& out) {
  switch (t.kind()) {
    case RTerm::Kind::Abs: {
      // Opened, so that collected redexes are locally closed.
      static std::size_t fresh = 0;
      collect_redexes(open_term(t.body(), "_c" + std::to_string(fresh++)), out);
      break;
    }
    case RTerm::Kind::BApp:
      if (t.head().kind() == RTerm::Kind::Abs) out.push_back(t);
      collect_redexes(t.head(), out);
      for (const RTerm& e : t.bunch().elements()) collect_redexes(e, out);
      break;
    default: break;
  }
}

inline RComb symmetrize(const RTerm& s, const std::string& x, const std::string& h) {
  // The sum over occurrences of x of s with that occurrence renamed to h.
  std::size_t n = count_occurrences(s, x);
  RComb out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<RTerm> ts(n, RTerm::var(x));
    ts[k] = RTerm::var(h);
    std::size_t next = 0;
    out.add(replace_occurrences(s, x, ts, next), 1);
  }
  return out;
}

inline RTerm random_rterm(std::mt19937_64& rng, int depth, std::vector<std::string>& binders) {
  std::uniform_int_distribution<int> k(0, depth > 0 ? 3 : 0);
  switch (k(rng)) {
    case 0: {
      std::vector<std::string> leaves{"x", "x", "y"};
      for (const auto& b : binders) leaves.push_back(b);
      return RTerm::var(leaves[rng() % leaves.size()]);
    }
    case 1: {
      std::string b = "b" + std::to_string(binders.size());
      binders.push_back(b);
      RTerm body = random_rterm(rng, depth - 1, binders);
      binders.pop_back();
      return RTerm::abs(b, close_term(body, b));
    }
    default: {
      RTerm head = random_rterm(rng, depth - 1, binders);
      Multiset<RTerm> bunch;
      std::size_t n = rng() % 3;
      for (std::size_t i = 0; i < n; ++i) bunch.add(random_rterm(rng, depth - 1, binders));
      return RTerm::bapp(head, bunch);
    }
  }
}

// ---- differential terms ----

inline DComb to_comb(const DTerm& t) { return DComb(t); }

inline DComb ref_dsubst(const DComb& m, const DComb& n, const std::string& x);

// Four equations: variables, abstraction, application and derivative, the
// derivative node taken one argument at a time.
inline DComb ref_dsubst(const DTerm& m, const DComb& n, const std::string& x) {
  switch (m.kind()) {
    case DTerm::Kind::Var: return m.name() == x ? n : DComb();
    case DTerm::Kind::Bound: return DComb();
    case DTerm::Kind::Abs: {
      std::set<std::string> avoid = free_vars(n);
      avoid.insert(x);
      for (const auto& v : free_vars(m)) avoid.insert(v);
      std::string y = fresh_name(avoid);
      return dterm::lam(y, ref_dsubst(open_term(m.body(), y), n, x));
    }
    case DTerm::Kind::App: {
      DComb head = to_comb(m.head());
      DComb out = dterm::app(ref_dsubst(m.head(), n, x), m.arg());
      out.add(dterm::app(dterm::diff(head, ref_dsubst(m.arg(), n, x)), m.arg()));
      return out;
    }
    case DTerm::Kind::Diff: {
      std::vector<DTerm> args = m.dargs();
      DTerm last = args.back();
      args.pop_back();
      DComb inner = args.empty() ? to_comb(m.head()) : to_comb(DTerm::diff(m.head(), args));
      DComb out = dterm::diff(ref_dsubst(inner, n, x), to_comb(last));
      out.add(dterm::diff(inner, ref_dsubst(to_comb(last), n, x)));
      return out;
    }
  }
  return DComb();
}

inline DComb ref_dsubst(const DComb& m, const DComb& n, const std::string& x) {
  DComb out;
  for (const auto& [t, c] : m) out.add(ref_dsubst(t, n, x).scaled(c));
  return out;
}

inline void subterms(const DTerm& t, std::vector<DTerm>& out) {
  out.push_back(t);
  switch (t.kind()) {
    case DTerm::Kind::Abs: subterms(open_term(t.body(), "_s" + std::to_string(out.size())), out); break;
    case DTerm::Kind::App:
      subterms(t.head(), out);
      for (const auto& [a, c] : t.arg()) subterms(a, out);
      break;
    case DTerm::Kind::Diff:
      subterms(t.head(), out);
      for (const DTerm& a : t.dargs()) subterms(a, out);
      break;
    default: break;
  }
}

}  // namespace dill::testing

#endif
