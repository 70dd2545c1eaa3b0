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


// Finite resource terms: variables, abstractions and applications of a term
// to a bunch (a finite multiset of terms). Every constructor is linear, so
// combinations are expanded multilinearly. Bound variables are de Bruijn
// indices, as in dterm.hpp.

#ifndef DILL_RTERM_HPP
#define DILL_RTERM_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dill/algebra.hpp"
#include "dill/dterm.hpp"

namespace dill {

class RTerm;
using RComb = LinComb<RTerm>;

class RTerm {
public:
  enum class Kind { Var, Bound, Abs, BApp };

  static RTerm var(std::string name);
  static RTerm bound(std::size_t index);
  static RTerm abs(std::string hint, RTerm body);
  static RTerm bapp(RTerm head, Multiset<RTerm> bunch);

  Kind kind() const;
  const std::string& name() const;
  std::size_t index() const;
  const RTerm& body() const;
  const RTerm& head() const;
  const Multiset<RTerm>& bunch() const;
  std::size_t size() const;

  bool operator==(const RTerm& o) const { return compare(*this, o) == 0; }
  bool operator<(const RTerm& o) const { return compare(*this, o) < 0; }
  friend int compare(const RTerm& a, const RTerm& b);

private:
  struct Node;
  std::shared_ptr<const Node> n_;
};

namespace rterm {
RComb var(const std::string& x);
RComb lam(const std::string& x, const RComb& body);
// <head>[b1, ..., bn], multilinear in the head and in every slot.
RComb bapp(const RComb& head, const std::vector<RComb>& bunch);
}  // namespace rterm

std::set<std::string> free_vars(const RTerm& t);
std::set<std::string> free_vars(const RComb& t);
RTerm open_term(const RTerm& body, const std::string& x);
RTerm close_term(const RTerm& t, const std::string& x);

// Number of occurrences of the free variable x.
std::size_t deg(const RTerm& s, const std::string& x);

// Replaces the k-th occurrence of x (left to right) by ts[k]; ts.size() must
// be deg(s, x).
RTerm subst_occurrences(const RTerm& s, const std::string& x, const std::vector<RTerm>& ts);

// s[R/x] on every occurrence, multilinear in R.
RComb subst(const RTerm& s, const RComb& r, const std::string& x);
RComb subst(const RComb& s, const RComb& r, const std::string& x);

// ds/dx . t: the sum over occurrences of x of s with that occurrence
// replaced by t.
RComb dsubst(const RTerm& s, const RTerm& t, const std::string& x);
RComb dsubst(const RComb& s, const RComb& t, const std::string& x);

// <\x. s>[t1..tn] in one step: the sum over all bijections between the
// bunch and the occurrences of x, or 0 when deg_x s != n.
RComb bunch_reduce(const RTerm& redex);

struct RRedex {
  std::size_t target = 0;
  std::vector<std::size_t> path;  // Abs body 0; BApp head 0, bunch elements 1..
};

std::vector<RRedex> find_redexes(const RComb& t);
RComb step(const RComb& t, const RRedex& r);

struct RNormalizeResult {
  RComb term;
  std::size_t steps = 0;
};

// Throws TermFuelExhausted.
RNormalizeResult normalize_resource(const RComb& t, std::size_t fuel,
                                    TermStrategy s = {});

// Grammar: x | \x. s | <s>[t1, ..., tn] | (s); combinations as for nets.
RComb parse_rterm(const std::string& text);
std::string print_rterm(const RTerm& t);
std::string print_rcomb(const RComb& t);

}  // namespace dill

#endif
