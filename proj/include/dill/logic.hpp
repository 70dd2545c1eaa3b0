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

#ifndef DILL_LOGIC_HPP
#define DILL_LOGIC_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dill/algebra.hpp"
#include "dill/syntax.hpp"
#include "dill/typing.hpp"

namespace dill {

enum class Rule {
  Ax,
  Perm,
  Cut,
  ParR,
  TensR,
  Mix,
  Mix0,
  Weak,
  Coweak,
  Der,
  Coder,
  Contr,
  Cocontr,
  Sum,
  Prom,
};

const char* rule_name(Rule r);

struct Derivation;
using Deriv = std::shared_ptr<const Derivation>;

// A derivation of |- p : Gamma. Binary rules act on the last conclusion of
// each premise, unary rules on the last one or two conclusions, as in the
// sequent presentation; Perm reorders.
struct Derivation {
  Rule rule = Rule::Mix0;
  std::vector<Deriv> premises;

  Var var;                          // Ax: the plain variable x of (x, ~x ;)
  LType type;                       // Ax: A ; Weak: ?A ; Coweak: !A
  bool annotate = false;            // Weak / Coweak: annotate the leaf
  std::vector<std::size_t> perm;    // Perm: conclusion i is premise perm[i]
  std::vector<Scalar> coeffs;       // Sum: one per premise
  std::vector<LType> gamma;         // Sum: the common conclusion
  // Prom: premises[0] derives the content, premises[1..n] the arguments.

  std::size_t size() const;
};

namespace deriv {
Deriv ax(Var x, LType a);
Deriv perm(std::vector<std::size_t> sigma, Deriv d);
Deriv cut(Deriv l, Deriv r);
Deriv par(Deriv d);
Deriv tens(Deriv l, Deriv r);
Deriv mix(Deriv l, Deriv r);
Deriv mix0();
Deriv weak(LType a, Deriv d, bool annotate = false);
Deriv coweak(LType a, bool annotate = false);
Deriv der(Deriv d);
Deriv coder(Deriv d);
Deriv contr(Deriv d);
Deriv cocontr(Deriv l, Deriv r);
Deriv sum(std::vector<LType> gamma, std::vector<Scalar> coeffs, std::vector<Deriv> ds);
Deriv prom(Deriv content, std::vector<Deriv> args);
}  // namespace deriv

struct Judgment {
  Net net;
  std::vector<LType> gamma;
  Context phi;
};

// Recomputes the judgment proved by d. Throws RuleViolation.
Judgment check_derivation(const Deriv& d);

std::string print_derivation(const Deriv& d);
Deriv parse_derivation(const std::string& text);

struct SearchOptions {
  std::size_t budget = 200000;  // explored goals
  // Variants change the order in which rules are tried, which typically
  // yields a different derivation of the same net.
  bool reverse_unary = false;
  bool reverse_binary = false;
};

struct SearchResult {
  enum class Status { Found, NotFound, BudgetExceeded };
  Status status = Status::NotFound;
  Deriv derivation;
  std::size_t explored = 0;
};

const char* search_status_name(SearchResult::Status s);

// Bottom-up search for a derivation of |- p : gamma. Requires p to be
// typable against gamma under phi.
SearchResult sequentialize(const Net& p, const std::vector<LType>& gamma, const Context& phi,
                           SearchOptions opts = {});

// Up to max_count derivations with pairwise distinct printed forms, found by
// running the search under its variants.
std::vector<Deriv> sequentializations(const Net& p, const std::vector<LType>& gamma,
                                      const Context& phi, std::size_t max_count = 4,
                                      std::size_t budget = 200000);

}  // namespace dill

#endif
