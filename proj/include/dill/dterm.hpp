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

// Differential lambda-terms. Bound variables are de Bruijn indices and free
// variables are names, so alpha-equivalent terms are equal. Iterated
// derivatives D(..(D M . N1)..) . Nk are stored as one node with the Ni
// sorted, which makes the symmetry of derivatives a normal form.

#ifndef DILL_DTERM_HPP
#define DILL_DTERM_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dill/algebra.hpp"
#include "dill/error.hpp"

namespace dill {

class DTerm;
using DComb = LinComb<DTerm>;

class DTerm {
public:
  enum class Kind { Var, Bound, Abs, App, Diff };

  static DTerm var(std::string name);
  static DTerm bound(std::size_t index);
  // body refers to the new binder as index 0; hint is only used to print.
  static DTerm abs(std::string hint, DTerm body);
  static DTerm app(DTerm head, DComb arg);
  // Flattens a derivative head and sorts the arguments.
  static DTerm diff(DTerm head, std::vector<DTerm> args);

  Kind kind() const;
  const std::string& name() const;  // Var name, Abs hint
  std::size_t index() const;
  const DTerm& body() const;
  const DTerm& head() const;
  const DComb& arg() const;
  const std::vector<DTerm>& dargs() const;
  std::size_t size() const;

  bool operator==(const DTerm& o) const { return compare(*this, o) == 0; }
  bool operator<(const DTerm& o) const { return compare(*this, o) < 0; }
  friend int compare(const DTerm& a, const DTerm& b);

private:
  struct Node;
  std::shared_ptr<const Node> n_;
};

class TermFuelExhausted : public Error {
public:
  TermFuelExhausted(const std::string& what, std::size_t steps)
      : Error("FuelExhausted", what + " has no normal form within " + std::to_string(steps) +
                                   " steps"),
        steps_(steps) {}
  std::size_t steps() const { return steps_; }

private:
  std::size_t steps_;
};

namespace dterm {
// Linear builders: every constructor distributes over sums, except the
// argument of an application.
DComb var(const std::string& x);
DComb lam(const std::string& x, const DComb& body);
DComb app(const DComb& head, const DComb& arg);
DComb diff(const DComb& head, const DComb& arg);
}  // namespace dterm

std::set<std::string> free_vars(const DTerm& t);
std::set<std::string> free_vars(const DComb& t);

// Replaces the binder index at depth 0 by the free variable x, and back.
DTerm open_term(const DTerm& body, const std::string& x);
DTerm close_term(const DTerm& t, const std::string& x);

// A name that does not occur in avoid: _0, _1, ...
std::string fresh_name(const std::set<std::string>& avoid);

// M[R/x], linear in M and not in R.
DComb subst(const DTerm& m, const DComb& r, const std::string& x);
DComb subst(const DComb& m, const DComb& r, const std::string& x);

// dM/dx . N, bilinear in M and N.
DComb dsubst(const DTerm& m, const DTerm& n, const std::string& x);
DComb dsubst(const DComb& m, const DComb& n, const std::string& x);

// A redex of a combination: support element, path of child indices and,
// for a derivative redex, which argument is consumed. Children are: Abs
// body 0; App head 0 and argument terms 1..; Diff head 0 and arguments 1...
struct DRedex {
  enum class Kind { Beta, DBeta };
  std::size_t target = 0;
  std::vector<std::size_t> path;
  Kind kind = Kind::Beta;
  std::size_t arg = 0;
};

// In leftmost-outermost order.
std::vector<DRedex> find_redexes(const DComb& t);
DComb step(const DComb& t, const DRedex& r);

struct TermStrategy {
  enum class Kind { LeftmostOutermost, LeftmostInnermost, Random };
  Kind kind = Kind::LeftmostOutermost;
  std::uint64_t seed = 0;
};

struct DNormalizeResult {
  DComb term;
  std::size_t steps = 0;
};

// Throws TermFuelExhausted.
DNormalizeResult normalize_dterm(const DComb& t, std::size_t fuel, TermStrategy s = {});

// Grammar: \x. M | (M) R | D M . N | x; combinations "2 * M + 1/2 * N", "0".
DComb parse_dterm(const std::string& text);
std::string print_dterm(const DTerm& t);
std::string print_dcomb(const DComb& t);

}  // namespace dill

#endif
