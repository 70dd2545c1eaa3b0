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

#ifndef DILL_REWRITE_HPP
#define DILL_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dill/algebra.hpp"
#include "dill/error.hpp"
#include "dill/syntax.hpp"

namespace dill {

enum class RuleId {
  AxCut,
  TensPar,
  WCw,
  DCw,
  WCd,
  CCw,
  WCc,
  DCd,
  CCd,
  DCc,
  CCc,
  BoxW,
  BoxD,
  BoxC,
  ComBox,
  ComCw,
  ComCc,
  ComCd,
};

const std::vector<RuleId>& all_rules();
const char* rule_id_name(RuleId r);
std::optional<RuleId> parse_rule_id(const std::string& s);
bool is_commutative(RuleId r);

// One step of a position. Printed forms: t3, c1, l, r, 2 (child), b0
// (support element of a box content).
struct PathStep {
  enum class Kind { Tree, Cut, Left, Right, Child, Content };
  Kind kind = Kind::Tree;
  std::size_t index = 0;
  auto operator<=>(const PathStep&) const = default;
};

using Path = std::vector<PathStep>;

std::string print_path(const Path& p);

struct Redex {
  std::size_t target = 0;  // support element, in entries() order
  Path path;               // ends at a cut, or at a box for commutative rules
  RuleId rule = RuleId::AxCut;
  std::size_t arg = 0;     // commutative rules: the box argument
};

// The rule a cut matches, if any. ax-cut is reported even when blocked.
std::optional<RuleId> classify_cut(const Cut& c);

// Rewrites a cut off its net; the result is a sum of (; cuts) fragments of
// width 0 to be added to the surrounding net. ax-cut is not local and is
// handled by step().
Net basic_cut_step(const Cut& c, FreshNames& fresh);
Net promotion_cut_step(const Cut& c, FreshNames& fresh, const Semiring& k = Semiring::rat());

// Rewrites a box against its argument i. The result has width 1: the tree
// replacing the box, with cuts to be added to the enclosing net.
Net commutative_step(const Tree& box, std::size_t i, FreshNames& fresh,
                     const Semiring& k = Semiring::rat());

struct RedexOptions {
  bool inside_boxes = false;
};

// All redexes in leftmost-innermost order: support elements, then trees
// before cuts, inner positions before outer ones. Blocked ax-cuts are left
// out.
std::vector<Redex> find_redexes(const Net& n, RedexOptions opts = {});

// Fires r. Fresh names avoid everything in n. Throws NotARedex or
// SideConditionBlocked.
Net step(const Net& n, const Redex& r, FreshNames& fresh,
         const Semiring& k = Semiring::rat());

std::string describe_redex(const Net& n, const Redex& r);

struct Strategy {
  enum class Kind { LeftmostInnermost, Random, Single };
  Kind kind = Kind::LeftmostInnermost;
  std::uint64_t seed = 0;          // Random
  std::set<RuleId> rules;          // Single: the only rules that may fire
  bool inside_boxes = false;

  static Strategy leftmost_innermost() { return {}; }
  static Strategy random(std::uint64_t seed) {
    Strategy s;
    s.kind = Kind::Random;
    s.seed = seed;
    return s;
  }
  static Strategy single(std::set<RuleId> rules) {
    Strategy s;
    s.kind = Kind::Single;
    s.rules = std::move(rules);
    return s;
  }
};

struct NormalizeResult {
  Net net;
  std::size_t steps = 0;
  std::vector<std::string> trace;  // "#k rule @path : redex"
};

class FuelExhausted : public Error {
public:
  FuelExhausted(Net partial, std::size_t steps, std::vector<std::string> trace)
      : Error("FuelExhausted", "no normal form within " + std::to_string(steps) + " steps"),
        partial_(std::move(partial)), steps_(steps), trace_(std::move(trace)) {}

  const Net& partial() const { return partial_; }
  std::size_t steps() const { return steps_; }
  const std::vector<std::string>& trace() const { return trace_; }

private:
  Net partial_;
  std::size_t steps_;
  std::vector<std::string> trace_;
};

// Rewrites until no redex the strategy may fire remains.
NormalizeResult normalize(const Net& n, std::size_t fuel, const Strategy& s = {},
                          const Semiring& k = Semiring::rat());

}  // namespace dill

#endif
