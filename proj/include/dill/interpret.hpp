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

// Interpretation of derivations and nets as weighted sets of flat tuples,
// one coordinate per conclusion. K = bool gives the relational model and
// K = Scalar the weighted one.

#ifndef DILL_INTERPRET_HPP
#define DILL_INTERPRET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dill/logic.hpp"
#include "dill/model.hpp"

namespace dill {

template <class K>
using Value = std::map<std::vector<PointId>, K>;

// Every multiset of every intermediate point is kept within bound.
template <class K>
Value<K> interpret_derivation(const Deriv& d, const Valuation& v, std::size_t bound,
                              PointSpace& s);

// Tuples whose coordinates have every multiset of size at most d.
template <class K>
Value<K> restrict_value(const Value<K>& x, std::size_t d, const PointSpace& s);

// Bound used for intermediate points when the output is wanted at degree d.
std::size_t internal_bound(std::size_t d);

// A net with a derivation for each support element, all proving gamma.
struct SequentializedNet {
  Net net;
  std::vector<LType> gamma;
  std::vector<Scalar> coeffs;
  std::vector<Deriv> derivations;
};

// Infers the conclusion types (unconstrained ones grounded to `o`) and
// searches a derivation for every support element. Throws NotDerivable or
// BudgetExceeded.
SequentializedNet sequentialize_net(const Net& n,
                                    const std::vector<std::optional<LType>>& gamma = {},
                                    std::size_t budget = 200000);

template <class K>
Value<K> interpret_sequentialized(const SequentializedNet& p, const Valuation& v,
                                  std::size_t bound, PointSpace& s);

struct Interpretation {
  std::vector<LType> gamma;
  std::size_t degree = 0;
  bool stable = true;  // the value at degree + 2, restricted, agrees
};

// The value at degree d, computed with internal_bound(d) and re-checked
// with internal_bound(d + 2).
template <class K>
struct NetValue {
  Interpretation info;
  Value<K> value;
};

template <class K>
NetValue<K> interpret_net(const SequentializedNet& p, const Valuation& v, std::size_t d,
                          PointSpace& s);

// JSON list of tuples in structural order:
// [{"tuple": ["p", "[p, p]"], "val": "2"}], or plain tuples for bool.
template <class K>
std::string value_json(const Value<K>& x, const PointSpace& s);

// First tuple (in structural order) on which a and b differ.
template <class K>
std::optional<std::vector<PointId>> value_difference(const Value<K>& a, const Value<K>& b,
                                                     const PointSpace& s);

std::string print_tuple(const std::vector<PointId>& t, const PointSpace& s);

}  // namespace dill

#endif
